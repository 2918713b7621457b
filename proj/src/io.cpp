#include "levelset/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace levelset {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path.string());
  os << std::setprecision(17);
  return os;
}

}  // namespace

void write_field_csv(const std::filesystem::path& path, const Field& field) {
  auto os = open_out(path);
  os << "# t=" << field.time << "\n";
  const Grid& g = field.grid;
  if (g.dim() == 1) {
    for (Index i = 0; i < g.n(0); ++i)
      os << g.coord(0, i) << "," << field.values(i) << "\n";
  } else {
    for (Index iy = 0; iy < g.n(1); ++iy)
      for (Index ix = 0; ix < g.n(0); ++ix)
        os << g.coord(0, ix) << "," << g.coord(1, iy) << ","
           << field.values(g.flatten(ix, iy)) << "\n";
  }
  if (!os) throw IoError("write failed: " + path.string());
}

Field read_field_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path.string());
  std::string header;
  std::getline(is, header);
  double t = 0.0;
  if (auto pos = header.find("t="); pos != std::string::npos)
    t = std::stod(header.substr(pos + 2));
  std::vector<double> xs, ys, us;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> cols;
    while (std::getline(ls, tok, ',')) cols.push_back(std::stod(tok));
    if (cols.size() == 2) {
      xs.push_back(cols[0]);
      us.push_back(cols[1]);
    } else if (cols.size() == 3) {
      xs.push_back(cols[0]);
      ys.push_back(cols[1]);
      us.push_back(cols[2]);
    } else {
      throw IoError("malformed field CSV row in " + path.string());
    }
  }
  if (us.empty()) throw IoError("empty field CSV: " + path.string());
  if (ys.empty()) {
    Grid g = Grid::line(xs.front(), xs.back(), static_cast<Index>(xs.size()));
    ArrayXd v = Eigen::Map<const ArrayXd>(us.data(), static_cast<Index>(us.size()));
    return Field(std::move(g), std::move(v), t);
  }
  Index nx = 0;
  while (nx < static_cast<Index>(xs.size()) && ys[nx] == ys[0]) ++nx;
  const Index ny = static_cast<Index>(us.size()) / nx;
  Grid g = Grid::rect(Vec2(xs.front(), ys.front()), Vec2(xs.back(), ys.back()), nx, ny);
  ArrayXd v = Eigen::Map<const ArrayXd>(us.data(), static_cast<Index>(us.size()));
  return Field(std::move(g), std::move(v), t);
}

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj,
                      const std::string& stem) {
  std::filesystem::create_directories(dir);
  auto manifest = open_out(dir / "manifest.csv");
  manifest << "index,time,file\n";
  for (size_t i = 0; i < traj.snapshots.size(); ++i) {
    std::ostringstream name;
    name << stem << "_" << std::setw(5) << std::setfill('0') << i << ".csv";
    write_field_csv(dir / name.str(), traj.snapshots[i]);
    manifest << i << "," << std::setprecision(17) << traj.snapshots[i].time << ","
             << name.str() << "\n";
  }
  if (!manifest) throw IoError("write failed: " + (dir / "manifest.csv").string());
}

void write_interface_csv(const std::filesystem::path& path, const InterfaceSet& iface) {
  auto os = open_out(path);
  for (const auto& p : iface.points) {
    os << iface.time << "," << p.x();
    if (iface.dim == 2) os << "," << p.y();
    os << "\n";
  }
  if (!os) throw IoError("write failed: " + path.string());
}

}  // namespace levelset
