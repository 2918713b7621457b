#include "levelset/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace levelset {

Grid::Grid(std::vector<double> lo, std::vector<double> hi, std::vector<Index> n) {
  if (lo.size() != hi.size() || lo.size() != n.size())
    throw ConfigError("grid: lo, hi, n must have matching lengths");
  if (lo.empty() || lo.size() > 2)
    throw ConfigError("grid: dimension must be 1 or 2");
  dim_ = static_cast<int>(lo.size());
  size_ = 1;
  for (int a = 0; a < dim_; ++a) {
    if (!(hi[a] > lo[a])) {
      std::ostringstream os;
      os << "grid: degenerate bounds on axis " << a << " (lo=" << lo[a]
         << ", hi=" << hi[a] << ")";
      throw ConfigError(os.str());
    }
    if (n[a] < 3) {
      std::ostringstream os;
      os << "grid: need at least 3 nodes per axis, got " << n[a] << " on axis " << a;
      throw ConfigError(os.str());
    }
    lo_[a] = lo[a];
    hi_[a] = hi[a];
    n_[a] = n[a];
    dx_[a] = (hi[a] - lo[a]) / static_cast<double>(n[a] - 1);
    auto c = std::make_shared<ArrayXd>(n[a]);
    for (Index i = 0; i < n[a]; ++i) (*c)(i) = lo[a] + static_cast<double>(i) * dx_[a];
    coords_[a] = std::move(c);
    size_ *= n[a];
  }
}

double Grid::min_dx() const {
  return dim_ == 1 ? dx_[0] : std::min(dx_[0], dx_[1]);
}

bool Grid::same_layout(const Grid& other) const {
  if (dim_ != other.dim_) return false;
  for (int a = 0; a < dim_; ++a)
    if (lo_[a] != other.lo_[a] || hi_[a] != other.hi_[a] || n_[a] != other.n_[a])
      return false;
  return true;
}

double Field::at_position(const Vec2& x) const {
  std::array<Index, 2> idx{0, 0};
  for (int a = 0; a < grid.dim(); ++a) {
    auto i = static_cast<Index>(std::lround((x[a] - grid.lo(a)) / grid.dx(a)));
    idx[a] = std::clamp<Index>(i, 0, grid.n(a) - 1);
  }
  return values(grid.flatten(idx[0], idx[1]));
}

std::vector<double> Trajectory::times() const {
  std::vector<double> ts;
  ts.reserve(snapshots.size());
  for (const auto& s : snapshots) ts.push_back(s.time);
  return ts;
}

const Field& Trajectory::at_time(double t, double tol) const {
  if (snapshots.empty()) throw UsageError("trajectory: no snapshots");
  const Field* best = &snapshots.front();
  double gap = std::abs(best->time - t);
  for (const auto& s : snapshots) {
    double g = std::abs(s.time - t);
    if (g < gap) {
      gap = g;
      best = &s;
    }
  }
  if (gap > tol) {
    std::ostringstream os;
    os << "trajectory: no snapshot within " << tol << " of t=" << t
       << " (closest is " << best->time << ")";
    throw UsageError(os.str());
  }
  return *best;
}

OneSided one_sided_gradients(const Field& f, Index id) {
  const Grid& g = f.grid;
  OneSided d;
  std::array<Index, 2> idx{g.ix(id), g.dim() == 2 ? g.iy(id) : 0};
  for (int a = 0; a < g.dim(); ++a) {
    const Index i = idx[a];
    const double inv = 1.0 / g.dx(a);
    const Index stride = (a == 0) ? 1 : g.n(0);
    const double u = f.values(id);
    const bool has_minus = i > 0;
    const bool has_plus = i < g.n(a) - 1;
    double dm = has_minus ? (u - f.values(id - stride)) * inv : 0.0;
    double dp = has_plus ? (f.values(id + stride) - u) * inv : 0.0;
    if (!has_minus) dm = dp;  // ghost by linear extrapolation
    if (!has_plus) dp = dm;
    d.minus[a] = dm;
    d.plus[a] = dp;
  }
  return d;
}

Field sample(const std::function<double(const Vec2&)>& f, const Grid& grid, double t) {
  ArrayXd v(grid.size());
  for (Index id = 0; id < grid.size(); ++id) {
    const double y = f(grid.position(id));
    if (!std::isfinite(y)) {
      std::ostringstream os;
      Vec2 p = grid.position(id);
      os << "sample: non-finite value at node " << id << " (x=" << p.x();
      if (grid.dim() == 2) os << ", y=" << p.y();
      os << ")";
      throw ConfigError(os.str());
    }
    v(id) = y;
  }
  return Field(grid, std::move(v), t);
}

double linf_distance(const Field& a, const Field& b) {
  if (!a.grid.same_layout(b.grid))
    throw UsageError("linf_distance: fields live on different grids");
  return (a.values - b.values).abs().maxCoeff();
}

double linf_distance(const Field& a, const Field& b,
                     const std::function<bool(Index)>& region) {
  if (!a.grid.same_layout(b.grid))
    throw UsageError("linf_distance: fields live on different grids");
  double m = 0.0;
  for (Index id = 0; id < a.grid.size(); ++id)
    if (region(id)) m = std::max(m, std::abs(a.values(id) - b.values(id)));
  return m;
}

}  // namespace levelset
