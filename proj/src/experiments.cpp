#include "levelset/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "levelset/cell.hpp"
#include "levelset/geometry.hpp"
#include "levelset/io.hpp"
#include "levelset/oracles.hpp"

namespace levelset {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
  throw ConfigError("config field `" + path + "`: " + why);
}

const json& require(const json& cfg, const std::string& key, const std::string& path) {
  auto it = cfg.find(key);
  if (it == cfg.end()) bad_field(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

double require_number(const json& cfg, const std::string& key, const std::string& path) {
  const json& v = require(cfg, key, path);
  if (!v.is_number()) bad_field(path + "." + key, "expected a number");
  return v.get<double>();
}

double number_or(const json& cfg, const std::string& key, double fallback) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  if (!it->is_number()) bad_field(key, "expected a number");
  return it->get<double>();
}

std::vector<double> number_list(const json& v, const std::string& path) {
  if (!v.is_array()) bad_field(path, "expected a list of numbers");
  try {
    return v.get<std::vector<double>>();
  } catch (const json::exception&) {
    bad_field(path, "expected a list of numbers");
  }
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream os(p);
  if (!os) throw IoError("cannot open for writing: " + p.string());
  os << std::setprecision(17);
  return os;
}

double measured_lipschitz(const Field& f) {
  double m = 0.0;
  const Grid& g = f.grid;
  for (Index id = 0; id < g.size(); ++id) {
    if (g.ix(id) + 1 < g.n(0))
      m = std::max(m, std::abs(f.values(id + 1) - f.values(id)) / g.dx(0));
    if (g.dim() == 2 && g.iy(id) + 1 < g.n(1))
      m = std::max(m, std::abs(f.values(id + g.n(0)) - f.values(id)) / g.dx(1));
  }
  return m;
}

/// Distance from the moving front to the domain boundary minus the
/// propagation radius L2*T; negative means the front may reach the boundary.
/// Only active interface nodes count: sign changes and zero nodes adjacent
/// to nonzero values. Interior zero plateaus are inert until reached.
double cone_margin(const Field& u0, double l2, double T) {
  const Grid& g = u0.grid;
  double closest = std::numeric_limits<double>::infinity();
  auto note = [&](Index id) {
    const Vec2 p = g.position(id);
    for (int a = 0; a < g.dim(); ++a)
      closest = std::min({closest, p[a] - g.lo(a), g.hi(a) - p[a]});
  };
  auto is_zero = [&](Index id) { return std::abs(u0.values(id)) <= kZeroSnapTol; };
  for (Index id = 0; id < g.size(); ++id) {
    const Index ix = g.ix(id), iy = g.dim() == 2 ? g.iy(id) : 0;
    const Index strides[2] = {1, g.n(0)};
    const Index counts[2] = {g.n(0), g.dim() == 2 ? g.n(1) : 1};
    const Index pos[2] = {ix, iy};
    for (int a = 0; a < g.dim(); ++a) {
      if (pos[a] + 1 >= counts[a]) continue;
      const Index nb = id + strides[a];
      const bool z0 = is_zero(id), z1 = is_zero(nb);
      if ((z0 != z1) || (!z0 && !z1 && u0.values(id) * u0.values(nb) < 0.0)) {
        note(id);
        note(nb);
      }
    }
  }
  return closest - l2 * T;
}

void emit_plot_script(const fs::path& dir, const std::vector<std::string>& csvs) {
  auto os = open_out(dir / "plot.py");
  os << "#!/usr/bin/env python3\n"
     << "\"\"\"Plot the CSV artifacts sitting next to this script.\"\"\"\n"
     << "import csv, os, sys\n"
     << "import matplotlib\n"
     << "matplotlib.use(\"Agg\")\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "here = os.path.dirname(os.path.abspath(__file__))\n"
     << "files = " << [&] {
          std::ostringstream lst;
          lst << "[";
          for (size_t i = 0; i < csvs.size(); ++i)
            lst << (i ? ", " : "") << "\"" << csvs[i] << "\"";
          lst << "]";
          return lst.str();
        }() << "\n"
     << "for name in files:\n"
     << "    path = os.path.join(here, name)\n"
     << "    if not os.path.exists(path):\n"
     << "        continue\n"
     << "    with open(path) as fh:\n"
     << "        rows = [r for r in csv.reader(fh) if r and not r[0].startswith(\"#\")]\n"
     << "    cols = list(zip(*[[float(v) for v in r] for r in rows]))\n"
     << "    plt.figure()\n"
     << "    if len(cols) >= 2:\n"
     << "        plt.plot(cols[0], cols[-1], marker=\".\")\n"
     << "    plt.xlabel(\"column 0\")\n"
     << "    plt.ylabel(\"last column\")\n"
     << "    plt.title(name)\n"
     << "    plt.savefig(os.path.join(here, name + \".png\"), dpi=120)\n"
     << "print(\"plots written next to the CSVs\")\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void parallel_over(size_t count, const std::function<void(size_t)>& fn) {
  const int workers = std::max(1, std::min<int>(max_threads(), static_cast<int>(count)));
  if (workers == 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

json base_report(const json& config, const Grid& grid, const Field& u0,
                 const H1Spec& h1) {
  json constants;
  constants["dx"] = grid.dim() == 1 ? json(grid.dx(0)) : json{grid.dx(0), grid.dx(1)};
  constants["L0_measured"] = measured_lipschitz(u0);
  constants["L1"] = h1.lipschitz_x();
  constants["L2"] = h1.max_speed();
  json rep;
  rep["config"] = config;
  rep["constants"] = constants;
  rep["warnings"] = json::array();
  return rep;
}

void attach_corrector(json& rep, const CorrectorSpec& corr, double theta) {
  rep["constants"]["eps0"] = corr.eps0;
  rep["constants"]["theta"] = theta;
  rep["constants"]["h_variant"] =
      corr.h_variant == CorrectorSpec::HVariant::Signed ? "signed" : "plus";
}

void write_report(const fs::path& dir, const json& rep) {
  auto os = open_out(dir / "report.json");
  os << rep.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// experiment bodies

json run_evolve(const json& cfg, const fs::path& dir) {
  Timer timer;
  const Grid grid = parse_grid(cfg);
  const auto u0_fn = make_initial_datum(require(cfg, "problem", ""));
  const Field u0 = sample(u0_fn, grid, 0.0);
  const H1Spec h1 = parse_h1(cfg);
  const CflPolicy policy = parse_policy(cfg);
  const double T = require_number(cfg, "T", "");
  SolveOptions opts;
  opts.snap_every = static_cast<int>(number_or(cfg, "snap_every", 0));
  if (cfg.contains("snap_times"))
    opts.snap_times = number_list(cfg.at("snap_times"), "snap_times");

  const std::string solver = cfg.value("solver", "base");
  json rep = base_report(cfg, grid, u0, h1);
  Trajectory traj;
  if (solver == "base") {
    traj = solve_base(u0, h1, T, policy, opts);
  } else if (solver == "theta") {
    const double theta = require_number(cfg, "theta", "");
    const CorrectorSpec corr = parse_corrector(cfg, grid.min_dx());
    traj = solve_theta(u0, h1, corr, theta, T, policy, opts);
    attach_corrector(rep, corr, theta);
  } else if (solver == "averaged") {
    const double theta = require_number(cfg, "theta", "");
    const CorrectorSpec corr = parse_corrector(cfg, grid.min_dx());
    traj = solve_averaged(u0, h1, corr, theta, T, policy, opts);
    attach_corrector(rep, corr, theta);
  } else if (solver == "iterative") {
    const Schedule sched = parse_schedule(cfg);
    const CorrectorSpec corr = parse_corrector(cfg, grid.min_dx());
    traj = solve_iterative(u0, h1, corr, sched, T, policy, opts);
    attach_corrector(rep, corr, sched.theta());
    rep["constants"]["k1"] = sched.k1;
    rep["constants"]["k2"] = sched.k2;
    rep["constants"]["dt_split"] = sched.dt_split;
    rep["constants"]["eps"] = sched.eps();
  } else {
    bad_field("solver", "unknown solver `" + solver + "`");
  }
  write_trajectory(dir / "snapshots", traj);
  const double margin = cone_margin(u0, h1.max_speed(), T);
  rep["constants"]["cone_margin"] = margin;
  if (margin <= 0.0)
    rep["warnings"].push_back(
        "propagation cone reaches the domain boundary before T; boundary "
        "extrapolation may pollute the run");
  rep["constants"]["dt_max"] = traj.max_dt;
  rep["snapshots"] = traj.snapshots.size();
  rep["timings"] = {{"total_s", timer.seconds()}};
  write_report(dir, rep);
  emit_plot_script(dir, {"snapshots/snap_00000.csv"});
  return rep;
}

json run_theta_sweep(const json& cfg, const fs::path& dir) {
  Timer timer;
  const Grid grid = parse_grid(cfg);
  const json& problem = require(cfg, "problem", "");
  const std::string problem_name = require(problem, "name", "problem").get<std::string>();
  if (problem_name != "two_bumps")
    bad_field("problem.name", "theta-sweep needs the two_bumps exact oracle");
  const auto u0_fn = make_initial_datum(problem);
  const Field u0 = sample(u0_fn, grid, 0.0);
  const H1Spec h1 = parse_h1(cfg);
  const CorrectorSpec corr = parse_corrector(cfg, grid.min_dx());
  const CflPolicy policy = parse_policy(cfg);
  const double T = require_number(cfg, "T", "");
  const auto thetas = number_list(require(cfg, "thetas", ""), "thetas");
  if (thetas.empty()) bad_field("thetas", "must not be empty");
  const double region_abs = number_or(cfg, "region_abs_x", 0.0);

  const Field d_exact = sample(
      [&](const Vec2& x) { return oracles::example_two_bumps(x.x(), T).d; }, grid, T);
  auto region = [&](Index id) {
    return region_abs <= 0.0 || std::abs(grid.position(id).x()) <= region_abs;
  };

  std::vector<double> errors(thetas.size());
  std::vector<Trajectory> runs(thetas.size());
  parallel_over(thetas.size(), [&](size_t i) {
    runs[i] = solve_theta(u0, h1, corr, thetas[i], T, policy, {});
    errors[i] = linf_distance(runs[i].back(), d_exact, region);
  });

  fs::create_directories(dir);
  auto errs = open_out(dir / "errors.csv");
  errs << "theta,error\n";
  for (size_t i = 0; i < thetas.size(); ++i) {
    errs << thetas[i] << "," << errors[i] << "\n";
    std::ostringstream name;
    name << "theta_" << thetas[i] << ".csv";
    write_field_csv(dir / name.str(), runs[i].back());
  }
  json rep = base_report(cfg, grid, u0, h1);
  attach_corrector(rep, corr, thetas.back());
  rep["errors"] = errors;
  rep["thetas"] = thetas;
  bool decreasing = true;
  for (size_t i = 1; i < errors.size(); ++i) decreasing &= errors[i] < errors[i - 1];
  rep["strictly_decreasing"] = decreasing;
  rep["timings"] = {{"total_s", timer.seconds()}};
  const double margin = cone_margin(u0, h1.max_speed(), T);
  rep["constants"]["cone_margin"] = margin;
  if (margin <= 0.0) rep["warnings"].push_back("propagation cone reaches the boundary");
  write_report(dir, rep);
  emit_plot_script(dir, {"errors.csv"});
  return rep;
}

json run_reinit(const json& cfg, const fs::path& dir) {
  Timer timer;
  const Grid grid = parse_grid(cfg);
  const auto u0_fn = make_initial_datum(require(cfg, "problem", ""));
  const Field u0 = sample(u0_fn, grid, 0.0);
  const CorrectorSpec corr = parse_corrector(cfg, grid.min_dx());
  const CflPolicy policy = parse_policy(cfg);
  const double stop_tol = number_or(cfg, "stop_tol", 1e-6);
  const long max_steps = static_cast<long>(number_or(cfg, "max_steps", 100000));
  const double band = number_or(cfg, "band", 0.5);

  long steps = 0;
  const Field relaxed = relax_to_distance(u0, corr, policy, stop_tol, max_steps, &steps);
  const double deviation = gradient_deviation(relaxed, band);

  fs::create_directories(dir);
  write_field_csv(dir / "initial.csv", u0);
  write_field_csv(dir / "relaxed.csv", relaxed);
  json rep = base_report(cfg, grid, u0, H1Spec::constant(0.0));
  attach_corrector(rep, corr, 1.0);
  rep["steps"] = steps;
  rep["gradient_deviation"] = deviation;
  rep["band"] = band;
  rep["stop_tol"] = stop_tol;
  rep["timings"] = {{"total_s", timer.seconds()}};
  write_report(dir, rep);
  emit_plot_script(dir, {"relaxed.csv"});
  return rep;
}

json run_homogenize(const json& cfg, const fs::path& dir) {
  Timer timer;
  const Grid grid = parse_grid(cfg);
  const auto u0_fn = make_initial_datum(require(cfg, "problem", ""));
  const Field u0 = sample(u0_fn, grid, 0.0);
  const H1Spec h1 = parse_h1(cfg);
  const CorrectorSpec corr = parse_corrector(cfg, grid.min_dx());
  const CflPolicy policy = parse_policy(cfg);
  const double T = require_number(cfg, "T", "");
  const auto epsilons = number_list(require(cfg, "epsilons", ""), "epsilons");
  if (epsilons.empty()) bad_field("epsilons", "must not be empty");
  int k1 = 1, k2 = 1;
  if (cfg.contains("schedule")) {
    k1 = static_cast<int>(require_number(cfg.at("schedule"), "k1", "schedule"));
    k2 = static_cast<int>(require_number(cfg.at("schedule"), "k2", "schedule"));
  }
  const double theta = static_cast<double>(k2) / static_cast<double>(k1);

  const Trajectory avg = solve_averaged(u0, h1, corr, theta, T, policy, {});
  std::vector<double> errors(epsilons.size());
  parallel_over(epsilons.size(), [&](size_t i) {
    const Schedule sched(k1, k2, epsilons[i] / static_cast<double>(k1 + k2));
    const Trajectory it = solve_iterative(u0, h1, corr, sched, T, policy, {});
    errors[i] = linf_distance(it.back(), avg.back());
  });

  fs::create_directories(dir);
  auto errs = open_out(dir / "errors.csv");
  errs << "eps,error\n";
  for (size_t i = 0; i < epsilons.size(); ++i)
    errs << epsilons[i] << "," << errors[i] << "\n";
  json rep = base_report(cfg, grid, u0, h1);
  attach_corrector(rep, corr, theta);
  rep["constants"]["k1"] = k1;
  rep["constants"]["k2"] = k2;
  rep["epsilons"] = epsilons;
  rep["errors"] = errors;
  rep["timings"] = {{"total_s", timer.seconds()}};
  write_report(dir, rep);
  emit_plot_script(dir, {"errors.csv"});
  return rep;
}

json run_distance(const json& cfg, const fs::path& dir) {
  Timer timer;
  const Grid grid = parse_grid(cfg);
  const auto u0_fn = make_initial_datum(require(cfg, "problem", ""));
  const Field u0 = sample(u0_fn, grid, 0.0);
  const H1Spec h1 = parse_h1(cfg);
  const CflPolicy policy = parse_policy(cfg);
  const double T = require_number(cfg, "T", "");
  SolveOptions opts;
  opts.snap_every = static_cast<int>(number_or(cfg, "snap_every", 0));
  if (cfg.contains("snap_times"))
    opts.snap_times = number_list(cfg.at("snap_times"), "snap_times");
  const Trajectory traj = solve_base(u0, h1, T, policy, opts);

  fs::create_directories(dir);
  write_trajectory(dir / "snapshots", traj);
  auto stats = open_out(dir / "distance_stats.csv");
  stats << "time,interface_points,max_abs_distance\n";
  for (size_t i = 0; i < traj.snapshots.size(); ++i) {
    const Field d = signed_distance_field(traj.snapshots[i]);
    std::ostringstream name;
    name << "distance_" << std::setw(5) << std::setfill('0') << i << ".csv";
    write_field_csv(dir / name.str(), d);
    stats << d.time << "," << extract_interface(traj.snapshots[i]).points.size() << ","
          << d.values.abs().maxCoeff() << "\n";
  }
  json rep = base_report(cfg, grid, u0, h1);
  rep["snapshots"] = traj.snapshots.size();
  rep["timings"] = {{"total_s", timer.seconds()}};
  write_report(dir, rep);
  emit_plot_script(dir, {"distance_stats.csv"});
  return rep;
}

json run_continuity(const json& cfg, const fs::path& dir) {
  Timer timer;
  const Grid grid = parse_grid(cfg);
  const auto u0_fn = make_initial_datum(require(cfg, "problem", ""));
  const Field u0 = sample(u0_fn, grid, 0.0);
  const H1Spec h1 = parse_h1(cfg);
  const CflPolicy policy = parse_policy(cfg);
  const double T = require_number(cfg, "T", "");
  SolveOptions opts;
  opts.snap_every = static_cast<int>(number_or(cfg, "snap_every", 1));
  const auto& pts = require(cfg, "points", "");
  if (!pts.is_array() || pts.empty()) bad_field("points", "expected nonempty array");

  std::vector<double> snap_times;
  for (const auto& p : pts) snap_times.push_back(p.at("t").get<double>());
  opts.snap_times = snap_times;
  const Trajectory traj = solve_base(u0, h1, T, policy, opts);

  ContinuityParams params;
  params.eps_ball = number_or(cfg, "eps_ball", 0.0);
  params.delta = number_or(cfg, "delta", 0.0);

  fs::create_directories(dir);
  auto out = open_out(dir / "verdicts.csv");
  out << (grid.dim() == 1 ? "x,t,verdict,n_nearest,n_extinction\n"
                          : "x,y,t,verdict,n_nearest,n_extinction\n");
  json verdicts = json::array();
  for (const auto& p : pts) {
    Vec2 x(p.at("x").get<double>(), grid.dim() == 2 ? p.at("y").get<double>() : 0.0);
    const double t = p.at("t").get<double>();
    const ContinuityVerdict v = classify_continuity(traj, x, t, params);
    const long n_ext = std::count(v.extinction.begin(), v.extinction.end(), true);
    out << x.x() << ",";
    if (grid.dim() == 2) out << x.y() << ",";
    out << t << "," << (v.continuous ? "continuous" : "discontinuous") << ","
        << v.nearest.size() << "," << n_ext << "\n";
    verdicts.push_back({{"x", x.x()},
                        {"t", t},
                        {"continuous", v.continuous},
                        {"eps_ball", v.eps_ball},
                        {"delta", v.delta},
                        {"dx", v.dx}});
  }
  json rep = base_report(cfg, grid, u0, h1);
  rep["verdicts"] = verdicts;
  rep["timings"] = {{"total_s", timer.seconds()}};
  write_report(dir, rep);
  emit_plot_script(dir, {"verdicts.csv"});
  return rep;
}

json run_cell(const json& cfg, const fs::path& dir) {
  Timer timer;
  const json& prof = require(cfg, "profile", "");
  const double theta = require_number(prof, "theta", "profile");
  const double h1_value = require_number(prof, "h1_value", "profile");
  const double h2_value = require_number(prof, "h2_value", "profile");
  const PeriodicProfile profile = PeriodicProfile::two_phase(h1_value, h2_value, theta);
  const double lambda = cell_lambda(profile);
  const double v0 = number_or(cfg, "v0", 0.0);
  const long samples = static_cast<long>(number_or(cfg, "samples", 101));

  fs::create_directories(dir);
  auto out = open_out(dir / "cell.csv");
  out << "tau,v\n";
  for (long i = 0; i < samples; ++i) {
    const double tau = static_cast<double>(i) / static_cast<double>(samples - 1);
    out << tau << "," << cell_corrector(profile, v0, tau) << "\n";
  }
  json rep;
  rep["config"] = cfg;
  rep["lambda"] = lambda;
  rep["periodicity_defect"] = std::abs(cell_corrector(profile, v0, 1.0) - v0);
  rep["timings"] = {{"total_s", timer.seconds()}};
  write_report(dir, rep);
  emit_plot_script(dir, {"cell.csv"});
  return rep;
}

}  // namespace

std::function<double(const Vec2&)> make_initial_datum(const json& problem) {
  const std::string name = require(problem, "name", "problem").get<std::string>();
  if (name == "two_bumps")
    return [](const Vec2& x) { return oracles::two_bumps_u0(x.x()); };
  if (name == "linear") {
    const double slope = problem.value("slope", 1.0);
    return [slope](const Vec2& x) { return slope * x.x(); };
  }
  if (name == "bounded_speed_bump")
    return [](const Vec2& x) { return std::max(1.0 - std::abs(x.x()), 0.0); };
  if (name == "circle") {
    const double R = problem.value("radius", 1.0);
    return [R](const Vec2& x) { return R - x.norm(); };
  }
  if (name == "smooth_circle") {
    const double R = problem.value("radius", 1.0);
    const double a = problem.value("smoothing", 0.25);
    return [R, a](const Vec2& x) { return R - std::sqrt(x.squaredNorm() + a * a); };
  }
  if (name == "scaled_circle_distance") {
    const double R = problem.value("radius", 1.0);
    const double s = problem.value("scale", 0.2);
    return [R, s](const Vec2& x) { return s * (x.norm() - R); };
  }
  bad_field("problem.name", "unknown problem `" + name + "`");
}

namespace {

/// Accept a scalar or a per-axis list.
template <typename T>
std::vector<T> axis_list(const json& v, const std::string& path) {
  try {
    if (v.is_array()) return v.get<std::vector<T>>();
    return {v.get<T>()};
  } catch (const json::exception&) {
    bad_field(path, "expected a number or a per-axis list");
  }
}

}  // namespace

Grid parse_grid(const json& cfg) {
  const json& g = require(cfg, "grid", "");
  const auto lo = axis_list<double>(require(g, "lo", "grid"), "grid.lo");
  const auto hi = axis_list<double>(require(g, "hi", "grid"), "grid.hi");
  const auto n = axis_list<Index>(require(g, "n", "grid"), "grid.n");
  try {
    return Grid(lo, hi, n);
  } catch (const ConfigError& e) {
    bad_field("grid", e.what());
  }
}

H1Spec parse_h1(const json& cfg) {
  if (!cfg.contains("h1")) return H1Spec::constant(1.0);
  const json& h = cfg.at("h1");
  const std::string kind = h.value("velocity", "constant");
  if (kind == "constant") return H1Spec::constant(h.value("a", 1.0));
  if (kind == "bounded-bump") return H1Spec::bounded_bump();
  if (kind == "radial-ramp")
    return H1Spec::radial_ramp(h.value("a", 1.0), h.value("b", 0.0), h.value("r0", 1.0));
  bad_field("h1.velocity", "unknown velocity `" + kind + "`");
}

CorrectorSpec parse_corrector(const json& cfg, double default_eps0) {
  double eps0 = default_eps0;
  auto h_variant = CorrectorSpec::HVariant::Signed;
  auto beta_kind = CorrectorSpec::BetaKind::SmoothSign;
  if (cfg.contains("corrector")) {
    const json& c = cfg.at("corrector");
    eps0 = c.value("eps0", default_eps0);
    const std::string h = c.value("h", "signed");
    if (h == "signed")
      h_variant = CorrectorSpec::HVariant::Signed;
    else if (h == "plus")
      h_variant = CorrectorSpec::HVariant::Plus;
    else
      bad_field("corrector.h", "expected `signed` or `plus`");
    const std::string b = c.value("beta", "smooth-sign");
    if (b == "smooth-sign")
      beta_kind = CorrectorSpec::BetaKind::SmoothSign;
    else if (b == "smooth-sign-squared")
      beta_kind = CorrectorSpec::BetaKind::SmoothSignSquared;
    else
      bad_field("corrector.beta", "expected `smooth-sign` or `smooth-sign-squared`");
  }
  try {
    return CorrectorSpec(eps0, h_variant, beta_kind);
  } catch (const ConfigError& e) {
    bad_field("corrector", e.what());
  }
}

Schedule parse_schedule(const json& cfg) {
  const json& s = require(cfg, "schedule", "");
  try {
    return Schedule(static_cast<int>(require_number(s, "k1", "schedule")),
                    static_cast<int>(require_number(s, "k2", "schedule")),
                    require_number(s, "dt_split", "schedule"));
  } catch (const ConfigError& e) {
    bad_field("schedule", e.what());
  }
}

CflPolicy parse_policy(const json& cfg) {
  CflPolicy policy;
  policy.cfl_number = number_or(cfg, "cfl", 0.5);
  const std::string integ = cfg.value("integrator", "rk2");
  if (integ == "euler")
    policy.integrator = CflPolicy::Integrator::Euler;
  else if (integ == "rk2")
    policy.integrator = CflPolicy::Integrator::Rk2;
  else
    bad_field("integrator", "expected `euler` or `rk2`");
  try {
    policy.validate();
  } catch (const ConfigError& e) {
    bad_field("cfl", e.what());
  }
  return policy;
}

json run_experiment(const json& config, const fs::path& out_dir) {
  const std::string name = require(config, "experiment", "").get<std::string>();
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create artifact directory " + out_dir.string());
  if (name == "evolve") return run_evolve(config, out_dir);
  if (name == "theta-sweep") return run_theta_sweep(config, out_dir);
  if (name == "reinit") return run_reinit(config, out_dir);
  if (name == "homogenize") return run_homogenize(config, out_dir);
  if (name == "distance") return run_distance(config, out_dir);
  if (name == "continuity") return run_continuity(config, out_dir);
  if (name == "cell") return run_cell(config, out_dir);
  bad_field("experiment", "unknown experiment `" + name + "`");
}

json run_config_file(const fs::path& config_path, const fs::path& out_dir) {
  std::ifstream is(config_path);
  if (!is) throw IoError("cannot open config: " + config_path.string());
  json config;
  try {
    config = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  fs::path dir = out_dir;
  if (dir.empty() && config.contains("outputs"))
    dir = config.at("outputs").value("dir", "");
  if (dir.empty()) dir = config_path.stem().concat("_artifacts");
  json rep = run_experiment(config, dir);
  rep["artifact_dir"] = dir.string();
  return rep;
}

void report_artifacts(const fs::path& dir, std::ostream& os) {
  const fs::path errors_csv = dir / "errors.csv";
  if (!fs::exists(errors_csv)) {
    if (!fs::exists(dir / "report.json"))
      throw IoError("no manifest in " + dir.string());
    std::ifstream is(dir / "report.json");
    os << is.rdbuf();
    return;
  }
  std::ifstream is(errors_csv);
  if (!is) throw IoError("cannot open " + errors_csv.string());
  std::string line;
  std::getline(is, line);  // header
  std::vector<std::pair<double, double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  if (rows.empty()) throw IoError("empty errors table in " + errors_csv.string());
  os << std::setw(14) << "parameter" << std::setw(16) << "error" << std::setw(16)
     << "observed order\n";
  bool decreasing = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    os << std::setw(14) << rows[i].first << std::setw(16) << rows[i].second;
    if (i + 1 < rows.size() && rows[i + 1].second > 0.0) {
      os << std::setw(16) << std::log2(rows[i].second / rows[i + 1].second);
      decreasing &= rows[i + 1].second < rows[i].second;
    }
    os << "\n";
  }
  os << (decreasing ? "errors strictly decreasing\n" : "errors not monotone\n");
}

int max_threads() {
  if (const char* env = std::getenv("LEVELSET_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace levelset
