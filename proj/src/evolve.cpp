#include "levelset/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace levelset {

namespace {

double time_eps(double t_end) { return 1e-12 * std::max(1.0, std::abs(t_end)); }

std::vector<double> sorted_unique(std::vector<double> ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

void push_snapshot(Trajectory& traj, const Field& u) {
  if (!traj.snapshots.empty() &&
      std::abs(traj.snapshots.back().time - u.time) <= time_eps(u.time)) {
    traj.snapshots.back() = u;
    return;
  }
  traj.snapshots.push_back(u);
}

/// Advance u to t_end, shortening steps to land on requested snapshot times
/// and on t_end itself.
void march(Field& u, double t_end, const std::vector<RhsTerm>& parts,
           const std::function<double(const Field&)>& limit, const CflPolicy& policy,
           const SolveOptions& opts, const std::vector<double>& snap_times,
           Trajectory& traj, long& accepted) {
  const double eps = time_eps(t_end);
  while (u.time < t_end - eps) {
    const double lim = limit(u);
    double dt = opts.dt_override > 0.0 ? std::min(opts.dt_override, lim) : lim;
    dt = std::min(dt, t_end - u.time);
    bool on_snap = false;
    auto it = std::upper_bound(snap_times.begin(), snap_times.end(), u.time + eps);
    if (it != snap_times.end() && u.time + dt >= *it - eps) {
      dt = *it - u.time;
      on_snap = true;
    }
    u = step(u, parts, dt, lim, policy);
    if (!u.values.allFinite())
      throw NumericsError("solver: non-finite values encountered", u.time);
    traj.max_dt = std::max(traj.max_dt, dt);
    ++accepted;
    if (on_snap || (opts.snap_every > 0 && accepted % opts.snap_every == 0))
      push_snapshot(traj, u);
  }
  u.time = t_end;
}

Trajectory run_single_phase(const Field& u0, double T, const std::vector<RhsTerm>& parts,
                            const std::function<double(const Field&)>& limit,
                            const CflPolicy& policy, const SolveOptions& opts,
                            std::string name) {
  if (!(T > 0.0)) throw UsageError("solver: T must be positive");
  policy.validate();
  Trajectory traj;
  traj.solver = std::move(name);
  Field u = u0;
  u.time = 0.0;
  push_snapshot(traj, u);
  long accepted = 0;
  march(u, T, parts, limit, policy, opts, sorted_unique(opts.snap_times), traj, accepted);
  push_snapshot(traj, u);
  return traj;
}

}  // namespace

Trajectory solve_base(const Field& u0, const H1Spec& h1, double T,
                      const CflPolicy& policy, const SolveOptions& opts) {
  std::vector<RhsTerm> parts{
      {1.0, [&h1](const Field& f) { return rhs_advection(f, h1, f.time); }}};
  const double dt = cfl_dt(u0.grid, h1, policy);
  return run_single_phase(u0, T, parts, [dt](const Field&) { return dt; }, policy, opts,
                          "base");
}

Trajectory solve_theta(const Field& u0, const H1Spec& h1, const CorrectorSpec& corr,
                       double theta, double T, const CflPolicy& policy,
                       const SolveOptions& opts) {
  if (theta < 0.0) throw UsageError("solve_theta: theta must be nonnegative");
  if (theta == 0.0) return solve_base(u0, h1, T, policy, opts);
  std::vector<RhsTerm> parts{
      {1.0, [&h1](const Field& f) { return rhs_advection(f, h1, f.time); }},
      {theta, [&corr](const Field& f) { return rhs_corrector(f, corr); }}};
  const Grid& g = u0.grid;
  auto limit = [&, theta](const Field& f) {
    return cfl_dt(g, h1, corr, theta, policy, f.values.abs().maxCoeff());
  };
  return run_single_phase(u0, T, parts, limit, policy, opts, "theta");
}

Trajectory solve_averaged(const Field& u0, const H1Spec& h1, const CorrectorSpec& corr,
                          double theta, double T, const CflPolicy& policy,
                          const SolveOptions& opts) {
  if (!(theta > 0.0)) throw UsageError("solve_averaged: theta must be positive");
  const double dilate = 1.0 + theta;
  std::vector<RhsTerm> parts{
      {1.0 / dilate,
       [&h1, dilate](const Field& f) { return rhs_advection(f, h1, f.time / dilate); }},
      {theta / dilate, [&corr](const Field& f) { return rhs_corrector(f, corr); }}};
  const Grid& g = u0.grid;
  auto limit = [&, theta, dilate](const Field& f) {
    return dilate * cfl_dt(g, h1, corr, theta, policy, f.values.abs().maxCoeff());
  };
  return run_single_phase(u0, T, parts, limit, policy, opts, "averaged");
}

Trajectory solve_iterative(const Field& u0, const H1Spec& h1, const CorrectorSpec& corr,
                           const Schedule& sched, double T, const CflPolicy& policy,
                           const SolveOptions& opts) {
  if (!(T > 0.0)) throw UsageError("solve_iterative: T must be positive");
  policy.validate();
  const double theta = sched.theta();
  const double dilate = 1.0 + theta;
  const double eps_period = sched.eps();

  std::vector<RhsTerm> evolve_parts{
      {1.0, [&h1, dilate](const Field& f) { return rhs_advection(f, h1, f.time / dilate); }}};
  std::vector<RhsTerm> correct_parts{
      {1.0, [&corr](const Field& f) { return rhs_corrector(f, corr); }}};

  const Grid& g = u0.grid;
  const double dt_evolve = cfl_dt(g, h1, policy);
  const H1Spec still = H1Spec::constant(0.0);
  auto correct_limit = [&](const Field& f) {
    return cfl_dt(g, still, corr, 1.0, policy, f.values.abs().maxCoeff());
  };

  Trajectory traj;
  traj.solver = "iterative";
  Field u = u0;
  u.time = 0.0;
  push_snapshot(traj, u);
  long accepted = 0;
  const auto snaps = sorted_unique(opts.snap_times);
  const auto periods = static_cast<long>(std::ceil(T / eps_period - 1e-12));
  for (long i = 0; i < periods && u.time < T - time_eps(T); ++i) {
    const double period_start = static_cast<double>(i) * eps_period;
    const double split_t = std::min(period_start + sched.k1 * sched.dt_split, T);
    const double period_end = std::min(static_cast<double>(i + 1) * eps_period, T);
    if (split_t > u.time) {
      march(u, split_t, evolve_parts, [dt_evolve](const Field&) { return dt_evolve; },
            policy, opts, snaps, traj, accepted);
      push_snapshot(traj, u);
    }
    if (period_end > u.time) {
      march(u, period_end, correct_parts, correct_limit, policy, opts, snaps, traj,
            accepted);
      push_snapshot(traj, u);
    }
  }
  push_snapshot(traj, u);
  return traj;
}

Field relax_to_distance(const Field& u0, const CorrectorSpec& corr,
                        const CflPolicy& policy, double stop_tol, long max_steps,
                        long* steps_taken) {
  policy.validate();
  const Grid& g = u0.grid;
  const H1Spec still = H1Spec::constant(0.0);
  std::vector<RhsTerm> parts{
      {1.0, [&corr](const Field& f) { return rhs_corrector(f, corr); }}};
  Field u = u0;
  long n = 0;
  for (; n < max_steps; ++n) {
    const double lim = cfl_dt(g, still, corr, 1.0, policy, u.values.abs().maxCoeff());
    Field next = step(u, parts, lim, lim, policy);
    if (!next.values.allFinite())
      throw NumericsError("relax_to_distance: non-finite values", next.time);
    const double change = (next.values - u.values).abs().maxCoeff();
    u = std::move(next);
    if (change < stop_tol) {
      ++n;
      break;
    }
  }
  if (steps_taken) *steps_taken = n;
  return u;
}

double rescale_compare(const Trajectory& traj_avg, const Trajectory& traj_theta,
                       double theta) {
  if (!(theta > 0.0)) throw UsageError("rescale_compare: theta must be positive");
  if (traj_avg.snapshots.empty() || traj_theta.snapshots.empty())
    throw UsageError("rescale_compare: empty trajectory");
  if (!traj_avg.front().grid.same_layout(traj_theta.front().grid))
    throw UsageError("rescale_compare: trajectories live on different grids");
  // u^theta(x, t) = u_avg(x, (1+theta) t): the averaged run must cover the
  // dilated times of the theta run's snapshots
  const double tol =
      std::max(traj_theta.max_dt, (1.0 + theta) * traj_avg.max_dt) + 1e-12;
  double sup = 0.0;
  for (const auto& snap : traj_theta.snapshots) {
    const double target = (1.0 + theta) * snap.time;
    const Field& match = traj_avg.at_time(target, tol);
    sup = std::max(sup, linf_distance(snap, match));
  }
  return sup;
}

}  // namespace levelset
