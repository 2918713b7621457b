#ifndef LEVELSET_EVOLVE_HPP
#define LEVELSET_EVOLVE_HPP

#include <vector>

#include "levelset/grid.hpp"
#include "levelset/model.hpp"
#include "levelset/scheme.hpp"

namespace levelset {

struct SolveOptions {
  /// Take a snapshot every this many accepted steps (0: endpoints and phase
  /// boundaries only).
  int snap_every = 0;
  /// Explicit snapshot times; steps are shortened to land on them exactly.
  std::vector<double> snap_times;
  /// Positive value forces this step size (still checked against the CFL
  /// bound); used to compare runs that must share a time grid.
  double dt_override = 0.0;
};

/// Level-set evolution u_t = H1(x,t,grad u) from u0 to time T.
Trajectory solve_base(const Field& u0, const H1Spec& h1, double T,
                      const CflPolicy& policy, const SolveOptions& opts = {});

/// Theta-equation u_t = H1(x,t,grad u) + theta beta(u) h(grad u).
/// theta = 0 reduces to solve_base bit for bit.
Trajectory solve_theta(const Field& u0, const H1Spec& h1, const CorrectorSpec& corr,
                       double theta, double T, const CflPolicy& policy,
                       const SolveOptions& opts = {});

/// Alternating splitting: per period of length eps = (k1+k2)*dt_split, evolve
/// with H1(x, t/(1+theta), .) for k1*dt_split, then with the corrector for
/// k2*dt_split, each phase sub-stepped at its own CFL limit. The final
/// partial period is truncated at T.
Trajectory solve_iterative(const Field& u0, const H1Spec& h1, const CorrectorSpec& corr,
                           const Schedule& sched, double T, const CflPolicy& policy,
                           const SolveOptions& opts = {});

/// Averaged equation u_t = (H1(x, t/(1+theta), grad u) + theta beta(u) h)/(1+theta).
Trajectory solve_averaged(const Field& u0, const H1Spec& h1, const CorrectorSpec& corr,
                          double theta, double T, const CflPolicy& policy,
                          const SolveOptions& opts = {});

/// Pure corrector relaxation toward the signed distance function: steps
/// u_t = beta(u) h(grad u) until the per-step linf change drops below
/// stop_tol or max_steps is reached. Returns the final field.
Field relax_to_distance(const Field& u0, const CorrectorSpec& corr,
                        const CflPolicy& policy, double stop_tol, long max_steps,
                        long* steps_taken = nullptr);

/// Check of the rescaling identity: snapshots of the averaged run at times t
/// are matched against theta-equation snapshots at (1+theta)t, and the sup of
/// the pairwise linf distances is returned. A pair missing by more than one
/// step of the theta run is a usage error.
double rescale_compare(const Trajectory& traj_avg, const Trajectory& traj_theta,
                       double theta);

}  // namespace levelset

#endif
