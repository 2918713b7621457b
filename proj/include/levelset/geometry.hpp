#ifndef LEVELSET_GEOMETRY_HPP
#define LEVELSET_GEOMETRY_HPP

#include <vector>

#include "levelset/grid.hpp"

namespace levelset {

/// Snap tolerance below which a node value counts as an exact zero.
inline constexpr double kZeroSnapTol = 1e-12;

/// Zero-level point cloud of one field at a fixed time. Points are zero
/// crossings on grid edges (sub-grid accurate by linear interpolation) plus
/// nodes whose value is zero within the snap tolerance.
struct InterfaceSet {
  double time = 0.0;
  int dim = 1;
  std::vector<Vec2> points;

  bool empty() const { return points.empty(); }
  /// Distance from x to the nearest interface point.
  double distance(const Vec2& x) const;
};

/// Extract the zero level set; a single-signed field (no zeros, no crossings)
/// is an error because the evolutions studied here assume a nonempty
/// interface at all times.
InterfaceSet extract_interface(const Field& field);

/// Symmetric Hausdorff distance between two interface point clouds.
double hausdorff_distance(const InterfaceSet& a, const InterfaceSet& b);

/// Signed distance to the field's own interface: +dist on {u>0}, -dist on
/// {u<0}, 0 on snap-tolerance zeros. Brute force over the point cloud.
Field signed_distance_field(const Field& field);

/// All interface points within tol of the minimal distance to x (the
/// discrete set of nearest points, ties included).
std::vector<Vec2> nearest_points(const Vec2& x, const InterfaceSet& iface, double tol);

/// True iff every snapshot with time in (t, t+delta] is strictly one-signed
/// on the closed ball of radius eps_ball around x: the interface vanishes
/// near x immediately after t. Raises a resolution error when the window
/// contains no snapshots.
bool detect_extinction(const Trajectory& traj, const Vec2& x, double t,
                       double eps_ball, double delta);

struct ContinuityParams {
  double eps_ball = 0.0;     // 0: default 3*dx
  double delta = 0.0;        // 0: default 10 * median snapshot spacing
  double nearest_tol = 0.0;  // 0: default dx
};

struct ContinuityVerdict {
  Vec2 point = Vec2::Zero();
  double time = 0.0;
  bool continuous = false;
  std::vector<Vec2> nearest;
  std::vector<bool> extinction;  // per nearest point
  double eps_ball = 0.0, delta = 0.0, dx = 0.0;  // parameters used
};

/// Distance-function continuity test at (x,t): continuous iff at least one
/// nearest interface point is a non-extinction point.
ContinuityVerdict classify_continuity(const Trajectory& traj, const Vec2& x, double t,
                                      const ContinuityParams& params = {});

/// Finite-propagation certificate: with the closed ball B_r(x) single-signed
/// at time t, checks that every snapshot at t + tau/max_speed (tau in (0,r))
/// keeps that sign on B_{r-tau}(x).
bool cone_check(const Trajectory& traj, const Vec2& x, double t, double r,
                double max_speed);

/// Max over nodes with |signed distance| <= band, away from kinks and domain
/// faces, of | |grad u|_central - 1 |.
double gradient_deviation(const Field& field, double band);

}  // namespace levelset

#endif
