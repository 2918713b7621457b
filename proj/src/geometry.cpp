#include "levelset/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace levelset {

namespace {

bool is_zero(double v) { return std::abs(v) <= kZeroSnapTol; }

/// Crossing position on the edge (pa,ua)-(pb,ub) when the values straddle
/// zero strictly.
Vec2 edge_crossing(const Vec2& pa, double ua, const Vec2& pb, double ub) {
  const double s = ua / (ua - ub);
  return pa + s * (pb - pa);
}

std::vector<Index> ball_nodes(const Grid& g, const Vec2& x, double radius) {
  std::vector<Index> ids;
  for (Index id = 0; id < g.size(); ++id)
    if ((g.position(id) - x).norm() <= radius) ids.push_back(id);
  return ids;
}

}  // namespace

double InterfaceSet::distance(const Vec2& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points) best = std::min(best, (p - x).norm());
  return best;
}

InterfaceSet extract_interface(const Field& field) {
  const Grid& g = field.grid;
  InterfaceSet iface;
  iface.time = field.time;
  iface.dim = g.dim();
  for (Index id = 0; id < g.size(); ++id) {
    const double u = field.values(id);
    if (is_zero(u)) {
      iface.points.push_back(g.position(id));
      continue;
    }
    // edges toward +x and +y; a snapped-zero endpoint owns the crossing
    const Index ix = g.ix(id), iy = g.dim() == 2 ? g.iy(id) : 0;
    if (ix + 1 < g.n(0)) {
      const double v = field.values(id + 1);
      if (!is_zero(v) && u * v < 0.0)
        iface.points.push_back(edge_crossing(g.position(id), u, g.position(id + 1), v));
    }
    if (g.dim() == 2 && iy + 1 < g.n(1)) {
      const double v = field.values(id + g.n(0));
      if (!is_zero(v) && u * v < 0.0)
        iface.points.push_back(
            edge_crossing(g.position(id), u, g.position(id + g.n(0)), v));
    }
  }
  if (iface.points.empty())
    throw UsageError("extract_interface: field is single-signed, zero level set empty");
  return iface;
}

double hausdorff_distance(const InterfaceSet& a, const InterfaceSet& b) {
  if (a.empty() || b.empty())
    throw UsageError("hausdorff_distance: empty interface");
  double h = 0.0;
  for (const auto& p : a.points) h = std::max(h, b.distance(p));
  for (const auto& p : b.points) h = std::max(h, a.distance(p));
  return h;
}

Field signed_distance_field(const Field& field) {
  const InterfaceSet iface = extract_interface(field);
  const Grid& g = field.grid;
  ArrayXd out(g.size());
  for (Index id = 0; id < g.size(); ++id) {
    const double u = field.values(id);
    if (is_zero(u)) {
      out(id) = 0.0;
      continue;
    }
    const double d = iface.distance(g.position(id));
    out(id) = u > 0.0 ? d : -d;
  }
  return Field(g, std::move(out), field.time);
}

std::vector<Vec2> nearest_points(const Vec2& x, const InterfaceSet& iface, double tol) {
  if (iface.empty()) throw UsageError("nearest_points: empty interface");
  const double dmin = iface.distance(x);
  std::vector<Vec2> out;
  for (const auto& p : iface.points)
    if ((p - x).norm() <= dmin + tol) out.push_back(p);
  return out;
}

bool detect_extinction(const Trajectory& traj, const Vec2& x, double t,
                       double eps_ball, double delta) {
  if (traj.snapshots.empty()) throw UsageError("detect_extinction: empty trajectory");
  const Grid& g = traj.front().grid;
  if (eps_ball < 2.0 * g.min_dx())
    throw UsageError("detect_extinction: eps_ball must cover at least 2 nodes");
  const auto ids = ball_nodes(g, x, eps_ball);
  if (ids.empty()) throw UsageError("detect_extinction: ball contains no nodes");

  bool window_seen = false;
  for (const auto& snap : traj.snapshots) {
    if (snap.time <= t || snap.time > t + delta) continue;
    window_seen = true;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Index id : ids) {
      lo = std::min(lo, snap.values(id));
      hi = std::max(hi, snap.values(id));
    }
    const bool one_signed = (lo > kZeroSnapTol) || (hi < -kZeroSnapTol);
    if (!one_signed) return false;
  }
  if (!window_seen) {
    std::ostringstream os;
    os << "detect_extinction: no snapshots in (" << t << ", " << t + delta
       << "]; increase snapshot density";
    throw UsageError(os.str());
  }
  return true;
}

ContinuityVerdict classify_continuity(const Trajectory& traj, const Vec2& x, double t,
                                      const ContinuityParams& params) {
  if (traj.snapshots.empty()) throw UsageError("classify_continuity: empty trajectory");
  const Grid& g = traj.front().grid;
  const double dx = g.min_dx();

  double delta = params.delta;
  if (delta <= 0.0) {
    const auto ts = traj.times();
    std::vector<double> gaps;
    for (size_t i = 1; i < ts.size(); ++i) gaps.push_back(ts[i] - ts[i - 1]);
    std::sort(gaps.begin(), gaps.end());
    const double snap_dt = gaps.empty() ? 0.0 : gaps[gaps.size() / 2];
    delta = 10.0 * snap_dt;
  }
  const double eps_ball = params.eps_ball > 0.0 ? params.eps_ball : 3.0 * dx;
  const double near_tol = params.nearest_tol > 0.0 ? params.nearest_tol : dx;

  ContinuityVerdict v;
  v.point = x;
  v.time = t;
  v.eps_ball = eps_ball;
  v.delta = delta;
  v.dx = dx;

  const Field& snap = traj.at_time(t, traj.max_dt + 1e-12);
  const InterfaceSet iface = extract_interface(snap);
  v.nearest = nearest_points(x, iface, near_tol);
  v.continuous = false;
  for (const auto& z : v.nearest) {
    const bool ext = detect_extinction(traj, z, t, eps_ball, delta);
    v.extinction.push_back(ext);
    if (!ext) v.continuous = true;
  }
  return v;
}

bool cone_check(const Trajectory& traj, const Vec2& x, double t, double r,
                double max_speed) {
  if (traj.snapshots.empty()) throw UsageError("cone_check: empty trajectory");
  if (!(r > 0.0) || !(max_speed > 0.0))
    throw UsageError("cone_check: r and max_speed must be positive");
  const Grid& g = traj.front().grid;
  const Field& base = traj.at_time(t, traj.max_dt + 1e-12);
  const auto base_ids = ball_nodes(g, x, r);
  if (base_ids.empty()) throw UsageError("cone_check: ball contains no nodes");
  int sign = 0;
  for (Index id : base_ids) {
    const double u = base.values(id);
    const int s = u > kZeroSnapTol ? 1 : (u < -kZeroSnapTol ? -1 : 0);
    if (s == 0) throw UsageError("cone_check: ball not single-signed at time t");
    if (sign == 0) sign = s;
    if (s != sign) throw UsageError("cone_check: ball not single-signed at time t");
  }
  const double t_top = t + r / max_speed;
  if (traj.back().time + traj.max_dt < t_top)
    throw UsageError("cone_check: trajectory too short for the requested cone");

  for (const auto& snap : traj.snapshots) {
    if (snap.time <= t || snap.time > t_top) continue;
    const double tau = (snap.time - t) * max_speed;
    if (tau >= r) continue;
    for (Index id : ball_nodes(g, x, r - tau)) {
      const double u = snap.values(id);
      if (sign > 0 ? !(u > kZeroSnapTol) : !(u < -kZeroSnapTol)) return false;
    }
  }
  return true;
}

double gradient_deviation(const Field& field, double band) {
  if (!(band > 0.0)) throw UsageError("gradient_deviation: band must be positive");
  const Grid& g = field.grid;
  const Field sdf = signed_distance_field(field);
  const double dx = g.min_dx();

  // kinks: nodes where some axis sees one-sided slopes of opposite sign with
  // a significant fold (ridges and valleys of the profile)
  std::vector<Vec2> kinks;
  for (Index id = 0; id < g.size(); ++id) {
    const OneSided d = one_sided_gradients(field, id);
    for (int a = 0; a < g.dim(); ++a) {
      if (d.minus[a] * d.plus[a] < 0.0 && std::abs(d.minus[a] - d.plus[a]) > 0.5) {
        kinks.push_back(g.position(id));
        break;
      }
    }
  }

  double worst = -1.0;
  for (Index id = 0; id < g.size(); ++id) {
    if (std::abs(sdf.values(id)) > band) continue;
    const Index ix = g.ix(id), iy = g.dim() == 2 ? g.iy(id) : 0;
    if (ix == 0 || ix == g.n(0) - 1) continue;
    if (g.dim() == 2 && (iy == 0 || iy == g.n(1) - 1)) continue;
    const Vec2 p = g.position(id);
    bool near_kink = false;
    for (const auto& k : kinks)
      if ((k - p).norm() <= 2.0 * dx) {
        near_kink = true;
        break;
      }
    if (near_kink) continue;
    double sum = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      const Index stride = (a == 0) ? 1 : g.n(0);
      const double c =
          (field.values(id + stride) - field.values(id - stride)) / (2.0 * g.dx(a));
      sum += c * c;
    }
    worst = std::max(worst, std::abs(std::sqrt(sum) - 1.0));
  }
  if (worst < 0.0)
    throw UsageError("gradient_deviation: band contains no admissible nodes");
  return worst;
}

}  // namespace levelset
