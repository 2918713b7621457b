#include "levelset/oracles.hpp"

#include <cmath>

namespace levelset {
namespace oracles {

namespace {

double plus_part(double a) { return std::max(a, 0.0); }

/// Golden-section maximization on [lo, hi] for a scalar function.
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-14 * std::max(1.0, std::abs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return std::max(f(0.5 * (a + b)), std::max(fc, fd));
}

/// Adaptive Simpson quadrature.
double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(f, a, b, fa, fm, fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double hopf_lax_w(const std::function<double(const Vec2&)>& u0, const Vec2& x, double t,
                  int dim, long resolution) {
  if (t < 0.0) throw UsageError("hopf_lax_w: t must be nonnegative");
  if (t == 0.0) return u0(x);
  if (dim == 1) {
    const double lo = x.x() - t, hi = x.x() + t;
    const long n = std::max<long>(8, static_cast<long>(resolution * 2.0 * t));
    const double h = (hi - lo) / static_cast<double>(n);
    double best = -std::numeric_limits<double>::infinity();
    long best_i = 0;
    for (long i = 0; i <= n; ++i) {
      const double y = lo + h * static_cast<double>(i);
      const double v = u0(Vec2(y, 0.0));
      if (v > best) {
        best = v;
        best_i = i;
      }
    }
    const double a = lo + h * static_cast<double>(std::max<long>(best_i - 1, 0));
    const double b = lo + h * static_cast<double>(std::min(best_i + 1, n));
    return std::max(best, golden_max([&](double y) { return u0(Vec2(y, 0.0)); }, a, b));
  }
  // 2D: dense polar sampling plus one refinement pass around the best sample
  const long n_side = std::max<long>(
      16, static_cast<long>(std::lround(std::sqrt(static_cast<double>(resolution)) * t)));
  double best = u0(x);
  Vec2 best_p = x;
  for (long i = 0; i <= n_side; ++i) {
    const double r = t * static_cast<double>(i) / static_cast<double>(n_side);
    const long n_ang = std::max<long>(8, 6 * i);
    for (long j = 0; j < n_ang; ++j) {
      const double phi = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n_ang);
      const Vec2 p = x + r * Vec2(std::cos(phi), std::sin(phi));
      const double v = u0(p);
      if (v > best) {
        best = v;
        best_p = p;
      }
    }
  }
  const double h = 2.0 * t / static_cast<double>(n_side);
  for (int i = -8; i <= 8; ++i)
    for (int j = -8; j <= 8; ++j) {
      const Vec2 p = best_p + (h / 8.0) * Vec2(i, j);
      if ((p - x).norm() <= t) best = std::max(best, u0(p));
    }
  return best;
}

double two_bumps_u0(double x) {
  return std::max(plus_part(1.0 - std::abs(x - 2.0)), plus_part(1.0 - std::abs(x + 2.0)));
}

TwoBumps example_two_bumps(double x, double t) {
  const double lobes =
      std::max(plus_part(t + 1.0 - std::abs(x - 2.0)), plus_part(t + 1.0 - std::abs(x + 2.0)));
  TwoBumps out;
  out.w = std::min(lobes, 1.0);
  out.d = t <= 1.0 ? lobes : plus_part(t + 3.0 - std::abs(x));
  return out;
}

double example_bounded_speed_w(double x, double t) {
  const double ax = std::abs(x);
  const double log2 = std::log(2.0);
  if (t <= log2) {
    if (ax <= 2.0 * (1.0 - std::exp(-t))) return 1.0;
    if (ax <= 1.0) return (2.0 - ax) * std::exp(t) - 1.0;
    if (ax <= t + 1.0) return std::exp(t - ax + 1.0) - 1.0;
    return 0.0;
  }
  if (ax <= t + 1.0 - log2) return 1.0;
  if (ax <= t + 1.0) return std::exp(t - ax + 1.0) - 1.0;
  return 0.0;
}

double example_bounded_speed_d(double x, double t) {
  return plus_part(t + 1.0 - std::abs(x));
}

double lipschitz_bound(double t, double L0, const std::function<double(double)>& D) {
  if (t < 0.0) throw UsageError("lipschitz_bound: t must be nonnegative");
  const double integral = integrate(D, 0.0, t, 1e-12);
  return std::max(L0, 1.0) * std::exp(integral);
}

BarrierBounds barrier_bounds(double w_val, double d_val, double t,
                             const BarrierConstants& c) {
  const double eps = c.lip_w > 1.0 ? 1.0 / c.lip_w : 1.0;
  const double l = std::max(c.L0, 1.0);
  return {eps * w_val, l * std::exp(c.L1 * t) * d_val};
}

}  // namespace oracles
}  // namespace levelset
