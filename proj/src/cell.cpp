#include "levelset/cell.hpp"

#include <cmath>

namespace levelset {

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b, double fa,
                double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_fn(const std::function<double(double)>& f, double a, double b) {
  if (a >= b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb), 1e-10, 40);
}

}  // namespace

PeriodicProfile::PeriodicProfile(std::vector<double> breakpoints,
                                 std::vector<Segment> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
  if (breakpoints_.size() < 2 || segments_.size() != breakpoints_.size() - 1)
    throw ConfigError("profile: need N+1 breakpoints for N segments");
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
    throw ConfigError("profile: breakpoints must start at 0 and end at 1");
  for (size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw ConfigError("profile: breakpoints must be strictly increasing");
}

PeriodicProfile PeriodicProfile::two_phase(double h1_value, double h2_value,
                                           double theta) {
  if (!(theta > 0.0)) throw ConfigError("two_phase: theta must be positive");
  const double split = 1.0 / (1.0 + theta);
  return PeriodicProfile({0.0, split, 1.0}, {Segment(h1_value), Segment(h2_value)});
}

double PeriodicProfile::integral(double tau) const {
  if (tau < 0.0 || tau > 1.0 + 1e-15)
    throw UsageError("profile: tau must lie in [0, 1]");
  tau = std::min(tau, 1.0);
  double acc = 0.0;
  for (size_t i = 0; i < segments_.size(); ++i) {
    const double a = breakpoints_[i];
    const double b = std::min(breakpoints_[i + 1], tau);
    if (b <= a) break;
    if (std::holds_alternative<double>(segments_[i]))
      acc += std::get<double>(segments_[i]) * (b - a);
    else
      acc += integrate_fn(std::get<std::function<double(double)>>(segments_[i]), a, b);
  }
  return acc;
}

double cell_lambda(const PeriodicProfile& profile) { return profile.integral(1.0); }

double cell_corrector(const PeriodicProfile& profile, double v0, double tau) {
  const double lambda = cell_lambda(profile);
  return v0 - lambda * tau + profile.integral(tau);
}

PeriodicProfile freeze_combined(const H1Spec& h1, const CorrectorSpec& corr, double theta,
                                const Vec2& x, double t, double r, const Vec2& p) {
  const double h1_value = eval_h1(h1, x, t / (1.0 + theta), p);
  const double h2_value = corr.beta(r) * corr.h_value(p);
  return PeriodicProfile::two_phase(h1_value, h2_value, theta);
}

}  // namespace levelset
