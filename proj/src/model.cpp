#include "levelset/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace levelset {

double H1Spec::speed(const Vec2& x, double t) const {
  (void)t;
  switch (kind) {
    case Velocity::Constant:
      return a;
    case Velocity::OneMinusAbsPlusOne:
      return std::max(1.0 - x.norm(), 0.0) + 1.0;
    case Velocity::RadialRamp:
      return a + b * std::min(x.norm(), r0);
  }
  return 0.0;
}

double H1Spec::lipschitz_x() const {
  switch (kind) {
    case Velocity::Constant:
      return 0.0;
    case Velocity::OneMinusAbsPlusOne:
      return 1.0;
    case Velocity::RadialRamp:
      return std::abs(b);
  }
  return 0.0;
}

double H1Spec::max_speed() const {
  switch (kind) {
    case Velocity::Constant:
      return std::abs(a);
    case Velocity::OneMinusAbsPlusOne:
      return 2.0;
    case Velocity::RadialRamp:
      return std::max(std::abs(a), std::abs(a + b * r0));
  }
  return 0.0;
}

std::string H1Spec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Velocity::Constant:
      os << "c=" << a;
      break;
    case Velocity::OneMinusAbsPlusOne:
      os << "c=(1-|x|)_+ + 1";
      break;
    case Velocity::RadialRamp:
      os << "c=" << a << "+" << b << "*min(|x|," << r0 << ")";
      break;
  }
  return os.str();
}

double eval_h1(const H1Spec& spec, const Vec2& x, double t, const Vec2& p) {
  return spec.speed(x, t) * p.norm();
}

double CorrectorSpec::beta(double r) const {
  const double denom = std::sqrt(eps0 * eps0 + r * r);
  switch (beta_kind) {
    case BetaKind::SmoothSign:
      return r / denom;
    case BetaKind::SmoothSignSquared:
      // sign(r) * r^2 / sqrt(eps0^2 + r^2); sign attached so the odd,
      // monotone requirements hold.
      return (r >= 0.0 ? 1.0 : -1.0) * r * r / denom;
  }
  return 0.0;
}

double CorrectorSpec::beta_lipschitz() const {
  switch (beta_kind) {
    case BetaKind::SmoothSign:
      return 1.0 / eps0;
    case BetaKind::SmoothSignSquared:
      // derivative |r|(r^2 + 2 eps0^2)/(eps0^2+r^2)^{3/2} peaks near 1.09
      // as r ~ eps0 and tends to 1 at infinity
      return 1.1;
  }
  return 0.0;
}

double CorrectorSpec::beta_sup(double value_bound) const {
  switch (beta_kind) {
    case BetaKind::SmoothSign:
      return 1.0;
    case BetaKind::SmoothSignSquared:
      return std::abs(beta(std::max(1.0, std::abs(value_bound))));
  }
  return 1.0;
}

double CorrectorSpec::h_of_norm(double m) const {
  const double h = 1.0 - m;
  return h_variant == HVariant::Signed ? h : std::max(h, 0.0);
}

double combined_h12(const H1Spec& h1, const CorrectorSpec& corr, double theta,
                    const Vec2& x, double t, double tau, double r, const Vec2& p) {
  if (!(theta > 0.0)) throw UsageError("combined_h12: theta must be positive");
  double frac = tau - std::floor(tau);
  const double split = 1.0 / (1.0 + theta);
  if (frac > 0.0 && frac <= split) return eval_h1(h1, x, t / (1.0 + theta), p);
  return corr.beta(r) * corr.h_value(p);
}

double averaged_h(const H1Spec& h1, const CorrectorSpec& corr, double theta,
                  const Vec2& x, double t, double r, const Vec2& p) {
  if (!(theta > 0.0)) throw UsageError("averaged_h: theta must be positive");
  return (eval_h1(h1, x, t / (1.0 + theta), p) + theta * corr.beta(r) * corr.h_value(p)) /
         (1.0 + theta);
}

}  // namespace levelset
