#ifndef LEVELSET_MODEL_HPP
#define LEVELSET_MODEL_HPP

#include <Eigen/Core>

#include <string>

#include "levelset/error.hpp"

namespace levelset {

using Vec2 = Eigen::Vector2d;

/// Geometric Hamiltonian H1(x,t,p) = c(x,t)|p| with a registered closed-form
/// velocity, so the Lipschitz constants consumed by barriers and the CFL
/// bound are declared rather than estimated.
struct H1Spec {
  enum class Velocity {
    Constant,           // c = a
    OneMinusAbsPlusOne, // c = (1-|x|)_+ + 1
    RadialRamp,         // c = a + b*min(|x|, r0)
  };

  Velocity kind = Velocity::Constant;
  double a = 1.0;
  double b = 0.0;
  double r0 = 1.0;

  static H1Spec constant(double speed) { return {Velocity::Constant, speed, 0.0, 1.0}; }
  static H1Spec bounded_bump() { return {Velocity::OneMinusAbsPlusOne, 0.0, 0.0, 1.0}; }
  static H1Spec radial_ramp(double base, double slope, double cap) {
    if (cap <= 0.0) throw ConfigError("radial_ramp: cap radius must be positive");
    return {Velocity::RadialRamp, base, slope, cap};
  }

  double speed(const Vec2& x, double t) const;

  /// L1: Lipschitz constant of c in x (Lipschitz of H1 per unit |p|).
  double lipschitz_x() const;
  /// L2: sup |c|, the propagation speed bound and Lipschitz constant in p.
  double max_speed() const;
  /// D(t): time-dependent Lipschitz rate; constant L1 for every registered
  /// velocity here.
  double rate(double t) const { (void)t; return lipschitz_x(); }

  std::string describe() const;
};

/// c(x,t)|p|, positively 1-homogeneous in p.
double eval_h1(const H1Spec& spec, const Vec2& x, double t, const Vec2& p);

/// Corrector Hamiltonian H2(r,p) = beta(r) h(p) together with the smoothing
/// scale eps0 of the regularized sign.
struct CorrectorSpec {
  enum class HVariant { Signed, Plus };             // 1-|p|  /  (1-|p|)_+
  enum class BetaKind { SmoothSign, SmoothSignSquared };

  double eps0 = 0.0;  // must be set > 0
  HVariant h_variant = HVariant::Signed;
  BetaKind beta_kind = BetaKind::SmoothSign;

  CorrectorSpec() = default;
  CorrectorSpec(double eps0_, HVariant h, BetaKind b = BetaKind::SmoothSign)
      : eps0(eps0_), h_variant(h), beta_kind(b) {
    if (!(eps0 > 0.0)) throw ConfigError("corrector: eps0 must be positive");
  }

  double beta(double r) const;
  /// Lip[beta]; attained at r=0 for both kinds.
  double beta_lipschitz() const;
  /// sup |beta| over |r| <= value_bound. The smooth sign saturates at 1;
  /// the sign-fixed squared form grows like |r| and needs the bound.
  double beta_sup(double value_bound = 1.0) const;

  /// h as a function of the gradient magnitude m = |p| >= 0.
  double h_of_norm(double m) const;
  double h_value(const Vec2& p) const { return h_of_norm(p.norm()); }
};

/// Splitting parameters of the alternating scheme: k1 steps of evolution,
/// k2 steps of correction, each of length dt_split.
struct Schedule {
  int k1 = 1;
  int k2 = 1;
  double dt_split = 0.0;

  Schedule() = default;
  Schedule(int k1_, int k2_, double dt)
      : k1(k1_), k2(k2_), dt_split(dt) {
    if (k1 < 1 || k2 < 1)
      throw ConfigError("schedule: k1 and k2 must be positive integers");
    if (!(dt_split > 0.0)) throw ConfigError("schedule: dt_split must be positive");
  }

  double eps() const { return (k1 + k2) * dt_split; }
  double theta() const { return static_cast<double>(k2) / static_cast<double>(k1); }
  /// Fraction of each period spent on H1: k1*dt/eps = 1/(1+theta).
  double h1_fraction() const { return static_cast<double>(k1) / static_cast<double>(k1 + k2); }
};

/// Time-periodic combined Hamiltonian: H1 with dilated time on the first
/// fraction 1/(1+theta) of each unit period of tau, the corrector on the
/// rest. The H1 window is left-open right-closed, so frac(tau)=0 falls in
/// the corrector phase.
double combined_h12(const H1Spec& h1, const CorrectorSpec& corr, double theta,
                    const Vec2& x, double t, double tau, double r, const Vec2& p);

/// Period average of H12 frozen at (x,t,r,p):
/// (H1(x, t/(1+theta), p) + theta*beta(r)h(p)) / (1+theta).
double averaged_h(const H1Spec& h1, const CorrectorSpec& corr, double theta,
                  const Vec2& x, double t, double r, const Vec2& p);

}  // namespace levelset

#endif
