#ifndef LEVELSET_SCHEME_HPP
#define LEVELSET_SCHEME_HPP

#include <functional>
#include <vector>

#include "levelset/grid.hpp"
#include "levelset/model.hpp"

namespace levelset {

/// Stability policy for the explicit monotone scheme.
struct CflPolicy {
  enum class Integrator { Euler, Rk2 };

  double cfl_number = 0.5;  // in (0, 1]
  Integrator integrator = Integrator::Rk2;
  /// Bound on discrete slopes assumed when sizing the corrector's
  /// zero-order stability term; enters cfl_dt through sup|h| <= 1 + slope.
  double slope_bound = 2.0;

  void validate() const {
    if (!(cfl_number > 0.0) || cfl_number > 1.0)
      throw ConfigError("cfl: cfl_number must lie in (0, 1]");
  }
};

/// Godunov (Rouy-Tourin) upwind magnitude of the gradient for u_t = s|grad u|.
///
/// speed_sign = +1 (outward motion, positive level sets expand): per axis
///   max(min(Dminus,0)^2, max(Dplus,0)^2),
/// speed_sign = -1: per axis
///   max(max(Dminus,0)^2, min(Dplus,0)^2),
/// summed over axes and square-rooted. The orientation makes local maxima
/// inert under expansion and local minima inert under contraction, which is
/// what the control formulas w(x,t) = max/min over balls demand.
double godunov_magnitude(const Vec2& dminus, const Vec2& dplus, int speed_sign, int dim);

/// Node-wise c(x,t) * |grad u| with upwinding chosen by sign(c).
Field rhs_advection(const Field& field, const H1Spec& h1, double t);

/// Node-wise beta(u) h(|grad u|) with upwinding chosen by -sign(beta(u)):
/// the corrector transports information away from the zero level.
Field rhs_corrector(const Field& field, const CorrectorSpec& corr);

/// Stability bound for the combined explicit scheme
///   dt = cfl / ( sum_axis(1/dx_a) * (L2 + theta*sup_beta)
///                + theta * Lip[beta] * sup|h| ),
/// i.e. cfl * min_dx / (L2 + theta*k) in 1D with the declared stability
/// constant k = sup_beta + min_dx * Lip[beta] * (1 + slope_bound).
/// field_sup bounds |u| and only matters for the unbounded squared-sign beta.
double cfl_dt(const Grid& grid, const H1Spec& h1, const CorrectorSpec& corr,
              double theta, const CflPolicy& policy, double field_sup = 1.0);

/// Advection-only bound, cfl * min_dx / L2.
double cfl_dt(const Grid& grid, const H1Spec& h1, const CflPolicy& policy);

/// One weighted right-hand-side contribution; the operator reads the stage
/// field's own time, so time-dependent parts stay correct inside RK stages.
struct RhsTerm {
  double weight;
  std::function<Field(const Field&)> op;
};

/// Advance one step of u_t = sum_i w_i rhs_i(u). Euler keeps the discrete
/// comparison property exactly; Rk2 is the Heun average of two Euler stages.
/// Refuses dt beyond the supplied stability bound.
Field step(const Field& field, const std::vector<RhsTerm>& parts, double dt,
           double cfl_limit, const CflPolicy& policy);

}  // namespace levelset

#endif
