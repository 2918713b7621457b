#include "levelset/scheme.hpp"

#include <cmath>

namespace levelset {

double godunov_magnitude(const Vec2& dminus, const Vec2& dplus, int speed_sign, int dim) {
  double sum = 0.0;
  for (int a = 0; a < dim; ++a) {
    double lo, hi;
    if (speed_sign >= 0) {
      lo = std::min(dminus[a], 0.0);
      hi = std::max(dplus[a], 0.0);
    } else {
      lo = std::max(dminus[a], 0.0);
      hi = std::min(dplus[a], 0.0);
    }
    sum += std::max(lo * lo, hi * hi);
  }
  return std::sqrt(sum);
}

Field rhs_advection(const Field& field, const H1Spec& h1, double t) {
  const Grid& g = field.grid;
  ArrayXd out(g.size());
  for (Index id = 0; id < g.size(); ++id) {
    const double c = h1.speed(g.position(id), t);
    const OneSided d = one_sided_gradients(field, id);
    out(id) = c * godunov_magnitude(d.minus, d.plus, c >= 0.0 ? +1 : -1, g.dim());
  }
  return Field(g, std::move(out), field.time);
}

Field rhs_corrector(const Field& field, const CorrectorSpec& corr) {
  const Grid& g = field.grid;
  ArrayXd out(g.size());
  for (Index id = 0; id < g.size(); ++id) {
    const double b = corr.beta(field.values(id));
    if (b == 0.0) {
      out(id) = 0.0;  // zero level is never moved by the corrector
      continue;
    }
    const OneSided d = one_sided_gradients(field, id);
    const double mag = godunov_magnitude(d.minus, d.plus, b > 0.0 ? -1 : +1, g.dim());
    out(id) = b * corr.h_of_norm(mag);
  }
  return Field(g, std::move(out), field.time);
}

double cfl_dt(const Grid& grid, const H1Spec& h1, const CorrectorSpec& corr,
              double theta, const CflPolicy& policy, double field_sup) {
  policy.validate();
  if (theta < 0.0) throw UsageError("cfl_dt: theta must be nonnegative");
  double inv_sum = 0.0;
  for (int a = 0; a < grid.dim(); ++a) inv_sum += 1.0 / grid.dx(a);
  const double h_sup = 1.0 + policy.slope_bound;
  double denom = inv_sum * h1.max_speed();
  if (theta > 0.0)
    denom += theta * (corr.beta_sup(field_sup) * inv_sum + corr.beta_lipschitz() * h_sup);
  return policy.cfl_number / denom;
}

double cfl_dt(const Grid& grid, const H1Spec& h1, const CflPolicy& policy) {
  policy.validate();
  double inv_sum = 0.0;
  for (int a = 0; a < grid.dim(); ++a) inv_sum += 1.0 / grid.dx(a);
  return policy.cfl_number / (inv_sum * h1.max_speed());
}

namespace {

ArrayXd weighted_rhs(const Field& u, const std::vector<RhsTerm>& parts) {
  ArrayXd acc = ArrayXd::Zero(u.grid.size());
  for (const auto& part : parts) acc += part.weight * part.op(u).values;
  return acc;
}

}  // namespace

Field step(const Field& field, const std::vector<RhsTerm>& parts, double dt,
           double cfl_limit, const CflPolicy& policy) {
  if (!(dt > 0.0)) throw UsageError("step: dt must be positive");
  if (dt > cfl_limit * (1.0 + 1e-12))
    throw UsageError("step: dt exceeds the CFL bound for the assembled operator");

  if (policy.integrator == CflPolicy::Integrator::Euler || parts.empty()) {
    ArrayXd k1 = weighted_rhs(field, parts);
    return Field(field.grid, field.values + dt * k1, field.time + dt);
  }
  ArrayXd k1 = weighted_rhs(field, parts);
  Field stage(field.grid, field.values + dt * k1, field.time + dt);
  ArrayXd k2 = weighted_rhs(stage, parts);
  return Field(field.grid, field.values + (0.5 * dt) * (k1 + k2), field.time + dt);
}

}  // namespace levelset
