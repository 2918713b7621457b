#ifndef LEVELSET_ORACLES_HPP
#define LEVELSET_ORACLES_HPP

#include <functional>

#include "levelset/grid.hpp"

namespace levelset {
namespace oracles {

/// Value function w(x,t) = max of u0 over the closed ball B_t(x) for unit
/// constant speed: dense sampling at the given resolution (samples per unit
/// of ball extent) followed by local golden-section refinement.
double hopf_lax_w(const std::function<double(const Vec2&)>& u0, const Vec2& x, double t,
                  int dim, long resolution = 10000);

struct TwoBumps {
  double w;
  double d;
};

/// Exact solution and signed distance for the expanding two-bump initial
/// datum u0(x) = max{(1-|x-2|)_+, (1-|x+2|)_+} with c = 1:
///   w = min{max{(t+1-|x-2|)_+, (t+1-|x+2|)_+}, 1},
///   d = max{(t+1-|x-2|)_+, (t+1-|x+2|)_+}   for t <= 1,
///   d = (t+3-|x|)_+                         for t >  1.
TwoBumps example_two_bumps(double x, double t);

/// The two-bump initial profile itself.
double two_bumps_u0(double x);

/// Exact solution for c(x) = (1-|x|)_+ + 1 with u0 = (1-|x|)_+; piecewise in
/// four branches for t <= log 2 and three branches afterwards. The signed
/// distance for this flow is (t+1-|x|)_+.
double example_bounded_speed_w(double x, double t);
double example_bounded_speed_d(double x, double t);

/// L(t) = max{L0, 1} exp(int_0^t D(s) ds) by adaptive quadrature.
double lipschitz_bound(double t, double L0, const std::function<double(double)>& D);

struct BarrierBounds {
  double lower;
  double upper;
};

struct BarrierConstants {
  double L0;
  double L1;
  double lip_w;
};

/// Barrier sandwich on the positive region: lower = min{1/Lip_x[w], 1} * w,
/// upper = max{L0, 1} e^{L1 t} * d. Mirrored by the caller on the negative
/// region.
BarrierBounds barrier_bounds(double w_val, double d_val, double t,
                             const BarrierConstants& c);

}  // namespace oracles
}  // namespace levelset

#endif
