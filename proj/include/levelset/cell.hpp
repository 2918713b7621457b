#ifndef LEVELSET_CELL_HPP
#define LEVELSET_CELL_HPP

#include <functional>
#include <variant>
#include <vector>

#include "levelset/model.hpp"

namespace levelset {

/// 1-periodic right-hand side H(tau) of the cell problem v' + lambda = H,
/// given on a partition 0 = tau_0 < ... < tau_N = 1 with each segment either
/// constant or a function continuous on its half-open interval.
class PeriodicProfile {
public:
  using Segment = std::variant<double, std::function<double(double)>>;

  PeriodicProfile(std::vector<double> breakpoints, std::vector<Segment> segments);

  /// Two-phase profile of the combined Hamiltonian frozen at one state:
  /// value h1_value on (0, 1/(1+theta)], h2_value on the rest.
  static PeriodicProfile two_phase(double h1_value, double h2_value, double theta);

  /// Integral over [0, tau]; exact for constant segments, adaptive
  /// quadrature (tol 1e-10) for function segments.
  double integral(double tau) const;

  size_t segment_count() const { return segments_.size(); }

private:
  std::vector<double> breakpoints_;
  std::vector<Segment> segments_;
};

/// Effective Hamiltonian of the cell problem: lambda = int_0^1 H.
double cell_lambda(const PeriodicProfile& profile);

/// Corrector v(tau) = v0 - lambda*tau + int_0^tau H; periodic by the choice
/// of lambda, so v(1) = v(0).
double cell_corrector(const PeriodicProfile& profile, double v0, double tau);

/// Profile obtained by freezing the combined Hamiltonian at (x,t,r,p);
/// cell_lambda of it equals averaged_h at the same state.
PeriodicProfile freeze_combined(const H1Spec& h1, const CorrectorSpec& corr, double theta,
                                const Vec2& x, double t, double r, const Vec2& p);

}  // namespace levelset

#endif
