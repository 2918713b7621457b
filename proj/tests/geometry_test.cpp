#include <doctest.h>

#include <cmath>

#include "levelset/evolve.hpp"
#include "levelset/geometry.hpp"
#include "levelset/oracles.hpp"

using namespace levelset;

namespace {

const CflPolicy kEuler{0.5, CflPolicy::Integrator::Euler, 2.0};

/// Trajectory of exact two-bump snapshots around a time window.
Trajectory exact_two_bump_trajectory(const Grid& g, double t0, double t1, int count) {
  Trajectory traj;
  traj.solver = "oracle";
  for (int i = 0; i < count; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / (count - 1);
    traj.snapshots.push_back(sample(
        [&](const Vec2& x) { return oracles::example_two_bumps(x.x(), t).w; }, g, t));
  }
  traj.max_dt = (t1 - t0) / (count - 1);
  return traj;
}

}  // namespace

TEST_CASE("extract_interface finds the linear crossing") {
  const Grid g = Grid::line(0.0, 1.0, 3);
  Field f(g, ArrayXd(3), 0.0);
  f.values << -1.0, 0.5, 1.0;  // crossing between 0 and 0.5 at x = 1/3
  const InterfaceSet iface = extract_interface(f);
  REQUIRE(iface.points.size() == 1);
  CHECK(iface.points[0].x() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("extract_interface on the sampled tent datum") {
  const Grid g = Grid::line(-2.0, 2.0, 41);
  const Field f = sample([](const Vec2& x) { return 1.0 - std::abs(x.x()); }, g, 0.0);
  const InterfaceSet iface = extract_interface(f);
  double left = 1e9, right = -1e9;
  for (const auto& p : iface.points) {
    left = std::min(left, p.x());
    right = std::max(right, p.x());
  }
  CHECK(left == doctest::Approx(-1.0).epsilon(g.dx(0) * g.dx(0)));
  CHECK(right == doctest::Approx(1.0).epsilon(g.dx(0) * g.dx(0)));
}

TEST_CASE("extract_interface rejects single-signed fields") {
  const Grid g = Grid::line(0.0, 1.0, 11);
  const Field f(g, 2.0, 0.0);
  CHECK_THROWS_AS(extract_interface(f), UsageError);
}

TEST_CASE("signed_distance_field on the documented 4-node example") {
  const Grid g = Grid::line(0.0, 3.0, 4);  // dx = 1
  Field f(g, ArrayXd(4), 0.0);
  f.values << -1.0, -0.5, 0.5, 1.0;  // crossing at x = 1.5
  const Field d = signed_distance_field(f);
  CHECK(d.values(0) == doctest::Approx(-1.5));
  CHECK(d.values(3) == doctest::Approx(1.5));
}

TEST_CASE("signed_distance_field of the two-bump solution at t = 0.5") {
  const Grid g = Grid::line(-8.0, 8.0, 1601);
  const Field w = sample(
      [](const Vec2& x) { return oracles::example_two_bumps(x.x(), 0.5).w; }, g, 0.5);
  const Field d = signed_distance_field(w);
  const Index at2 = static_cast<Index>(std::lround((2.0 + 8.0) / g.dx(0)));
  CHECK(d.values(at2) == doctest::Approx(1.5).epsilon(2.0 * g.dx(0)));
}

TEST_CASE("signed_distance_field is a fixed point on distance data") {
  const Grid g = Grid::rect({-2, -2}, {2, 2}, 81, 81);
  const Field f = sample([](const Vec2& x) { return x.norm() - 1.0; }, g, 0.0);
  const Field d = signed_distance_field(f);
  double worst = 0.0;
  for (Index i = 0; i < g.size(); ++i)
    if (std::abs(f.values(i)) < 0.8)  // away from the center kink
      worst = std::max(worst, std::abs(d.values(i) - f.values(i)));
  CHECK(worst <= 2.0 * g.dx(0));
}

TEST_CASE("signed_distance_field output is discretely 1-Lipschitz") {
  const Grid g = Grid::line(-3.0, 3.0, 301);
  const Field f = sample(
      [](const Vec2& x) { return std::sin(2.0 * x.x()) + 0.2 * x.x(); }, g, 0.0);
  const Field d = signed_distance_field(f);
  for (Index i = 0; i + 1 < g.size(); ++i)
    CHECK(std::abs(d.values(i + 1) - d.values(i)) <= g.dx(0) * (1.0 + 1e-9));
}

TEST_CASE("nearest_points: tie sets and the on-interface case") {
  InterfaceSet iface;
  iface.dim = 1;
  iface.points = {Vec2(-1.0, 0.0), Vec2(1.0, 0.0)};
  const auto both = nearest_points(Vec2(0.0, 0.0), iface, 1e-9);
  CHECK(both.size() == 2);
  const auto self = nearest_points(Vec2(1.0, 0.0), iface, 1e-9);
  REQUIRE(self.size() == 1);
  CHECK(self[0].x() == doctest::Approx(1.0));
  // all members of the tie set are within tol of the minimum distance
  for (const auto& p : both)
    CHECK(std::abs((p - Vec2(0, 0)).norm() - iface.distance(Vec2(0, 0))) <= 1e-9);
}

TEST_CASE("nearest point of x=0.5 at t=1 is the vanishing center") {
  const Grid g = Grid::line(-8.0, 8.0, 1601);
  const Field w = sample(
      [](const Vec2& x) { return oracles::example_two_bumps(x.x(), 1.0).w; }, g, 1.0);
  const InterfaceSet iface = extract_interface(w);
  const auto near = nearest_points(Vec2(0.5, 0.0), iface, g.dx(0));
  REQUIRE(!near.empty());
  for (const auto& p : near) CHECK(std::abs(p.x()) <= 0.1);
}

TEST_CASE("detect_extinction matches the two-bump topology change") {
  const Grid g = Grid::line(-8.0, 8.0, 801);
  const Trajectory traj = exact_two_bump_trajectory(g, 0.5, 1.5, 41);
  // the inner component dies at t = 1: its center is an extinction point
  CHECK(detect_extinction(traj, Vec2(0.0, 0.0), 1.0, 3.0 * g.dx(0), 0.2));
  // the outer front at |x| = 4 persists
  CHECK_FALSE(detect_extinction(traj, Vec2(4.0, 0.0), 1.0, 3.0 * g.dx(0), 0.2));
}

TEST_CASE("detect_extinction is false on a uniformly expanding front") {
  const Grid g = Grid::line(-4.0, 4.0, 401);
  const Field u0 = sample([](const Vec2& x) { return 1.0 - std::abs(x.x()); }, g, 0.0);
  const Trajectory traj =
      solve_base(u0, H1Spec::constant(1.0), 1.0, kEuler, {1, {}, 0.0});
  const InterfaceSet iface = extract_interface(traj.at_time(0.5, 0.05));
  const auto near = nearest_points(Vec2(1.6, 0.0), iface, g.dx(0));
  REQUIRE(!near.empty());
  CHECK_FALSE(detect_extinction(traj, near.front(), 0.5, 3.0 * g.dx(0), 0.2));
}

TEST_CASE("detect_extinction demands snapshots inside the window") {
  const Grid g = Grid::line(-8.0, 8.0, 401);
  const Trajectory traj = exact_two_bump_trajectory(g, 0.5, 1.5, 5);
  CHECK_THROWS_AS(detect_extinction(traj, Vec2(0.0, 0.0), 1.4, 3.0 * g.dx(0), 0.01),
                  UsageError);
}

TEST_CASE("classify_continuity reproduces the discontinuity segment") {
  const Grid g = Grid::line(-9.0, 9.0, 1801);
  const Trajectory traj = exact_two_bump_trajectory(g, 0.4, 1.6, 61);
  ContinuityParams params;
  params.delta = 0.15;
  // on the segment l = {(x,1) : -2 < |x| < 2}: sole nearest point goes extinct
  for (const double x : {0.0, 0.5, 1.0, -1.5}) {
    const auto v = classify_continuity(traj, Vec2(x, 0.0), 1.0, params);
    CHECK_FALSE(v.continuous);
  }
  // outside the segment or away from t=1: continuous
  for (const double x : {5.0, -6.0}) {
    const auto v = classify_continuity(traj, Vec2(x, 0.0), 1.0, params);
    CHECK(v.continuous);
  }
  const auto early = classify_continuity(traj, Vec2(0.0, 0.0), 0.8, params);
  CHECK(early.continuous);
  const auto late = classify_continuity(traj, Vec2(0.0, 0.0), 1.2, params);
  CHECK(late.continuous);
}

TEST_CASE("classify_continuity on an expanding front is continuous") {
  const Grid g = Grid::line(-4.0, 4.0, 401);
  const Field u0 = sample([](const Vec2& x) { return 1.0 - std::abs(x.x()); }, g, 0.0);
  const Trajectory traj =
      solve_base(u0, H1Spec::constant(1.0), 1.2, kEuler, {1, {}, 0.0});
  const auto v = classify_continuity(traj, Vec2(0.3, 0.0), 0.6, {});
  CHECK(v.continuous);
}

TEST_CASE("cone_check certifies finite propagation") {
  const CflPolicy policy{0.5, CflPolicy::Integrator::Euler, 2.0};
  // expanding circle: positive region only grows
  {
    const Grid g = Grid::line(-4.0, 4.0, 401);
    const Field u0 = sample([](const Vec2& x) { return 1.0 - std::abs(x.x()); }, g, 0.0);
    const Trajectory traj =
        solve_base(u0, H1Spec::constant(1.0), 1.0, policy, {1, {}, 0.0});
    CHECK(cone_check(traj, Vec2(0.0, 0.0), 0.0, 0.8, 1.0));
  }
  // shrinking circle: radius law R(t) = R0 - t keeps the cone single-signed
  {
    const Grid g = Grid::line(-4.0, 4.0, 401);
    const Field u0 = sample([](const Vec2& x) { return 2.0 - std::abs(x.x()); }, g, 0.0);
    const H1Spec h1 = H1Spec::constant(-1.0);
    const Trajectory traj = solve_base(u0, h1, 3.8, policy, {1, {}, 0.0});
    CHECK(cone_check(traj, Vec2(0.0, 0.0), 0.5, 0.8, h1.max_speed()));
    // an over-shallow slope (pretending L2/4) outruns the shrinking region
    CHECK_FALSE(cone_check(traj, Vec2(0.0, 0.0), 0.5, 0.8, h1.max_speed() / 4.0));
  }
}

TEST_CASE("gradient_deviation on exact and scaled distance fields") {
  const Grid g = Grid::rect({-2, -2}, {2, 2}, 161, 161);
  const Field d = sample([](const Vec2& x) { return x.norm() - 1.0; }, g, 0.0);
  CHECK(gradient_deviation(d, 0.5) <= 2.0 * g.dx(0));
  const Field d2 = sample([](const Vec2& x) { return 2.0 * (x.norm() - 1.0); }, g, 0.0);
  CHECK(gradient_deviation(d2, 0.5) == doctest::Approx(1.0).epsilon(0.05));
  CHECK_THROWS_AS(gradient_deviation(d, -1.0), UsageError);
}

TEST_CASE("hausdorff distance of interface clouds") {
  InterfaceSet a, b;
  a.points = {Vec2(0, 0), Vec2(1, 0)};
  b.points = {Vec2(0.1, 0), Vec2(1.05, 0)};
  CHECK(hausdorff_distance(a, b) == doctest::Approx(0.1));
}
