#ifndef LEVELSET_GRID_HPP
#define LEVELSET_GRID_HPP

#include <Eigen/Core>

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "levelset/error.hpp"

namespace levelset {

using Eigen::ArrayXd;
using Eigen::Index;
using Vec2 = Eigen::Vector2d;

/// Uniform node-centered Cartesian grid in one or two dimensions.
/// Endpoints are grid nodes; spacing is fused once at construction and node
/// coordinates are precomputed so every consumer sees bit-identical values.
class Grid {
public:
  Grid(std::vector<double> lo, std::vector<double> hi, std::vector<Index> n);

  static Grid line(double lo, double hi, Index n) { return Grid({lo}, {hi}, {n}); }
  static Grid rect(Vec2 lo, Vec2 hi, Index nx, Index ny) {
    return Grid({lo.x(), lo.y()}, {hi.x(), hi.y()}, {nx, ny});
  }

  int dim() const { return dim_; }
  double lo(int axis) const { return lo_[axis]; }
  double hi(int axis) const { return hi_[axis]; }
  double dx(int axis) const { return dx_[axis]; }
  double min_dx() const;
  Index n(int axis) const { return n_[axis]; }
  Index size() const { return size_; }

  /// Node coordinate along one axis, lo + i*dx, from the fused table.
  double coord(int axis, Index i) const { return (*coords_[axis])(i); }

  /// Flattened node index; x runs fastest (2D stored row-major in y).
  Index flatten(Index ix, Index iy = 0) const { return iy * n_[0] + ix; }
  Index ix(Index id) const { return id % n_[0]; }
  Index iy(Index id) const { return id / n_[0]; }

  /// Position of a flattened node index (y component is 0 in 1D).
  Vec2 position(Index id) const {
    return dim_ == 1 ? Vec2(coord(0, id), 0.0)
                     : Vec2(coord(0, ix(id)), coord(1, iy(id)));
  }

  bool same_layout(const Grid& other) const;

private:
  int dim_;
  std::array<double, 2> lo_{}, hi_{}, dx_{};
  std::array<Index, 2> n_{{1, 1}};
  Index size_;
  std::array<std::shared_ptr<const ArrayXd>, 2> coords_;
};

/// Construction with validation: hi > lo and n >= 3 per axis.
inline Grid make_grid(std::vector<double> lo, std::vector<double> hi,
                      std::vector<Index> n) {
  return Grid(std::move(lo), std::move(hi), std::move(n));
}

/// One time slice of node values on a grid. Fields are value types; solvers
/// never mutate their inputs and hand back fresh snapshots.
struct Field {
  Grid grid;
  ArrayXd values;
  double time = 0.0;

  Field(Grid g, ArrayXd v, double t) : grid(std::move(g)), values(std::move(v)), time(t) {}
  Field(const Grid& g, double fill, double t)
      : grid(g), values(ArrayXd::Constant(g.size(), fill)), time(t) {}

  double operator()(Index id) const { return values(id); }

  /// Value at the node nearest to x (used by point probes in reports).
  double at_position(const Vec2& x) const;
};

/// Time-ordered snapshots of one solver run.
struct Trajectory {
  std::vector<Field> snapshots;
  std::string solver;
  double max_dt = 0.0;  // largest accepted step, for tolerance bookkeeping

  const Field& front() const { return snapshots.front(); }
  const Field& back() const { return snapshots.back(); }
  std::vector<double> times() const;

  /// Snapshot whose time is nearest to t; errors if off by more than tol.
  const Field& at_time(double t, double tol) const;
};

/// Backward/forward difference quotients per axis at one node. At domain
/// faces the missing one-sided difference is replaced by the available one,
/// which equals a one-layer linear-extrapolation ghost.
struct OneSided {
  Vec2 minus = Vec2::Zero();
  Vec2 plus = Vec2::Zero();
};

OneSided one_sided_gradients(const Field& f, Index id);

/// Sample a scalar function of position onto a grid at time t.
/// Non-finite samples raise a data error naming the node.
Field sample(const std::function<double(const Vec2&)>& f, const Grid& grid, double t);

/// Max |a-b| over a node region (whole grid when no predicate is given).
double linf_distance(const Field& a, const Field& b);
double linf_distance(const Field& a, const Field& b,
                     const std::function<bool(Index)>& region);

}  // namespace levelset

#endif
