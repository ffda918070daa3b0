#pragma once

#include <string_view>

#include "swpm/array2d.hpp"
#include "swpm/medium.hpp"

namespace swpm {

enum class BoundaryKind { reflecting_wall, outflow_extrapolation, periodic };

std::string_view to_string(BoundaryKind kind);
BoundaryKind boundary_kind_from_string(std::string_view name);

struct BoundarySpec {
  BoundaryKind left = BoundaryKind::reflecting_wall;
  BoundaryKind right = BoundaryKind::outflow_extrapolation;
  BoundaryKind bottom = BoundaryKind::reflecting_wall;
  BoundaryKind top = BoundaryKind::outflow_extrapolation;

  static BoundarySpec all(BoundaryKind k) { return {k, k, k, k}; }

  /// Throws ConfigError unless periodic edges come in opposite pairs.
  void validate() const;

  bool operator==(const BoundarySpec&) const = default;
};

/// Conserved variables q = (eps, rho u, rho v) per cell plus the solution time.
struct GridState {
  GridGeometry geom;
  Array2D eps;
  Array2D mx;
  Array2D my;
  double t = 0.0;

  GridState() = default;
  explicit GridState(const GridGeometry& g) : geom(g), eps(g), mx(g), my(g) {}

  bool operator==(const GridState&) const = default;
};

/// Throws NumericalError naming the first non-finite interior cell.
void check_finite(const GridState& state);

/// Fills the ghost frame of the state. Walls mirror eps and the tangential
/// momentum and negate the normal momentum; outflow copies the nearest
/// interior cell; periodic wraps. Corners are filled by the y pass over the
/// already-filled ghost columns.
void fill_ghost(GridState& state, const BoundarySpec& bc);

/// Same rule for material coefficients (mirror, copy or wrap; no sign flips).
void fill_ghost_material(MaterialField& field, const BoundarySpec& bc);

/// Gaussian stress perturbation about the rest stress sigma(0) = 2:
/// delta_sigma = amplitude * exp(-((x - xc)^2 + (y - yc)^2) / width), and
/// exp(K eps) = 1 + delta_sigma. Velocities are zero.
struct PulseParams {
  double amplitude = 5.0;
  double xc = 0.25;
  double yc = 0.25;
  double width = 10.0;

  bool operator==(const PulseParams&) const = default;
};

GridState set_initial_condition(const GridGeometry& geom, const MaterialField& field,
                                const PulseParams& pulse);

/// Interior-only sums of each conserved component (times h^2 for 2D, h for 1D).
struct ConservedTotals {
  double eps = 0.0;
  double mx = 0.0;
  double my = 0.0;
};
ConservedTotals conserved_totals(const GridState& state);

}  // namespace swpm
