#pragma once

#include <span>
#include <vector>

#include "swpm/claw2.hpp"
#include "swpm/grid.hpp"
#include "swpm/riemann.hpp"

namespace swpm {

struct WenoOptions {
  double epsilon = 1e-6;
  /// Use the ideal linear weights (0.1, 0.6, 0.3) instead of the nonlinear ones.
  bool linear_weights = false;
};

/// Fifth-order WENO value at the right edge of the centre cell of the
/// five-cell stencil (a, b, c, d, e). The left edge is obtained by passing
/// the stencil reversed.
template <bool Linear>
inline double weno5_edge(double a, double b, double c, double d, double e, double epsilon) {
  const double p0 = (2.0 * a - 7.0 * b + 11.0 * c) * (1.0 / 6.0);
  const double p1 = (-b + 5.0 * c + 2.0 * d) * (1.0 / 6.0);
  const double p2 = (2.0 * c + 5.0 * d - e) * (1.0 / 6.0);
  if constexpr (Linear) {
    return 0.1 * p0 + 0.6 * p1 + 0.3 * p2;
  } else {
    const double t0 = a - 2.0 * b + c, u0 = a - 4.0 * b + 3.0 * c;
    const double t1 = b - 2.0 * c + d, u1 = b - d;
    const double t2 = c - 2.0 * d + e, u2 = 3.0 * c - 4.0 * d + e;
    const double s0 = epsilon + (13.0 / 12.0) * t0 * t0 + 0.25 * u0 * u0;
    const double s1 = epsilon + (13.0 / 12.0) * t1 * t1 + 0.25 * u1 * u1;
    const double s2 = epsilon + (13.0 / 12.0) * t2 * t2 + 0.25 * u2 * u2;
    const double w0 = 0.1 / (s0 * s0);
    const double w1 = 0.6 / (s1 * s1);
    const double w2 = 0.3 / (s2 * s2);
    return (w0 * p0 + w1 * p1 + w2 * p2) / (w0 + w1 + w2);
  }
}

inline double weno5_edge(double a, double b, double c, double d, double e,
                         const WenoOptions& opt) {
  return opt.linear_weights ? weno5_edge<true>(a, b, c, d, e, opt.epsilon)
                            : weno5_edge<false>(a, b, c, d, e, opt.epsilon);
}

/// Interface traces of a row of cell averages.
///
/// `row` holds n interior values preceded and followed by 3 ghost values.
/// For interface k (0 <= k <= n, between interior cells k-1 and k) `left[k]`
/// is the value just left of the interface (right edge of cell k-1) and
/// `right[k]` the value just right of it (left edge of cell k).
struct WenoTraces {
  std::vector<double> left;
  std::vector<double> right;
};
WenoTraces weno5_reconstruct(std::span<const double> row, const WenoOptions& opt = {});

/// Cell-internal flux difference f(q at right edge) - f(q at left edge) in
/// the cell's own material.
Vec3 internal_term_x(const Vec3& q_left_edge, const Vec3& q_right_edge, const Material& m);

/// Low-storage ten-stage fourth-order SSP Runge-Kutta step on a flat vector.
/// `rhs(x, out)` writes L(x) into out.
template <class Rhs>
void ssprk104_step(std::vector<double>& u, double dt, Rhs&& rhs) {
  const std::size_t n = u.size();
  std::vector<double> q1 = u;
  std::vector<double> k(n);
  auto stage = [&] {
    rhs(q1, k);
    for (std::size_t i = 0; i < n; ++i) q1[i] += dt / 6.0 * k[i];
  };
  for (int s = 0; s < 5; ++s) stage();
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = u[i] / 25.0 + 9.0 / 25.0 * q1[i];
    q1[i] = 15.0 * u[i] - 5.0 * q1[i];
  }
  for (int s = 0; s < 4; ++s) stage();
  rhs(q1, k);
  for (std::size_t i = 0; i < n; ++i) u[i] = u[i] + 0.6 * q1[i] + dt / 10.0 * k[i];
}

struct Sharp5Options {
  WenoOptions weno;
  int workers = 1;
};

/// Method-of-lines scheme: WENO5 traces of the conserved variables, f-wave
/// solves at every interface, cell-internal flux differences, SSP(10,4).
class Sharp5 {
 public:
  Sharp5(const MaterialField& field, const BoundarySpec& bc, Sharp5Options opts = {});

  /// dq/dt on the interior cells; fills the ghost frame of `state` first.
  void rhs(GridState& state, GridState& out);

  /// One SSP(10,4) step, with the same reject-and-halve policy as Claw2.
  /// The reported CFL number sums the x and y contributions in 2D.
  StepReport step(GridState& state, double dt, const StepControl& ctrl);

  /// dt = cfl_target * h / (d * max c), d the number of space dimensions.
  double stable_dt(const GridState& state, const StepControl& ctrl) const;

  static constexpr double default_cfl_target = 2.2;
  static constexpr double default_cfl_max = 2.5;

 private:
  template <bool Linear>
  void x_sweep(const GridState& q, GridState& out);
  template <bool Linear>
  void y_sweep(const GridState& q, GridState& out);

  const MaterialField& field_;
  BoundarySpec bc_;
  Sharp5Options opts_;
  GridGeometry g_;
  bool two_d_;
  GridState q1_, k_;
  // Per y-interface: amdq + g(lower trace), added to the cell below, and
  // apdq - g(upper trace), added to the cell above.
  Array2D py1_, py3_, my1_, my3_;
};

}  // namespace swpm
