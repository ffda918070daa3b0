#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "swpm/grid.hpp"

namespace swpm {

/// Cell-wise interior scalar data (no ghost frame), row-major over (j, i).
struct ScalarField {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  std::vector<double> v;

  double& at(int i, int j) { return v[static_cast<std::size_t>(j) * nx + i]; }
  double at(int i, int j) const { return v[static_cast<std::size_t>(j) * nx + i]; }
};

/// Total stress sigma(eps_ij; K_ij) on the interior cells.
ScalarField stress_field(const GridState& state, const MaterialField& field);

/// Discrete mechanical energy: sum over cells of
/// 1/2 rho (u^2 + v^2) + (exp(K eps) - 1) / K + eps, times the cell area
/// (h^2, or h on a one-dimensional grid).
double entropy(const GridState& state, const MaterialField& field);

/// Averages factor x factor blocks of a fine field onto the coarse grid.
ScalarField restrict_block_average(const ScalarField& fine, int factor);

/// E = (h_ref / h) * ||sigma - R sigma_ref||_2 / ||R sigma_ref||_2, with R the
/// block-average restriction of the reference onto the coarse grid.
double relative_error(const ScalarField& sigma, const ScalarField& sigma_ref);

/// Rates between consecutive pairs, ln(E_k / E_{k+1}) / ln(h_k / h_{k+1}).
std::vector<double> convergence_rates(const std::vector<double>& h,
                                      const std::vector<double>& errors);

enum class SliceLine { y_eq_0, y_eq_x };
std::string_view to_string(SliceLine line);
SliceLine slice_line_from_string(std::string_view name);

struct SlicePoint {
  double s = 0.0;
  double sigma = 0.0;
};

/// y=0 reads the first interior row with s = x_i; y=x reads the diagonal
/// cells i=j with s = sqrt(2) x_i.
std::vector<SlicePoint> extract_slice(const GridState& state, const MaterialField& field,
                                      SliceLine line);

/// Keeps, in every row, only the cells at or right of the right-most strict
/// local minimum of the stress perturbation sigma - 2; the rest are set to the
/// rest state. Rows without a strict local minimum are left unchanged.
///
/// With peak_fraction > 0 only minima left of the right-most local maximum
/// reaching peak_fraction * max(sigma - 2) of the row are considered, so that
/// a low-amplitude precursor ahead of the pulse is kept with it.
GridState isolate_leading(const GridState& state, const MaterialField& field,
                          double peak_fraction = 0.0);

/// Index of the right-most strict interior local minimum of a row, or -1.
/// Only indices below `end` are considered when it is given.
int rightmost_local_minimum(const std::vector<double>& row, int end = -1);

/// Shifts the interior cells n cells to the right (negative n: left). Vacated
/// cells are set to the rest state.
GridState shift_cells(const GridState& state, int n);

struct Pulse {
  int index = 0;
  double s = 0.0;
  double amplitude = 0.0;
};

/// Local maxima of sigma - 2 along a slice that rise above `min_amplitude`.
/// Neighbouring maxima count as separate pulses only when sigma - 2 between
/// them falls below `separation` times the smaller of the two; otherwise the
/// lower one is dropped. Returned in order of increasing s.
std::vector<Pulse> detect_pulses(const std::vector<SlicePoint>& slice, double min_amplitude,
                                 double separation = 0.5);

/// Component-wise sum a + b; the momenta of b are negated when requested.
GridState superpose(const GridState& a, const GridState& b, bool negate_b_velocity);

/// Time series of the normalized entropy and the conserved totals.
struct DiagnosticsSeries {
  std::vector<double> times;
  std::vector<double> entropy;
  std::vector<double> mass_eps;
  std::vector<double> mom_x;
  std::vector<double> mom_y;
  double entropy0 = 0.0;

  void record(const GridState& state, const MaterialField& field);
  std::size_t size() const { return times.size(); }
  void write_csv(std::ostream& os) const;
};

}  // namespace swpm
