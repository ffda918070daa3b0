#pragma once

#include <string_view>

#include "swpm/grid.hpp"
#include "swpm/medium.hpp"

namespace swpm {

enum class Limiter { none, minmod, superbee, mc };
std::string_view to_string(Limiter l);
Limiter limiter_from_string(std::string_view name);

/// Limiter function phi(theta) for wave-by-wave limiting.
double limiter_phi(Limiter l, double theta);

/// How x-fluctuations are propagated across y-interfaces (and vice versa).
///   none   - dimensionally unsplit donor-cell update only
///   first  - the normal fluctuations are split transversally
///   second - the fluctuations plus the second-order correction fluxes are split
enum class TransverseMode { none, first, second };

struct StepControl {
  double cfl_target = 0.9;
  double cfl_max = 1.0;
  double dt_current = 0.0;
  double t_final = 0.0;
  int max_retries = 10;

  void validate() const;
};

struct StepReport {
  double dt = 0.0;
  double cfl = 0.0;
  int retries = 0;
};

/// Largest sound speed over the interior cells and one ghost layer.
double max_sound_speed(const GridState& state, const MaterialField& field);

/// dt = cfl_target * h / max c, never stepping past ctrl.t_final.
double compute_dt(const GridState& state, const MaterialField& field, const StepControl& ctrl,
                  double h);

struct Claw2Options {
  int order = 2;
  Limiter limiter = Limiter::mc;
  TransverseMode transverse = TransverseMode::second;
  int workers = 1;
};

/// Unsplit second-order wave-propagation step with f-wave Riemann solvers,
/// wave-by-wave limiting and transverse corner-transport corrections.
class Claw2 {
 public:
  Claw2(const MaterialField& field, const BoundarySpec& bc, Claw2Options opts = {});

  /// Fills the ghost frame and advances the state by dt. If the observed CFL
  /// number exceeds ctrl.cfl_max the step is rejected, dt halved and retried
  /// up to ctrl.max_retries times before NumericalError is thrown.
  StepReport step(GridState& state, double dt, const StepControl& ctrl);

  const Claw2Options& options() const { return opts_; }

 private:
  /// One attempt; returns the observed CFL. The state is updated only when
  /// the CFL is within cfl_max.
  double attempt(GridState& state, double dt, double cfl_max);
  void compute_cells(const GridState& state, double* cmax);
  void normal_solves();
  void second_order_corrections(double lambda);
  void transverse_splits(double lambda);
  void update(GridState& state, double lambda);

  const MaterialField& field_;
  BoundarySpec bc_;
  Claw2Options opts_;
  GridGeometry g_;
  bool two_d_;
  // Cell quantities.
  Array2D u_, v_, sig_, z_, c_;
  // x-interface (i - 1/2, j) and y-interface (i, j - 1/2) wave strengths,
  // stored at cell (i, j).
  Array2D bx1_, bx3_, by1_, by3_;
  // Second-order corrections, later augmented into the full correction fluxes.
  Array2D fx1_, fx2_, gy1_, gy3_;
  // Transverse split scalars of the fluctuations entering each cell.
  Array2D td_, tu_, tl_, tr_;
  GridState next_;
};

}  // namespace swpm
