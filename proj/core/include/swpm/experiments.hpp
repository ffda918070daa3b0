#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "swpm/claw2.hpp"
#include "swpm/config.hpp"
#include "swpm/diagnostics.hpp"
#include "swpm/sharp5.hpp"

namespace swpm {

/// Material field of a configuration, ghost frame filled for its boundaries.
MaterialField make_field(const ExperimentConfig& cfg);

/// Gaussian pulse initial state of a configuration.
GridState make_initial_state(const ExperimentConfig& cfg, const MaterialField& field);

/// Drives either scheme with the configuration's CFL control.
class Solver {
 public:
  Solver(const ExperimentConfig& cfg, const MaterialField& field);
  ~Solver();

  /// One step of at most t_end - state.t.
  StepReport step(GridState& state, double t_end);

  using StepHook = std::function<void(const GridState&, long step)>;
  /// Steps until state.t reaches t_end; returns the number of steps taken.
  long advance(GridState& state, double t_end, const StepHook& hook = {});

 private:
  const MaterialField& field_;
  BoundarySpec bc_;
  StepControl ctrl_;
  std::unique_ptr<Claw2> claw2_;
  std::unique_ptr<Sharp5> sharp5_;
};

/// <outdir>/<name> with dumps/, series/ and tables/ below it.
struct OutputLayout {
  std::filesystem::path root;

  bool enabled() const { return !root.empty(); }
  std::filesystem::path dumps() const { return root / "dumps"; }
  std::filesystem::path series() const { return root / "series"; }
  std::filesystem::path tables() const { return root / "tables"; }

  static OutputLayout under(const std::filesystem::path& outdir, const std::string& name);
};

/// File stem for a snapshot, e.g. "formation_t_40".
std::string snapshot_stem(const std::string& name, double t);

struct RunResult {
  GridState final_state;
  /// States at the configured output times, in increasing time order.
  std::vector<GridState> snapshots;
  DiagnosticsSeries series;
  long steps = 0;
  std::vector<std::filesystem::path> files;
};

/// Time loop from the configured pulse (or from `initial`, whose time is
/// kept) to cfg.t_final. Writes dumps, slices and the diagnostics series
/// below `out` when it is enabled. On a numerical failure the last good state
/// is dumped as "<name>_failed.swpm" before the error propagates.
RunResult run_experiment(const ExperimentConfig& cfg, const OutputLayout& out = {},
                         const GridState* initial = nullptr);

struct ConvergenceRow {
  int inv_h = 0;
  double error = 0.0;
  /// Rate against the previous row; NaN on the first row.
  double rate = 0.0;
};

/// Self-convergence study: runs cfg at every 1/h in cfg.resolutions and at
/// cfg.reference_resolution, then compares stress at t_final. The table is
/// written to tables/<name>_convergence.csv when `out` is enabled.
std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& cfg,
                                            const OutputLayout& out = {});

std::vector<ConvergenceRow> convergence_table(const std::vector<int>& inv_h,
                                              const std::vector<ScalarField>& sigma,
                                              const ScalarField& reference);

struct CollisionResult {
  RunResult interaction;
  RunResult control;
};

/// Cuts the leading pulse out of both states, negates the velocity of the
/// later one and runs the superposition for cfg.collision.t_run; the control
/// run evolves the negated later pulse alone.
CollisionResult run_collision(const ExperimentConfig& cfg, const GridState& at_a,
                              const GridState& at_b, const OutputLayout& out = {});

/// Same, reading the two states from dumps written by run_experiment.
CollisionResult run_collision(const ExperimentConfig& cfg, const std::filesystem::path& dump_a,
                              const std::filesystem::path& dump_b, const OutputLayout& out = {});

struct Interact1dResult {
  RunResult train;
  RunResult overtaking;
  RunResult headon;
  /// The left (large, right-moving) pulse on its own.
  RunResult control;
  GridState large;
  GridState small;
};

/// One-dimensional stegoton experiments in a layered medium: the pulse train,
/// same-direction overtaking of a weaker stegoton, a head-on collision with a
/// velocity-negated copy, and the no-interaction control.
Interact1dResult run_1d_interaction(const ExperimentConfig& cfg, const OutputLayout& out = {});

}  // namespace swpm
