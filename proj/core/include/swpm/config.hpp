#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swpm/claw2.hpp"
#include "swpm/grid.hpp"
#include "swpm/medium.hpp"
#include "swpm/sharp5.hpp"

namespace swpm {

enum class Scheme { claw2, sharp5 };
std::string_view to_string(Scheme s);
Scheme scheme_from_string(std::string_view name);

/// Isolation/superposition settings for the 2D collision experiment.
struct CollisionSpec {
  double t_isolate_a = 20.0;
  double t_isolate_b = 24.0;
  double t_run = 9.0;
  std::vector<double> output_times{0.0, 3.0, 6.0, 9.0};

  bool operator==(const CollisionSpec&) const = default;
};

/// Settings for the one-dimensional train, overtaking and head-on runs.
struct Interact1dSpec {
  double t_train = 100.0;
  /// Time at which the leading stegotons are cut out of the trains.
  double t_isolate = 60.0;
  /// Amplitude of the second, weaker train used for the overtaking run.
  double small_amplitude = 1.0;
  /// Medium periods by which the second pulse is placed ahead of the first.
  int headon_offset = 40;
  int overtake_offset = 10;
  double t_interact = 80.0;

  bool operator==(const Interact1dSpec&) const = default;
};

enum class Study { single, convergence };
std::string_view to_string(Study s);
Study study_from_string(std::string_view name);

struct ExperimentConfig {
  std::string name = "custom";
  /// `run` performs a single run or a self-convergence study.
  Study study = Study::single;
  Scheme scheme = Scheme::claw2;
  MediumSpec medium;
  double x0 = 0.0, x1 = 5.0, y0 = 0.0, y1 = 5.0;
  double h = 1.0 / 80.0;
  /// 1 selects a single-row grid with the y terms switched off.
  int dim = 2;
  BoundarySpec bc;
  PulseParams ic;
  double t_final = 3.0;
  std::vector<double> output_times;
  /// <= 0 selects the scheme default.
  double cfl = 0.0;
  double cfl_max = 0.0;
  int max_retries = 10;
  int claw2_order = 2;
  Limiter limiter = Limiter::mc;
  TransverseMode transverse = TransverseMode::second;
  double weno_epsilon = 1e-6;
  bool dumps = true;
  bool slices = true;
  bool entropy = true;
  int diag_stride = 1;
  int workers = 1;
  /// Resolutions 1/h and the reference 1/h for the convergence studies.
  std::vector<int> resolutions{80, 120, 160, 240};
  int reference_resolution = 480;
  /// Full-scale runs are refused unless this is set.
  bool huge = false;
  CollisionSpec collision;
  Interact1dSpec interact1d;

  /// Throws ConfigError on inconsistent values.
  void validate() const;
  GridGeometry geometry() const;
  StepControl step_control() const;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses "key = value" lines (dotted keys, '#' comments) on top of `base`.
/// Unknown keys and malformed values throw ConfigError.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

/// Serializes every key so that parse_config(to_config_text(c)) == c.
std::string to_config_text(const ExperimentConfig& c);

/// Named built-in configurations. Full-scale presets throw ConfigError
/// unless `huge` is set.
ExperimentConfig preset(std::string_view name, bool huge = false);
std::vector<std::string> preset_names();

}  // namespace swpm
