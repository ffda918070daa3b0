#include "swpm/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "swpm/errors.hpp"

namespace swpm {

std::string_view to_string(Scheme s) { return s == Scheme::claw2 ? "claw2" : "sharp5"; }

Scheme scheme_from_string(std::string_view name) {
  if (name == "claw2") return Scheme::claw2;
  if (name == "sharp5") return Scheme::sharp5;
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(Study s) { return s == Study::single ? "single" : "convergence"; }

Study study_from_string(std::string_view name) {
  if (name == "single") return Study::single;
  if (name == "convergence") return Study::convergence;
  throw ConfigError("unknown study '" + std::string(name) + "'");
}

namespace {

int cells_along(double a, double b, double h, const char* axis) {
  const double n = (b - a) / h;
  const double r = std::round(n);
  if (!(r >= 1.0) || std::abs(n - r) > 1e-9 * std::max(1.0, r))
    throw ConfigError(std::string("grid: extent along ") + axis +
                      " is not an integer multiple of h");
  return static_cast<int>(r);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& v) {
  // Accept "1/240" style reciprocals for spacings.
  if (auto slash = v.find('/'); slash != std::string::npos) {
    const double a = to_double(key, trim(v.substr(0, slash)));
    const double b = to_double(key, trim(v.substr(slash + 1)));
    if (b == 0.0) throw ConfigError(key + ": division by zero");
    return a / b;
  }
  double out = 0.0;
  const auto* first = v.data();
  const auto* last = v.data() + v.size();
  auto [p, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || p != last)
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw ConfigError(key + ": expected true/false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> to_doubles(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& s : split_list(v)) out.push_back(to_double(key, s));
  return out;
}

std::vector<int> to_ints(const std::string& key, const std::string& v) {
  std::vector<int> out;
  for (const auto& s : split_list(v)) out.push_back(to_int(key, s));
  return out;
}

TransverseMode transverse_from_string(const std::string& v) {
  if (v == "none") return TransverseMode::none;
  if (v == "first") return TransverseMode::first;
  if (v == "second") return TransverseMode::second;
  throw ConfigError("claw2.transverse: unknown mode '" + v + "'");
}

std::string_view to_string(TransverseMode m) {
  switch (m) {
    case TransverseMode::none: return "none";
    case TransverseMode::first: return "first";
    case TransverseMode::second: return "second";
  }
  return "second";
}

using Setter = std::function<void(ExperimentConfig&, const std::string& key, const std::string&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> m;
    auto num = [&m](const char* key, double ExperimentConfig::*field) {
      m[key] = [field](ExperimentConfig& c, const std::string& k, const std::string& v) {
        c.*field = to_double(k, v);
      };
    };
    m["name"] = [](ExperimentConfig& c, const std::string&, const std::string& v) { c.name = v; };
    m["study"] = [](ExperimentConfig& c, const std::string&, const std::string& v) {
      c.study = study_from_string(v);
    };
    m["scheme"] = [](ExperimentConfig& c, const std::string&, const std::string& v) {
      c.scheme = scheme_from_string(v);
    };
    m["medium.kind"] = [](ExperimentConfig& c, const std::string&, const std::string& v) {
      c.medium.kind = medium_kind_from_string(v);
    };
    m["medium.KA"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.medium.KA = to_double(k, v);
    };
    m["medium.rhoA"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.medium.rhoA = to_double(k, v);
    };
    m["medium.KB"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.medium.KB = to_double(k, v);
    };
    m["medium.rhoB"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.medium.rhoB = to_double(k, v);
    };
    num("grid.x0", &ExperimentConfig::x0);
    num("grid.x1", &ExperimentConfig::x1);
    num("grid.y0", &ExperimentConfig::y0);
    num("grid.y1", &ExperimentConfig::y1);
    num("grid.h", &ExperimentConfig::h);
    m["grid.dim"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.dim = to_int(k, v);
    };
    auto edge = [&m](const char* key, BoundaryKind BoundarySpec::*field) {
      m[key] = [field](ExperimentConfig& c, const std::string&, const std::string& v) {
        c.bc.*field = boundary_kind_from_string(v);
      };
    };
    edge("bc.left", &BoundarySpec::left);
    edge("bc.right", &BoundarySpec::right);
    edge("bc.bottom", &BoundarySpec::bottom);
    edge("bc.top", &BoundarySpec::top);
    m["ic.amplitude"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.ic.amplitude = to_double(k, v);
    };
    m["ic.xc"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.ic.xc = to_double(k, v);
    };
    m["ic.yc"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.ic.yc = to_double(k, v);
    };
    m["ic.width"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.ic.width = to_double(k, v);
    };
    num("time.final", &ExperimentConfig::t_final);
    m["output.times"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.output_times = to_doubles(k, v);
    };
    m["output.dumps"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.dumps = to_bool(k, v);
    };
    m["output.slices"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.slices = to_bool(k, v);
    };
    m["diagnostics.entropy"] = [](ExperimentConfig& c, const std::string& k,
                                  const std::string& v) { c.entropy = to_bool(k, v); };
    m["diagnostics.stride"] = [](ExperimentConfig& c, const std::string& k,
                                 const std::string& v) { c.diag_stride = to_int(k, v); };
    num("step.cfl", &ExperimentConfig::cfl);
    num("step.cfl_max", &ExperimentConfig::cfl_max);
    m["step.max_retries"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.max_retries = to_int(k, v);
    };
    m["claw2.order"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.claw2_order = to_int(k, v);
    };
    m["claw2.limiter"] = [](ExperimentConfig& c, const std::string&, const std::string& v) {
      c.limiter = limiter_from_string(v);
    };
    m["claw2.transverse"] = [](ExperimentConfig& c, const std::string&, const std::string& v) {
      c.transverse = transverse_from_string(v);
    };
    num("sharp5.weno_epsilon", &ExperimentConfig::weno_epsilon);
    m["workers"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.workers = to_int(k, v);
    };
    m["convergence.resolutions"] = [](ExperimentConfig& c, const std::string& k,
                                      const std::string& v) { c.resolutions = to_ints(k, v); };
    m["convergence.reference"] = [](ExperimentConfig& c, const std::string& k,
                                    const std::string& v) {
      c.reference_resolution = to_int(k, v);
    };
    m["huge"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.huge = to_bool(k, v);
    };
    m["collide.t_isolate_a"] = [](ExperimentConfig& c, const std::string& k,
                                  const std::string& v) {
      c.collision.t_isolate_a = to_double(k, v);
    };
    m["collide.t_isolate_b"] = [](ExperimentConfig& c, const std::string& k,
                                  const std::string& v) {
      c.collision.t_isolate_b = to_double(k, v);
    };
    m["collide.t_run"] = [](ExperimentConfig& c, const std::string& k, const std::string& v) {
      c.collision.t_run = to_double(k, v);
    };
    m["collide.output_times"] = [](ExperimentConfig& c, const std::string& k,
                                   const std::string& v) {
      c.collision.output_times = to_doubles(k, v);
    };
    m["interact1d.t_train"] = [](ExperimentConfig& c, const std::string& k,
                                 const std::string& v) {
      c.interact1d.t_train = to_double(k, v);
    };
    m["interact1d.t_isolate"] = [](ExperimentConfig& c, const std::string& k,
                                   const std::string& v) {
      c.interact1d.t_isolate = to_double(k, v);
    };
    m["interact1d.small_amplitude"] = [](ExperimentConfig& c, const std::string& k,
                                         const std::string& v) {
      c.interact1d.small_amplitude = to_double(k, v);
    };
    m["interact1d.headon_offset"] = [](ExperimentConfig& c, const std::string& k,
                                       const std::string& v) {
      c.interact1d.headon_offset = to_int(k, v);
    };
    m["interact1d.overtake_offset"] = [](ExperimentConfig& c, const std::string& k,
                                         const std::string& v) {
      c.interact1d.overtake_offset = to_int(k, v);
    };
    m["interact1d.t_interact"] = [](ExperimentConfig& c, const std::string& k,
                                    const std::string& v) {
      c.interact1d.t_interact = to_double(k, v);
    };
    return m;
  }();
  return table;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  return os.str();
}

}  // namespace

void ExperimentConfig::validate() const {
  medium.validate();
  bc.validate();
  if (dim != 1 && dim != 2) throw ConfigError("grid.dim must be 1 or 2");
  if (dim == 1 && medium.kind != MediumKind::layered1d && medium.kind != MediumKind::homogeneous)
    throw ConfigError("one-dimensional runs need a layered1d or homogeneous medium");
  if (!(h > 0.0)) throw ConfigError("grid.h must be positive");
  if (!(x1 > x0) || (dim == 2 && !(y1 > y0))) throw ConfigError("grid: empty extent");
  cells_along(x0, x1, h, "x");
  if (dim == 2) cells_along(y0, y1, h, "y");
  if (!(t_final >= 0.0)) throw ConfigError("time.final must be non-negative");
  for (double t : output_times)
    if (t < 0.0 || t > t_final) throw ConfigError("output.times must lie in [0, time.final]");
  if (cfl < 0.0 || cfl_max < 0.0) throw ConfigError("step: cfl values must be non-negative");
  step_control().validate();
  if (claw2_order != 1 && claw2_order != 2) throw ConfigError("claw2.order must be 1 or 2");
  if (!(weno_epsilon > 0.0)) throw ConfigError("sharp5.weno_epsilon must be positive");
  if (diag_stride < 1) throw ConfigError("diagnostics.stride must be at least 1");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (resolutions.empty()) throw ConfigError("convergence.resolutions must not be empty");
  for (int r : resolutions)
    if (r <= 0 || reference_resolution % r != 0)
      throw ConfigError("convergence.reference must be a multiple of every resolution");
  if (1.0 + ic.amplitude <= 0.0) throw ConfigError("ic.amplitude must exceed -1");
  if (!(ic.width > 0.0)) throw ConfigError("ic.width must be positive");
}

GridGeometry ExperimentConfig::geometry() const {
  GridGeometry g;
  g.h = h;
  g.x0 = x0;
  g.nx = cells_along(x0, x1, h, "x");
  if (dim == 1) {
    g.y0 = -0.5 * h;
    g.ny = 1;
  } else {
    g.y0 = y0;
    g.ny = cells_along(y0, y1, h, "y");
  }
  g.ghost = 3;
  return g;
}

StepControl ExperimentConfig::step_control() const {
  StepControl c;
  const bool sharp = scheme == Scheme::sharp5;
  c.cfl_target = cfl > 0.0 ? cfl : (sharp ? Sharp5::default_cfl_target : 0.9);
  c.cfl_max = cfl_max > 0.0 ? cfl_max : (sharp ? Sharp5::default_cfl_max : 1.0);
  c.t_final = t_final;
  c.max_retries = max_retries;
  return c;
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig c) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end())
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    try {
      it->second(c, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string to_config_text(const ExperimentConfig& c) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "name = " << c.name << '\n';
  os << "study = " << to_string(c.study) << '\n';
  os << "scheme = " << to_string(c.scheme) << '\n';
  os << "medium.kind = " << to_string(c.medium.kind) << '\n';
  os << "medium.KA = " << c.medium.KA << '\n';
  os << "medium.rhoA = " << c.medium.rhoA << '\n';
  os << "medium.KB = " << c.medium.KB << '\n';
  os << "medium.rhoB = " << c.medium.rhoB << '\n';
  os << "grid.x0 = " << c.x0 << '\n';
  os << "grid.x1 = " << c.x1 << '\n';
  os << "grid.y0 = " << c.y0 << '\n';
  os << "grid.y1 = " << c.y1 << '\n';
  os << "grid.h = " << c.h << '\n';
  os << "grid.dim = " << c.dim << '\n';
  os << "bc.left = " << to_string(c.bc.left) << '\n';
  os << "bc.right = " << to_string(c.bc.right) << '\n';
  os << "bc.bottom = " << to_string(c.bc.bottom) << '\n';
  os << "bc.top = " << to_string(c.bc.top) << '\n';
  os << "ic.amplitude = " << c.ic.amplitude << '\n';
  os << "ic.xc = " << c.ic.xc << '\n';
  os << "ic.yc = " << c.ic.yc << '\n';
  os << "ic.width = " << c.ic.width << '\n';
  os << "time.final = " << c.t_final << '\n';
  os << "output.times = " << join(c.output_times) << '\n';
  os << "output.dumps = " << (c.dumps ? "true" : "false") << '\n';
  os << "output.slices = " << (c.slices ? "true" : "false") << '\n';
  os << "diagnostics.entropy = " << (c.entropy ? "true" : "false") << '\n';
  os << "diagnostics.stride = " << c.diag_stride << '\n';
  os << "step.cfl = " << c.cfl << '\n';
  os << "step.cfl_max = " << c.cfl_max << '\n';
  os << "step.max_retries = " << c.max_retries << '\n';
  os << "claw2.order = " << c.claw2_order << '\n';
  os << "claw2.limiter = " << to_string(c.limiter) << '\n';
  os << "claw2.transverse = " << to_string(c.transverse) << '\n';
  os << "sharp5.weno_epsilon = " << c.weno_epsilon << '\n';
  os << "workers = " << c.workers << '\n';
  os << "convergence.resolutions = " << join(c.resolutions) << '\n';
  os << "convergence.reference = " << c.reference_resolution << '\n';
  os << "huge = " << (c.huge ? "true" : "false") << '\n';
  os << "collide.t_isolate_a = " << c.collision.t_isolate_a << '\n';
  os << "collide.t_isolate_b = " << c.collision.t_isolate_b << '\n';
  os << "collide.t_run = " << c.collision.t_run << '\n';
  os << "collide.output_times = " << join(c.collision.output_times) << '\n';
  os << "interact1d.t_train = " << c.interact1d.t_train << '\n';
  os << "interact1d.t_isolate = " << c.interact1d.t_isolate << '\n';
  os << "interact1d.small_amplitude = " << c.interact1d.small_amplitude << '\n';
  os << "interact1d.headon_offset = " << c.interact1d.headon_offset << '\n';
  os << "interact1d.overtake_offset = " << c.interact1d.overtake_offset << '\n';
  os << "interact1d.t_interact = " << c.interact1d.t_interact << '\n';
  return os.str();
}

namespace {

ExperimentConfig quadrant_base(const char* name) {
  ExperimentConfig c;
  c.name = name;
  c.scheme = Scheme::sharp5;
  c.x1 = c.y1 = 20.0;
  c.h = 1.0 / 20.0;
  c.t_final = 16.0;
  c.output_times = {8.0, 16.0};
  return c;
}

ExperimentConfig convergence_base(const char* name) {
  ExperimentConfig c;
  c.name = name;
  c.study = Study::convergence;
  c.scheme = Scheme::claw2;
  c.x1 = c.y1 = 5.0;
  c.h = 1.0 / 80.0;
  c.t_final = 3.0;
  c.output_times = {3.0};
  c.dumps = false;
  c.slices = false;
  c.entropy = false;
  c.diag_stride = 50;
  return c;
}

ExperimentConfig entropy_base(const char* name) {
  ExperimentConfig c;
  c.name = name;
  c.scheme = Scheme::claw2;
  c.x1 = c.y1 = 10.0;
  c.h = 1.0 / 240.0;
  c.t_final = 20.0;
  c.output_times = {20.0};
  c.bc = BoundarySpec::all(BoundaryKind::reflecting_wall);
  c.diag_stride = 10;
  return c;
}

const std::map<std::string, std::function<ExperimentConfig()>, std::less<>>& presets() {
  static const std::map<std::string, std::function<ExperimentConfig()>, std::less<>> table = [] {
    std::map<std::string, std::function<ExperimentConfig()>, std::less<>> m;
    m["quadrant-linear-homogeneous"] = [] {
      auto c = quadrant_base("quadrant-linear-homogeneous");
      c.ic.amplitude = 5e-3;
      return c;
    };
    m["quadrant-nonlinear-homogeneous"] = [] {
      return quadrant_base("quadrant-nonlinear-homogeneous");
    };
    m["quadrant-linear-checkerboard"] = [] {
      auto c = quadrant_base("quadrant-linear-checkerboard");
      c.medium = {MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
      c.ic.amplitude = 5e-3;
      return c;
    };
    m["quadrant-nonlinear-checkerboard"] = [] {
      auto c = quadrant_base("quadrant-nonlinear-checkerboard");
      c.medium = {MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
      return c;
    };
    m["convergence-sinusoidal"] = [] {
      auto c = convergence_base("convergence-sinusoidal");
      c.medium = {MediumKind::sinusoidal, 1.0, 1.0, 10.0, 10.0};
      return c;
    };
    m["convergence-checkerboard"] = [] {
      auto c = convergence_base("convergence-checkerboard");
      c.medium = {MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
      return c;
    };
    m["convergence-checkerboard-sharp5"] = [] {
      auto c = convergence_base("convergence-checkerboard-sharp5");
      c.medium = {MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
      c.scheme = Scheme::sharp5;
      return c;
    };
    m["entropy-homogeneous"] = [] { return entropy_base("entropy-homogeneous"); };
    m["entropy-sinusoidal"] = [] {
      auto c = entropy_base("entropy-sinusoidal");
      c.medium = {MediumKind::sinusoidal, 1.0, 1.0, 10.0, 10.0};
      return c;
    };
    m["formation-checkerboard"] = [] {
      ExperimentConfig c;
      c.name = "formation-checkerboard";
      c.scheme = Scheme::sharp5;
      c.medium = {MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
      c.x1 = c.y1 = 40.0;
      c.h = 1.0 / 60.0;
      c.t_final = 40.0;
      c.output_times = {20.0, 40.0};
      c.bc = BoundarySpec::all(BoundaryKind::reflecting_wall);
      c.diag_stride = 10;
      return c;
    };
    m["collision"] = [] {
      ExperimentConfig c;
      c.name = "collision";
      c.scheme = Scheme::sharp5;
      c.medium = {MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
      c.x1 = c.y1 = 40.0;
      c.h = 1.0 / 20.0;
      c.bc = BoundarySpec::all(BoundaryKind::reflecting_wall);
      c.t_final = 24.0;
      c.output_times = {20.0, 24.0};
      c.collision = {20.0, 24.0, 9.0, {0.0, 3.0, 6.0, 9.0}};
      c.diag_stride = 10;
      return c;
    };
    m["interact1d"] = [] {
      ExperimentConfig c;
      c.name = "interact1d";
      c.scheme = Scheme::sharp5;
      c.dim = 1;
      c.medium = {MediumKind::layered1d, 1.0, 1.0, 4.0, 4.0};
      c.x1 = 300.0;
      c.h = 1.0 / 24.0;
      c.bc.left = BoundaryKind::reflecting_wall;
      c.bc.right = BoundaryKind::outflow_extrapolation;
      c.ic = {1.0, 0.0, 0.0, 10.0};
      c.interact1d = {100.0, 60.0, 0.3, 40, 8, 200.0};
      c.t_final = 100.0;
      c.output_times = {100.0};
      c.diag_stride = 10;
      return c;
    };
    m["formation-paper"] = [] {
      ExperimentConfig c;
      c.name = "formation-paper";
      c.scheme = Scheme::sharp5;
      c.medium = {MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
      c.x1 = c.y1 = 220.0;
      c.h = 1.0 / 240.0;
      c.t_final = 200.0;
      c.output_times = {90.0, 200.0};
      c.bc = BoundarySpec::all(BoundaryKind::reflecting_wall);
      c.diag_stride = 100;
      c.huge = true;
      return c;
    };
    m["collision-paper"] = [] {
      ExperimentConfig c = presets().at("formation-paper")();
      c.name = "collision-paper";
      c.t_final = 190.0;
      c.output_times = {180.0, 190.0};
      c.collision = {180.0, 190.0, 9.0, {0.0, 3.0, 6.0, 9.0}};
      return c;
    };
    return m;
  }();
  return table;
}

}  // namespace

ExperimentConfig preset(std::string_view name, bool huge) {
  const auto& table = presets();
  const auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown preset '" + std::string(name) + "'");
  ExperimentConfig c = it->second();
  if (c.huge && !huge)
    throw ConfigError("preset '" + std::string(name) +
                      "' is paper scale (hours to days on many cores); pass --huge to run it");
  return c;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : presets()) out.push_back(k);
  return out;
}

}  // namespace swpm
