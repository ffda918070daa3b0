#include "swpm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "swpm/errors.hpp"
#include "swpm/io.hpp"

namespace swpm {

MaterialField make_field(const ExperimentConfig& cfg) {
  MaterialField f = build_field(cfg.medium, cfg.geometry());
  fill_ghost_material(f, cfg.bc);
  return f;
}

GridState make_initial_state(const ExperimentConfig& cfg, const MaterialField& field) {
  GridState s = set_initial_condition(field.geom, field, cfg.ic);
  fill_ghost(s, cfg.bc);
  return s;
}

Solver::Solver(const ExperimentConfig& cfg, const MaterialField& field)
    : field_(field), bc_(cfg.bc), ctrl_(cfg.step_control()) {
  ctrl_.validate();
  if (cfg.scheme == Scheme::claw2) {
    Claw2Options o;
    o.order = cfg.claw2_order;
    o.limiter = cfg.limiter;
    o.transverse = cfg.transverse;
    o.workers = cfg.workers;
    claw2_ = std::make_unique<Claw2>(field, cfg.bc, o);
  } else {
    Sharp5Options o;
    o.weno.epsilon = cfg.weno_epsilon;
    o.workers = cfg.workers;
    sharp5_ = std::make_unique<Sharp5>(field, cfg.bc, o);
  }
}

Solver::~Solver() = default;

StepReport Solver::step(GridState& state, double t_end) {
  StepControl c = ctrl_;
  c.t_final = t_end;
  const double t0 = state.t;
  const double remaining = t_end - t0;
  double dt = 0.0;
  StepReport rep;
  if (claw2_) {
    fill_ghost(state, bc_);
    dt = compute_dt(state, field_, c, field_.geom.h);
    rep = claw2_->step(state, dt, c);
  } else {
    dt = sharp5_->stable_dt(state, c);
    rep = sharp5_->step(state, dt, c);
  }
  if (rep.retries == 0 && dt == remaining) state.t = t_end;
  return rep;
}

long Solver::advance(GridState& state, double t_end, const StepHook& hook) {
  long n = 0;
  while (state.t < t_end) {
    step(state, t_end);
    ++n;
    if (hook) hook(state, n);
  }
  return n;
}

OutputLayout OutputLayout::under(const std::filesystem::path& outdir, const std::string& name) {
  if (outdir.empty()) return {};
  return {outdir / name};
}

std::string snapshot_stem(const std::string& name, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "_t_%g", t);
  return name + buf;
}

namespace {

void write_snapshot(const ExperimentConfig& cfg, const GridState& s, const MaterialField& f,
                    const OutputLayout& out, RunResult& r) {
  if (!out.enabled()) return;
  const std::string stem = snapshot_stem(cfg.name, s.t);
  if (cfg.dumps) {
    const auto p = out.dumps() / (stem + ".swpm");
    write_dump(p, s);
    r.files.push_back(p);
  }
  if (cfg.slices) {
    std::vector<SliceLine> lines{SliceLine::y_eq_0};
    if (cfg.dim == 2) lines.push_back(SliceLine::y_eq_x);
    for (SliceLine l : lines) {
      const auto p = out.series() / (stem + "_" + std::string(to_string(l)) + ".csv");
      write_slice_csv(p, extract_slice(s, f, l));
      r.files.push_back(p);
    }
  }
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, const OutputLayout& out,
                         const GridState* initial) {
  cfg.validate();
  const MaterialField field = make_field(cfg);
  RunResult r;
  r.final_state = initial ? *initial : make_initial_state(cfg, field);
  GridState& s = r.final_state;
  if (!(s.geom == field.geom)) throw ConfigError("initial state does not match the configured grid");
  fill_ghost(s, cfg.bc);
  if (out.enabled()) {
    std::filesystem::create_directories(out.root);
    std::ofstream(out.root / (cfg.name + ".cfg")) << to_config_text(cfg);
  }

  std::vector<double> times = cfg.output_times;
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  auto record = [&] {
    if (cfg.entropy) r.series.record(s, field);
  };
  Solver solver(cfg, field);
  const auto hook = [&](const GridState&, long n) {
    if ((r.steps + n) % cfg.diag_stride == 0) record();
  };
  try {
    record();
    for (double t_out : times) {
      if (t_out < s.t) continue;
      r.steps += solver.advance(s, t_out, hook);
      r.snapshots.push_back(s);
      write_snapshot(cfg, s, field, out, r);
    }
    r.steps += solver.advance(s, cfg.t_final, hook);
  } catch (const NumericalError&) {
    if (out.enabled()) write_dump(out.dumps() / (cfg.name + "_failed.swpm"), s);
    throw;
  }
  if (cfg.entropy && (r.series.times.empty() || r.series.times.back() != s.t)) record();
  if (out.enabled() && cfg.entropy) {
    const auto p = out.series() / (cfg.name + "_diagnostics.csv");
    write_series_csv(p, r.series);
    r.files.push_back(p);
  }
  return r;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<int>& inv_h,
                                              const std::vector<ScalarField>& sigma,
                                              const ScalarField& reference) {
  if (inv_h.size() != sigma.size() || inv_h.empty())
    throw ConfigError("convergence_table: one stress field per resolution required");
  std::vector<ConvergenceRow> rows;
  for (std::size_t k = 0; k < inv_h.size(); ++k) {
    ConvergenceRow row;
    row.inv_h = inv_h[k];
    row.error = relative_error(sigma[k], reference);
    row.rate = std::numeric_limits<double>::quiet_NaN();
    if (k > 0) {
      const double hp = 1.0 / inv_h[k - 1];
      const double hk = 1.0 / inv_h[k];
      row.rate = convergence_rates({hp, hk}, {rows.back().error, row.error}).front();
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& cfg, const OutputLayout& out) {
  cfg.validate();
  auto run_at = [&](int n) {
    ExperimentConfig c = cfg;
    c.h = 1.0 / n;
    c.name = cfg.name + "_n" + std::to_string(n);
    c.output_times.clear();
    const RunResult r = run_experiment(c, out.enabled() ? OutputLayout{out.root} : OutputLayout{});
    if (out.enabled() && cfg.dumps) {
      const auto p = out.dumps() / (snapshot_stem(c.name, r.final_state.t) + ".swpm");
      write_dump(p, r.final_state);
    }
    return stress_field(r.final_state, make_field(c));
  };
  std::vector<ScalarField> sigma;
  for (int n : cfg.resolutions) sigma.push_back(run_at(n));
  const ScalarField ref = run_at(cfg.reference_resolution);
  auto rows = convergence_table(cfg.resolutions, sigma, ref);
  if (out.enabled()) {
    CsvTable t{{"inv_h", "error", "rate"}, {}};
    for (const auto& r : rows) t.rows.push_back({static_cast<double>(r.inv_h), r.error, r.rate});
    write_csv(out.tables() / (cfg.name + "_convergence.csv"), t);
  }
  return rows;
}

CollisionResult run_collision(const ExperimentConfig& cfg, const GridState& at_a,
                              const GridState& at_b, const OutputLayout& out) {
  const MaterialField field = make_field(cfg);
  if (!(at_a.geom == field.geom) || !(at_b.geom == field.geom))
    throw ConfigError("collision: dumps do not match the configured grid");
  const GridState a = isolate_leading(at_a, field);
  const GridState b = isolate_leading(at_b, field);

  ExperimentConfig c = cfg;
  c.t_final = cfg.collision.t_run;
  c.output_times = cfg.collision.output_times;
  CollisionResult res;

  GridState init = superpose(a, b, true);
  init.t = 0.0;
  c.name = cfg.name + "-interaction";
  res.interaction = run_experiment(c, out, &init);

  GridState ctrl = superpose(GridState(field.geom), b, true);
  ctrl.t = 0.0;
  c.name = cfg.name + "-control";
  res.control = run_experiment(c, out, &ctrl);
  return res;
}

CollisionResult run_collision(const ExperimentConfig& cfg, const std::filesystem::path& dump_a,
                              const std::filesystem::path& dump_b, const OutputLayout& out) {
  for (const auto& p : {dump_a, dump_b})
    if (!std::filesystem::exists(p))
      throw ConfigError("collision: missing dump '" + p.string() + "'");
  return run_collision(cfg, read_dump(dump_a), read_dump(dump_b), out);
}

namespace {
constexpr double kPeakFraction1d = 0.1;
}  // namespace

Interact1dResult run_1d_interaction(const ExperimentConfig& cfg, const OutputLayout& out) {
  cfg.validate();
  if (cfg.dim != 1) throw ConfigError("interact1d: grid.dim must be 1");
  const auto& spec = cfg.interact1d;
  if (!(spec.t_isolate > 0.0 && spec.t_isolate <= spec.t_train))
    throw ConfigError("interact1d: need 0 < t_isolate <= t_train");
  const double per_period = 1.0 / cfg.h;
  const int cells = static_cast<int>(std::lround(per_period));
  if (std::abs(per_period - cells) > 1e-9 * per_period)
    throw ConfigError("interact1d: 1/h must be an integer so pulses shift by whole periods");
  const MaterialField field = make_field(cfg);

  Interact1dResult res;
  ExperimentConfig c = cfg;
  c.t_final = spec.t_train;
  c.output_times = cfg.output_times;
  c.output_times.push_back(spec.t_isolate);
  for (double& t : c.output_times) t = std::min(t, spec.t_train);
  c.name = cfg.name + "-train";
  res.train = run_experiment(c, out);
  for (const auto& s : res.train.snapshots)
    if (s.t == spec.t_isolate) res.large = isolate_leading(s, field, kPeakFraction1d);

  ExperimentConfig cs = cfg;
  cs.ic.amplitude = spec.small_amplitude;
  cs.t_final = spec.t_isolate;
  cs.output_times = {spec.t_isolate};
  cs.name = cfg.name + "-small-train";
  res.small = isolate_leading(run_experiment(cs, out).final_state, field, kPeakFraction1d);

  ExperimentConfig ci = cfg;
  ci.t_final = spec.t_interact;
  ci.output_times = {spec.t_interact};
  res.large.t = 0.0;
  res.small.t = 0.0;

  GridState over = superpose(res.large, shift_cells(res.small, spec.overtake_offset * cells), false);
  ci.name = cfg.name + "-overtaking";
  res.overtaking = run_experiment(ci, out, &over);

  GridState head = superpose(res.large, shift_cells(res.large, spec.headon_offset * cells), true);
  ci.name = cfg.name + "-headon";
  res.headon = run_experiment(ci, out, &head);

  ci.name = cfg.name + "-control";
  res.control = run_experiment(ci, out, &res.large);
  return res;
}

}  // namespace swpm
