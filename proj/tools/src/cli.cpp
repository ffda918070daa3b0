#include "swpm_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>

#include "swpm/config.hpp"
#include "swpm/errors.hpp"
#include "swpm/experiments.hpp"
#include "swpm/io.hpp"
#include "swpm/riemann.hpp"

namespace swpm::cli {

namespace {

struct CommonOptions {
  std::string config;
  std::string preset;
  int workers = 0;
  std::string outdir = "out";
  double h = 0.0;
  bool huge = false;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--config", o.config, "Flat key = value configuration file");
  sub->add_option("--preset", o.preset, "Built-in configuration to start from");
  sub->add_option("--workers", o.workers, "Worker threads for the row-parallel kernels");
  sub->add_option("--outdir", o.outdir, "Output root; files go to <outdir>/<name>/")
      ->capture_default_str();
  sub->add_option("--h", o.h, "Override the grid spacing");
  sub->add_flag("--huge", o.huge, "Allow full-scale presets");
}

ExperimentConfig resolve(const CommonOptions& o, const char* default_preset) {
  ExperimentConfig c;
  std::string name = o.preset;
  if (name.empty() && o.config.empty() && default_preset) name = default_preset;
  if (!name.empty()) {
    try {
      c = preset(name, o.huge);
    } catch (const ConfigError& e) {
      std::string known;
      for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
      throw ConfigError(std::string(e.what()) + " (presets: " + known + ")");
    }
  }
  if (!o.config.empty()) c = load_config(o.config, c);
  if (o.workers > 0) c.workers = o.workers;
  if (o.h > 0.0) c.h = o.h;
  if (o.huge) c.huge = true;
  c.validate();
  return c;
}

void print_run(std::ostream& out, const ExperimentConfig& c, const RunResult& r) {
  out << c.name << ": " << r.steps << " steps to t=" << r.final_state.t;
  if (!r.series.entropy.empty()) out << ", normalized entropy " << r.series.entropy.back();
  out << '\n';
  for (const auto& f : r.files) out << "  wrote " << f.string() << '\n';
}

int cmd_run(const CommonOptions& o, std::ostream& out) {
  const ExperimentConfig c = resolve(o, nullptr);
  const OutputLayout layout = OutputLayout::under(o.outdir, c.name);
  if (c.study == Study::convergence) {
    const auto rows = run_convergence(c, layout);
    out << "inv_h,error,rate\n" << std::setprecision(4);
    for (const auto& r : rows) out << r.inv_h << ',' << r.error << ',' << r.rate << '\n';
    out << "wrote " << (layout.tables() / (c.name + "_convergence.csv")).string() << '\n';
    return kOk;
  }
  print_run(out, c, run_experiment(c, layout));
  return kOk;
}

int cmd_collide(const CommonOptions& o, std::ostream& out) {
  const ExperimentConfig c = resolve(o, "collision");
  const OutputLayout base = OutputLayout::under(o.outdir, c.name);
  const auto a = base.dumps() / (snapshot_stem(c.name, c.collision.t_isolate_a) + ".swpm");
  const auto b = base.dumps() / (snapshot_stem(c.name, c.collision.t_isolate_b) + ".swpm");
  for (const auto& p : {a, b})
    if (!std::filesystem::exists(p))
      throw ConfigError("missing dump '" + p.string() + "'; run `swpm run` with the same preset " +
                        "and output times covering the isolation times first");
  const CollisionResult r = run_collision(c, a, b, base);
  print_run(out, c, r.interaction);
  print_run(out, c, r.control);
  return kOk;
}

int cmd_interact1d(const CommonOptions& o, std::ostream& out) {
  const ExperimentConfig c = resolve(o, "interact1d");
  const OutputLayout layout = OutputLayout::under(o.outdir, c.name);
  const Interact1dResult r = run_1d_interaction(c, layout);
  for (const RunResult* run : {&r.train, &r.overtaking, &r.headon, &r.control})
    print_run(out, c, *run);
  const auto slice = extract_slice(r.train.final_state, make_field(c), SliceLine::y_eq_0);
  const auto pulses = detect_pulses(slice, 0.05);
  out << "pulses at t=" << r.train.final_state.t << ":";
  for (const auto& p : pulses) out << " (x=" << p.s << ", amplitude " << p.amplitude << ")";
  out << '\n';
  return kOk;
}

void print_vec(std::ostream& out, const char* label, const Vec3& v) {
  out << label << " = (" << v[0] << ", " << v[1] << ", " << v[2] << ")\n";
}

int cmd_riemann(const std::vector<double>& ql, const std::vector<double>& qr,
                const std::vector<double>& ml, const std::vector<double>& mr, std::ostream& out) {
  const Vec3 l{ql[0], ql[1], ql[2]};
  const Vec3 r{qr[0], qr[1], qr[2]};
  const Material a{ml[0], ml[1]};
  const Material b{mr[0], mr[1]};
  out << std::setprecision(12);
  const RiemannResult fw = solve_normal_x(l, r, a, b);
  out << "f-wave solver\n";
  out << "s1 = " << fw.s1 << ", s3 = " << fw.s3 << '\n';
  print_vec(out, "zwave1", fw.zwave1);
  print_vec(out, "zwave2", fw.zwave2);
  print_vec(out, "zwave3", fw.zwave3);
  print_vec(out, "amdq", fw.amdq);
  print_vec(out, "apdq", fw.apdq);
  const AllShockSolution ex = exact_all_shock(l, r, a, b);
  out << "all-shock solution (" << ex.iterations << " iterations)\n";
  out << "sigma_mid = " << ex.sigma_mid << ", u_mid = " << ex.u_mid << '\n';
  out << "s_left = " << ex.s_left << ", s_right = " << ex.s_right << '\n';
  print_vec(out, "q_mid_left", ex.q_mid_left);
  print_vec(out, "q_mid_right", ex.q_mid_right);
  print_vec(out, "amdq", ex.amdq);
  print_vec(out, "apdq", ex.apdq);
  double d = 0.0;
  for (int k = 0; k < 3; ++k)
    d = std::max({d, std::abs(fw.amdq[k] - ex.amdq[k]), std::abs(fw.apdq[k] - ex.apdq[k])});
  out << "max |f-wave - exact| = " << d << '\n';
  return kOk;
}

int cmd_rates(const std::string& in, const std::string& out_path, std::ostream& out) {
  CsvTable t = read_csv(in);
  int hc = -1;
  bool inverse = false;
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    if (t.columns[k] == "h") hc = static_cast<int>(k);
    if (t.columns[k] == "inv_h" && hc < 0) {
      hc = static_cast<int>(k);
      inverse = true;
    }
  }
  if (hc < 0) throw ConfigError("rates: need an 'h' or 'inv_h' column");
  const int ec = t.column("error");
  std::vector<double> h, e;
  for (const auto& r : t.rows) {
    const double v = r[static_cast<std::size_t>(hc)];
    h.push_back(inverse ? 1.0 / v : v);
    e.push_back(r[static_cast<std::size_t>(ec)]);
  }
  const std::vector<double> rates = convergence_rates(h, e);
  int rc = -1;
  for (std::size_t k = 0; k < t.columns.size(); ++k)
    if (t.columns[k] == "rate") rc = static_cast<int>(k);
  if (rc < 0) {
    t.columns.push_back("rate");
    for (auto& r : t.rows) r.push_back(0.0);
    rc = static_cast<int>(t.columns.size()) - 1;
  }
  for (std::size_t k = 0; k < t.rows.size(); ++k)
    t.rows[k][static_cast<std::size_t>(rc)] =
        k == 0 ? std::numeric_limits<double>::quiet_NaN() : rates[k - 1];
  write_csv(out_path.empty() ? in : out_path, t);
  out << std::setprecision(4);
  for (double r : rates) out << r << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-volume solvers for the 2D spatially varying p-system", "swpm"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  CommonOptions o_run, o_collide, o_1d;
  auto* run_cmd = app.add_subcommand("run", "Run a preset or configured experiment");
  add_common(run_cmd, o_run);
  auto* collide_cmd = app.add_subcommand("collide", "Collide two isolated leading pulses");
  add_common(collide_cmd, o_collide);
  auto* i1d_cmd = app.add_subcommand("interact1d", "One-dimensional stegoton interactions");
  add_common(i1d_cmd, o_1d);

  std::vector<double> ql, qr, ml{1.0, 1.0}, mr{1.0, 1.0};
  auto* rd = app.add_subcommand("riemann-debug", "Compare the f-wave and all-shock solutions");
  rd->add_option("--ql", ql, "Left state eps,mx,my")->required()->expected(3)->delimiter(',');
  rd->add_option("--qr", qr, "Right state eps,mx,my")->required()->expected(3)->delimiter(',');
  rd->add_option("--ml", ml, "Left material K,rho")->expected(2)->delimiter(',');
  rd->add_option("--mr", mr, "Right material K,rho")->expected(2)->delimiter(',');

  std::string errors_csv, rates_out;
  auto* rates = app.add_subcommand("rates", "Append convergence rates to an error table");
  rates->add_option("--errors", errors_csv, "CSV with h (or inv_h) and error columns")->required();
  rates->add_option("--out", rates_out, "Output CSV (default: rewrite the input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  try {
    if (*run_cmd) return cmd_run(o_run, out);
    if (*collide_cmd) return cmd_collide(o_collide, out);
    if (*i1d_cmd) return cmd_interact1d(o_1d, out);
    if (*rd) return cmd_riemann(ql, qr, ml, mr, out);
    if (*rates) return cmd_rates(errors_csv, rates_out, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace swpm::cli
