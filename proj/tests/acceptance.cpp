// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "support.hpp"
#include "swpm/claw2.hpp"
#include "swpm/errors.hpp"
#include "swpm/experiments.hpp"
#include "swpm/riemann.hpp"
#include "swpm/sharp5.hpp"

using namespace swpm;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

fs::path g_outdir;
int g_workers = 1;

OutputLayout layout(const ExperimentConfig& c) { return OutputLayout::under(g_outdir, c.name); }

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

template <class T>
std::string list(const std::vector<T>& v, int digits = 4) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + fmt(v[k], digits);
  return s + ")";
}

ExperimentConfig with_workers(ExperimentConfig c) {
  c.workers = g_workers;
  return c;
}

/// 1 - eta(t)/eta(0) at the last recorded time.
double entropy_loss_at_end(const DiagnosticsSeries& s) { return 1.0 - s.entropy.back(); }

constexpr double kHeterogeneousEntropyLoss = 5e-3;

Verdict a1() {
  const ExperimentConfig c = with_workers(preset("convergence-sinusoidal"));
  const auto rows = run_convergence(c, layout(c));
  const std::vector<double> table{1.638, 1.814, 2.132};
  std::vector<double> errors, rates;
  for (const auto& r : rows) errors.push_back(r.error);
  for (std::size_t k = 1; k < rows.size(); ++k) rates.push_back(rows[k].rate);
  bool ok = rates.size() == table.size();
  for (std::size_t k = 0; ok && k < rates.size(); ++k) {
    ok = ok && std::abs(rates[k] - table[k]) <= 0.4;
    if (k > 0) ok = ok && rates[k] > rates[k - 1];
  }
  const double e240 = errors.back();
  ok = ok && e240 <= 3.0 * 2.235e-4 && e240 >= 2.235e-4 / 3.0;
  return {ok, "errors " + list(errors) + ", rates " + list(rates) +
                  " vs (1.638, 1.814, 2.132) +-0.4 increasing, E(1/240) " + fmt(e240) +
                  " vs 2.235e-4 x/3"};
}

Verdict a2() {
  const ExperimentConfig cc = with_workers(preset("convergence-checkerboard"));
  const ExperimentConfig cs = with_workers(preset("convergence-checkerboard-sharp5"));
  const auto rc = run_convergence(cc, layout(cc));
  const auto rs = run_convergence(cs, layout(cs));
  bool ok = rc.size() == rs.size();
  std::vector<double> ec, es, pc, ps;
  for (std::size_t k = 0; k < rc.size(); ++k) {
    ec.push_back(rc[k].error);
    es.push_back(rs[k].error);
    ok = ok && rs[k].error < rc[k].error;
    if (k > 0) {
      pc.push_back(rc[k].rate);
      ps.push_back(rs[k].rate);
      ok = ok && rc[k].rate >= 1.0 && rc[k].rate <= 2.0 && rs[k].rate >= 1.0 && rs[k].rate <= 2.0;
    }
  }
  return {ok, "claw2 errors " + list(ec) + " rates " + list(pc) + "; sharp5 errors " + list(es) +
                  " rates " + list(ps) + "; need rates in [1, 2] and sharp5 < claw2"};
}

Verdict a3() {
  std::map<std::pair<std::string, int>, RunResult> runs;
  for (const char* name : {"entropy-homogeneous", "entropy-sinusoidal"})
    for (int n : {120, 240}) {
      ExperimentConfig c = with_workers(preset(name));
      c.h = 1.0 / n;
      c.name += "-n" + std::to_string(n);
      c.dumps = c.slices = false;
      runs[{name, n}] = run_experiment(c, layout(c));
    }
  auto min_entropy = [](const RunResult& r) {
    return *std::min_element(r.series.entropy.begin(), r.series.entropy.end());
  };
  const double hom120 = min_entropy(runs[{"entropy-homogeneous", 120}]);
  const double hom240 = min_entropy(runs[{"entropy-homogeneous", 240}]);
  const double lh240 = entropy_loss_at_end(runs[{"entropy-homogeneous", 240}].series);
  const double lt120 = entropy_loss_at_end(runs[{"entropy-sinusoidal", 120}].series);
  const double lt240 = entropy_loss_at_end(runs[{"entropy-sinusoidal", 240}].series);
  const bool ok = hom120 < 0.999 && hom240 < 0.999 && 5.0 * lt240 <= lh240 && lt240 < lt120 &&
                  lt240 <= kHeterogeneousEntropyLoss;
  return {ok, "homogeneous min entropy " + fmt(hom120, 6) + " (1/120), " + fmt(hom240, 6) +
                  " (1/240); loss at t=20 homogeneous " + fmt(lh240) + ", sinusoidal " +
                  fmt(lt120) + " (1/120) -> " + fmt(lt240) + " (1/240); ratio " +
                  fmt(lh240 / lt240, 3)};
}

template <class Scheme>
double conservation_drift(const MaterialField& f, GridState s, Scheme& solver, StepControl c) {
  const ConservedTotals t0 = conserved_totals(s);
  for (int n = 0; n < 100; ++n) {
    double dt;
    if constexpr (std::is_same_v<Scheme, Sharp5>)
      dt = solver.stable_dt(s, c);
    else
      dt = compute_dt(s, f, c, s.geom.h);
    solver.step(s, dt, c);
  }
  const ConservedTotals t1 = conserved_totals(s);
  auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
  };
  return std::max({rel(t1.eps, t0.eps), rel(t1.mx, t0.mx), rel(t1.my, t0.my)});
}

Verdict a4() {
  GridGeometry g{64, 48, 0.125, 0.0, 0.0, 3};
  const BoundarySpec bc = BoundarySpec::all(BoundaryKind::periodic);
  const MaterialField f = test::field_for(test::checkerboard(5.0), g, bc);
  GridState s = test::random_smooth_state(g, 11, 0.2);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      s.eps(i, j) += 0.3;
      s.mx(i, j) += 0.4;
      s.my(i, j) -= 0.5;
    }
  StepControl c;
  c.t_final = 1e9;
  Claw2 claw(f, bc);
  const double dc = conservation_drift(f, s, claw, c);
  c.cfl_target = Sharp5::default_cfl_target;
  c.cfl_max = Sharp5::default_cfl_max;
  Sharp5 sharp(f, bc);
  const double ds = conservation_drift(f, s, sharp, c);
  return {dc < 1e-11 && ds < 1e-11,
          "max relative drift claw2 " + fmt(dc, 3) + ", sharp5 " + fmt(ds, 3) + " (< 1e-11)"};
}

Verdict a5() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0), k(0.5, 10.0);
  const std::vector<double> deltas{1e-2, 1e-3, 1e-4};
  std::vector<double> mean_err(deltas.size(), 0.0);
  double worst_cons = 0.0;
  auto norm = [](const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); };
  auto check_cons = [&](const Vec3& ql, const Vec3& qr, const Material& ml, const Material& mr,
                        const RiemannResult& fw) {
    const Vec3 fl = flux_x(ql, ml), fr = flux_x(qr, mr);
    for (int m = 0; m < 3; ++m)
      worst_cons = std::max(worst_cons, std::abs(fw.amdq[m] + fw.apdq[m] - (fr[m] - fl[m])));
  };
  const int samples = 1000;
  for (int n = 0; n < samples; ++n) {
    const Material ml{k(rng), k(rng)}, mr{k(rng), k(rng)};
    const Vec3 ql{0.1 * u(rng), u(rng), u(rng)};
    const Vec3 fl = flux_x(ql, ml);
    const double du = u(rng), ds = u(rng), dv = u(rng);
    for (std::size_t d = 0; d < deltas.size(); ++d) {
      const double ur = -fl[0] + deltas[d] * du;
      const double sr = -fl[1] + deltas[d] * ds;
      const Vec3 qr{strain_from_stress(sr, mr.K), mr.rho * ur, ql[2] + deltas[d] * dv};
      const RiemannResult fw = solve_normal_x(ql, qr, ml, mr);
      const AllShockSolution ex = exact_all_shock(ql, qr, ml, mr);
      Vec3 da, dp;
      for (int m = 0; m < 3; ++m) {
        da[m] = fw.amdq[m] - ex.amdq[m];
        dp[m] = fw.apdq[m] - ex.apdq[m];
      }
      da[2] = dp[2] = 0.0;
      mean_err[d] += (norm(da) + norm(dp)) / samples;
      check_cons(ql, qr, ml, mr, fw);
    }
    const Vec3 qa{0.2 * u(rng), u(rng), u(rng)};
    check_cons(ql, qa, ml, mr, solve_normal_x(ql, qa, ml, mr));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(deltas.size());
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    const double x = std::log10(deltas[d]), y = std::log10(mean_err[d]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const bool ok = std::abs(slope - 2.0) <= 0.3 && worst_cons <= 1e-13;
  return {ok, "mean fluctuation error " + list(mean_err, 3) + ", fitted slope " + fmt(slope) +
                  " (2.0 +- 0.3); max |amdq + apdq - dF| " + fmt(worst_cons, 3) + " (<= 1e-13)"};
}

int leading_peak(const GridState& s, const MaterialField& f, double min_amp) {
  const auto pulses = detect_pulses(extract_slice(s, f, SliceLine::y_eq_0), min_amp);
  return pulses.empty() ? -1 : pulses.back().index;
}

Verdict a6() {
  const ExperimentConfig c = with_workers(preset("interact1d"));
  const Interact1dResult r = run_1d_interaction(c, layout(c));
  const MaterialField f = make_field(c);
  const auto train = detect_pulses(extract_slice(r.train.final_state, f, SliceLine::y_eq_0), 0.05);
  const int ctrl = leading_peak(r.control.final_state, f, 0.05);
  const int head = leading_peak(r.headon.final_state, f, 0.05);
  const int over = leading_peak(r.overtaking.final_state, f, 0.05);
  const bool ok = train.size() >= 3 && ctrl >= 0 && head >= 0 && over >= 0 &&
                  std::abs(head - ctrl) <= 1 && std::abs(over - ctrl) > 2;
  std::vector<double> amps;
  for (const auto& p : train) amps.push_back(p.amplitude);
  return {ok, std::to_string(train.size()) + " pulses at t=" + fmt(r.train.final_state.t) +
                  " (amplitudes " + list(amps, 3) + "); leading peak cell control " +
                  std::to_string(ctrl) + ", head-on " + std::to_string(head) + ", overtaking " +
                  std::to_string(over) + "; need >= 3, |head-on| <= 1, |overtaking| > 2"};
}

Verdict a7() {
  const ExperimentConfig c = with_workers(preset("formation-checkerboard"));
  const RunResult r = run_experiment(c, layout(c));
  const MaterialField f = make_field(c);
  const auto pulses = detect_pulses(extract_slice(r.final_state, f, SliceLine::y_eq_x), 0.05);
  const double loss = entropy_loss_at_end(r.series);
  bool ok = pulses.size() >= 2 && loss <= kHeterogeneousEntropyLoss;
  std::vector<double> amps, pos;
  for (const auto& p : pulses) {
    amps.push_back(p.amplitude);
    pos.push_back(p.s);
  }
  if (pulses.size() >= 2)
    ok = ok && pulses.back().amplitude > pulses[pulses.size() - 2].amplitude;
  return {ok, std::to_string(pulses.size()) + " pulses on y=x at t=" +
                  fmt(r.final_state.t) + " at s=" + list(pos, 4) + " amplitudes " +
                  list(amps, 3) + "; entropy loss " + fmt(loss, 3) + " (<= " +
                  fmt(kHeterogeneousEntropyLoss) + ")"};
}

MaterialField mirrored(const MaterialField& q, const GridGeometry& full) {
  MaterialField f{full, Array2D(full, 1.0), Array2D(full, 1.0)};
  const int n = q.geom.nx;
  for (int j = 0; j < full.ny; ++j)
    for (int i = 0; i < full.nx; ++i) {
      const int qi = i < n ? n - 1 - i : i - n;
      const int qj = j < n ? n - 1 - j : j - n;
      f.K(i, j) = q.K(qi, qj);
      f.rho(i, j) = q.rho(qi, qj);
    }
  fill_ghost_material(f, BoundarySpec::all(BoundaryKind::outflow_extrapolation));
  return f;
}

template <class Scheme>
double quadrant_difference(int ghost) {
  const int n = 40;
  const double h = 0.125;
  GridGeometry quarter{n, n, h, 0.0, 0.0, ghost};
  GridGeometry full{2 * n, 2 * n, h, -n * h, -n * h, ghost};
  const BoundarySpec qbc{};
  const BoundarySpec fbc = BoundarySpec::all(BoundaryKind::outflow_extrapolation);
  const MaterialField qf = test::field_for(test::checkerboard(5.0), quarter, qbc);
  const MaterialField ff = mirrored(qf, full);
  PulseParams p;
  p.xc = p.yc = 0.0;
  p.width = 0.5;
  GridState qs = set_initial_condition(quarter, qf, p);
  GridState fs = set_initial_condition(full, ff, p);
  Scheme qsolve(qf, qbc), fsolve(ff, fbc);
  StepControl c;
  c.t_final = 1e9;
  if constexpr (std::is_same_v<Scheme, Sharp5>) {
    c.cfl_target = Sharp5::default_cfl_target;
    c.cfl_max = Sharp5::default_cfl_max;
  }
  for (int k = 0; k < 10; ++k) {
    double dt;
    if constexpr (std::is_same_v<Scheme, Sharp5>) {
      dt = fsolve.stable_dt(fs, c);
    } else {
      fill_ghost(fs, fbc);
      dt = compute_dt(fs, ff, c, h);
    }
    fsolve.step(fs, dt, c);
    qsolve.step(qs, dt, c);
  }
  double d = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      d = std::max(d, std::abs(qs.eps(i, j) - fs.eps(i + n, j + n)));
      d = std::max(d, std::abs(qs.mx(i, j) - fs.mx(i + n, j + n)));
      d = std::max(d, std::abs(qs.my(i, j) - fs.my(i + n, j + n)));
    }
  return d;
}

Verdict a8() {
  const double dc = quadrant_difference<Claw2>(2);
  const double ds = quadrant_difference<Sharp5>(3);
  return {dc <= 1e-12 && ds <= 1e-12,
          "max quadrant difference claw2 " + fmt(dc, 3) + ", sharp5 " + fmt(ds, 3) + " (<= 1e-12)"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria A1-A8", "swpm_acceptance"};
  std::vector<std::string> only;
  std::string outdir = "acceptance_out";
  app.add_option("--only", only, "Criteria to run (default: all)");
  app.add_option("--outdir", outdir, "Directory for run artifacts")->capture_default_str();
  app.add_option("--workers", g_workers, "Worker threads")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  g_outdir = outdir;

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},
      {"A5", a5}, {"A6", a6}, {"A7", a7}, {"A8", a8}};
  for (const auto& id : only)
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == id; })) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }

  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << id << (v.pass ? " PASS " : " FAIL ") << v.detail << " [" << fmt(secs, 4) << " s]"
              << std::endl;
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
