#include <benchmark/benchmark.h>

#include <vector>

#include "swpm/claw2.hpp"
#include "swpm/diagnostics.hpp"
#include "swpm/grid.hpp"
#include "swpm/medium.hpp"
#include "swpm/riemann.hpp"
#include "swpm/sharp5.hpp"

namespace {

struct Setup {
  swpm::GridGeometry geom;
  swpm::MaterialField field;
  swpm::GridState state;
  swpm::BoundarySpec bc;

  explicit Setup(int n) {
    geom = {n, n, 5.0 / n, 0.0, 0.0, 3};
    const swpm::MediumSpec spec{swpm::MediumKind::checkerboard, 1.0, 1.0, 5.0, 5.0};
    field = swpm::build_field(spec, geom);
    swpm::fill_ghost_material(field, bc);
    state = swpm::set_initial_condition(geom, field, {});
    swpm::fill_ghost(state, bc);
  }
};

void BM_Claw2Step(benchmark::State& st) {
  Setup s(static_cast<int>(st.range(0)));
  swpm::Claw2 scheme(s.field, s.bc);
  swpm::StepControl ctrl;
  ctrl.t_final = 1e9;
  const double dt = swpm::compute_dt(s.state, s.field, ctrl, s.geom.h);
  for (auto _ : st) {
    scheme.step(s.state, dt, ctrl);
    benchmark::ClobberMemory();
  }
  st.counters["ns_per_cell"] = benchmark::Counter(
      static_cast<double>(st.iterations()) * s.geom.nx * s.geom.ny,
      benchmark::Counter::kIsRate | benchmark::Counter::kInvert);
}
BENCHMARK(BM_Claw2Step)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Sharp5Rhs(benchmark::State& st) {
  Setup s(static_cast<int>(st.range(0)));
  swpm::Sharp5 scheme(s.field, s.bc);
  swpm::GridState out(s.geom);
  for (auto _ : st) {
    scheme.rhs(s.state, out);
    benchmark::ClobberMemory();
  }
  st.counters["ns_per_cell"] = benchmark::Counter(
      static_cast<double>(st.iterations()) * s.geom.nx * s.geom.ny,
      benchmark::Counter::kIsRate | benchmark::Counter::kInvert);
}
BENCHMARK(BM_Sharp5Rhs)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Weno5Row(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::vector<double> row(static_cast<std::size_t>(n + 6));
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = (k % 7 == 0) ? 1.0 : 0.1 * k;
  for (auto _ : st) benchmark::DoNotOptimize(swpm::weno5_reconstruct(row));
  st.SetItemsProcessed(st.iterations() * (n + 1));
}
BENCHMARK(BM_Weno5Row)->Arg(1024);

void BM_SolveNormalX(benchmark::State& st) {
  const swpm::Vec3 ql{0.3, 0.1, 0.0}, qr{0.1, -0.2, 0.05};
  const swpm::Material a{1.0, 1.0}, b{5.0, 5.0};
  for (auto _ : st) benchmark::DoNotOptimize(swpm::solve_normal_x(ql, qr, a, b));
}
BENCHMARK(BM_SolveNormalX);

void BM_Entropy(benchmark::State& st) {
  Setup s(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(swpm::entropy(s.state, s.field));
}
BENCHMARK(BM_Entropy)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
