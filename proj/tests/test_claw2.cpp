#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "swpm/claw2.hpp"
#include "swpm/errors.hpp"
#include "swpm/riemann.hpp"

using namespace swpm;
using namespace swpm::test;

namespace {

StepControl control(double cfl = 0.9) {
  StepControl c;
  c.cfl_target = cfl;
  c.cfl_max = 1.0;
  c.t_final = 1e9;
  return c;
}

void advance(Claw2& solver, GridState& s, const MaterialField& f, int steps) {
  const StepControl c = control();
  for (int n = 0; n < steps; ++n) {
    fill_ghost(s, BoundarySpec::all(BoundaryKind::periodic));
    solver.step(s, compute_dt(s, f, c, s.geom.h), c);
  }
}

/// Full field on [-L, L]^2 obtained by mirroring a quadrant field about both axes.
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

}  // namespace

TEST_CASE("dt from the CFL target") {
  GridGeometry g{10, 10, 0.1, 0.0, 0.0, 2};
  const MaterialField f = field_for(MediumSpec{}, g, BoundarySpec{});
  GridState s(g);
  CHECK(max_sound_speed(s, f) == 1.0);
  StepControl c = control(0.45);
  CHECK(compute_dt(s, f, c, g.h) == doctest::Approx(0.045));
  c.cfl_target = 0.9;
  CHECK(compute_dt(s, f, c, g.h) == doctest::Approx(0.09));
  c.t_final = 0.01;
  CHECK(compute_dt(s, f, c, g.h) == doctest::Approx(0.01));
}

TEST_CASE("step control validation") {
  StepControl c = control();
  CHECK_NOTHROW(c.validate());
  c.cfl_target = 1.2;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("uniform stress and velocity stay put in a piecewise constant medium") {
  GridGeometry g{16, 16, 0.25, 0.0, 0.0, 2};
  const BoundarySpec bc = BoundarySpec::all(BoundaryKind::periodic);
  const MaterialField f = field_for(checkerboard(5.0), g, bc);
  GridState s(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      s.eps(i, j) = strain_from_stress(2.4, f.K(i, j));
      s.mx(i, j) = 0.1 * f.rho(i, j);
      s.my(i, j) = 0.2 * f.rho(i, j);
    }
  const GridState s0 = s;
  Claw2 solver(f, bc);
  advance(solver, s, f, 5);
  CHECK(max_state_diff(s, s0) < 1e-14);
}

TEST_CASE("first-order update equals the hand-evaluated fluctuation formula") {
  GridGeometry g{6, 3, 0.5, 0.0, 0.0, 2};
  const BoundarySpec bc = BoundarySpec::all(BoundaryKind::outflow_extrapolation);
  MediumSpec m;
  m.kind = MediumKind::layered1d;
  m.KB = 3.0;
  m.rhoB = 2.0;
  const MaterialField f = field_for(m, g, bc);
  GridState s(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double sigma = i < 3 ? 2.6 : 1.9, u = i < 3 ? 0.3 : -0.4;
      s.eps(i, j) = strain_from_stress(sigma, f.K(i, j));
      s.mx(i, j) = u * f.rho(i, j);
      s.my(i, j) = i < 3 ? 0.1 : 0.25;
    }
  const GridState s0 = s;
  const Vec3 ql{s.eps(2, 0), s.mx(2, 0), s.my(2, 0)}, qr{s.eps(3, 0), s.mx(3, 0), s.my(3, 0)};
  Claw2Options o;
  o.order = 1;
  o.limiter = Limiter::none;
  o.transverse = TransverseMode::none;
  Claw2 solver(f, bc, o);
  const double dt = 0.1;
  solver.step(s, dt, control());
  const RiemannResult r =
      solve_normal_x(ql, qr, Material{f.K(2, 0), f.rho(2, 0)}, Material{f.K(3, 0), f.rho(3, 0)});
  const double lam = dt / g.h;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double de = 0.0, dm = 0.0, dn = 0.0;
      if (i == 2) de = -lam * r.amdq[0], dm = -lam * r.amdq[1], dn = -lam * r.amdq[2];
      if (i == 3) de = -lam * r.apdq[0], dm = -lam * r.apdq[1], dn = -lam * r.apdq[2];
      CHECK(s.eps(i, j) == doctest::Approx(s0.eps(i, j) + de).epsilon(1e-14));
      CHECK(s.mx(i, j) == doctest::Approx(s0.mx(i, j) + dm).epsilon(1e-14));
      CHECK(s.my(i, j) == doctest::Approx(s0.my(i, j) + dn).epsilon(1e-14));
    }
  CHECK(s.t == doctest::Approx(dt));
}

TEST_CASE("periodic conservation") {
  for (Limiter lim : {Limiter::mc, Limiter::minmod, Limiter::superbee, Limiter::none}) {
    GridGeometry g{24, 20, 0.25, 0.0, 0.0, 2};
    const BoundarySpec bc = BoundarySpec::all(BoundaryKind::periodic);
    const MaterialField f = field_for(checkerboard(5.0), g, bc);
    GridState s = random_smooth_state(g, 1, 0.1);
    const ConservedTotals t0 = conserved_totals(s);
    Claw2Options o;
    o.limiter = lim;
    Claw2 solver(f, bc, o);
    advance(solver, s, f, 20);
    const ConservedTotals t1 = conserved_totals(s);
    CHECK(std::abs(t1.eps - t0.eps) < 1e-12 * std::max(1.0, std::abs(t0.eps)));
    CHECK(std::abs(t1.mx - t0.mx) < 1e-12 * std::max(1.0, std::abs(t0.mx)));
    CHECK(std::abs(t1.my - t0.my) < 1e-12 * std::max(1.0, std::abs(t0.my)));
  }
}

TEST_CASE("limited scheme creates no new extrema for a right-going simple wave") {
  GridGeometry g{200, 1, 0.05, 0.0, -0.025, 2};
  const BoundarySpec bc = BoundarySpec::all(BoundaryKind::periodic);
  const MaterialField f = field_for(MediumSpec{}, g, bc);
  GridState s(g);
  const double a = 1e-6;
  for (int i = 60; i < 90; ++i) {
    s.eps(i, 0) = -a;
    s.mx(i, 0) = a;
  }
  Claw2 solver(f, bc);
  const StepControl c = control();
  for (int n = 0; n < 100; ++n) solver.step(s, compute_dt(s, f, c, g.h), c);
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    lo = std::min(lo, s.eps(i, 0));
    hi = std::max(hi, s.eps(i, 0));
  }
  CHECK(lo >= -a * (1.0 + 1e-6));
  CHECK(hi <= a * 1e-6);
}

TEST_CASE("CFL violations are retried with halved steps") {
  GridGeometry g{16, 16, 0.25, 0.0, 0.0, 2};
  const BoundarySpec bc = BoundarySpec::all(BoundaryKind::periodic);
  const MaterialField f = field_for(MediumSpec{}, g, bc);
  GridState s = random_smooth_state(g, 2, 0.01);
  Claw2 solver(f, bc);
  StepControl c = control();
  const StepReport r = solver.step(s, 3.0 * g.h, c);
  CHECK(r.retries == 2);
  CHECK(r.dt == doctest::Approx(0.75 * g.h));
  CHECK(r.cfl <= 1.0);
  c.max_retries = 0;
  CHECK_THROWS_AS(solver.step(s, 3.0 * g.h, c), NumericalError);
}

TEST_CASE("worker count does not change the state") {
  GridGeometry g{40, 36, 0.125, 0.0, 0.0, 2};
  const BoundarySpec bc = BoundarySpec::all(BoundaryKind::periodic);
  const MaterialField f = field_for(sinusoidal(10.0), g, bc);
  const GridState init = random_smooth_state(g, 3, 0.2);
  GridState a = init, b = init;
  Claw2Options o1, o3;
  o3.workers = 3;
  Claw2 s1(f, bc, o1), s3(f, bc, o3);
  advance(s1, a, f, 10);
  advance(s3, b, f, 10);
  CHECK(max_state_diff(a, b) <= 1e-13);
}

TEST_CASE("quadrant run matches the mirrored full-domain run") {
  const int n = 24;
  const double h = 0.125;
  GridGeometry quarter{n, n, h, 0.0, 0.0, 2};
  GridGeometry full{2 * n, 2 * n, h, -n * h, -n * h, 2};
  const BoundarySpec qbc{};
  const BoundarySpec fbc = BoundarySpec::all(BoundaryKind::outflow_extrapolation);
  const MaterialField qf = field_for(checkerboard(5.0), quarter, qbc);
  const MaterialField ff = mirrored(qf, full);
  PulseParams p;
  p.xc = p.yc = 0.0;
  p.width = 0.5;
  GridState qs = set_initial_condition(quarter, qf, p);
  GridState fs = set_initial_condition(full, ff, p);
  Claw2 qsolve(qf, qbc), fsolve(ff, fbc);
  const StepControl c = control();
  for (int k = 0; k < 10; ++k) {
    fill_ghost(fs, fbc);
    const double dt = compute_dt(fs, ff, c, h);
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
  CHECK(d <= 1e-12);
}

TEST_CASE("second-order self-convergence for a smooth linear-regime pulse") {
  const double L = 2.0, t_end = 0.5;
  auto run = [&](int inv_h) {
    const double h = 1.0 / inv_h;
    const int n = static_cast<int>(std::lround(L * inv_h));
    GridGeometry g{n, n, h, 0.0, 0.0, 2};
    const BoundarySpec bc = BoundarySpec::all(BoundaryKind::periodic);
    const MaterialField f = field_for(MediumSpec{}, g, bc);
    PulseParams p;
    p.amplitude = 1e-3;
    p.xc = p.yc = 1.0;
    p.width = 0.1;
    GridState s = set_initial_condition(g, f, p);
    Claw2 solver(f, bc);
    StepControl c = control();
    c.t_final = t_end;
    while (s.t < t_end - 1e-12) {
      fill_ghost(s, bc);
      solver.step(s, compute_dt(s, f, c, h), c);
    }
    ScalarField e{n, n, h, {}};
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) e.v.push_back(s.eps(i, j));
    return e;
  };
  const ScalarField ref = run(320);
  const double e1 = plain_relative_l2(run(40), ref);
  const double e2 = plain_relative_l2(run(80), ref);
  const double rate = std::log2(e1 / e2);
  MESSAGE("claw2 smooth rate " << rate);
  CHECK(rate > 1.6);
  CHECK(rate < 2.6);
}

TEST_CASE("limiter functions") {
  CHECK(limiter_phi(Limiter::mc, -1.0) == 0.0);
  CHECK(limiter_phi(Limiter::mc, 0.25) == 0.5);
  CHECK(limiter_phi(Limiter::mc, 1.0) == 1.0);
  CHECK(limiter_phi(Limiter::mc, 2.0) == 1.5);
  CHECK(limiter_phi(Limiter::mc, 10.0) == 2.0);
  CHECK(limiter_phi(Limiter::minmod, 0.5) == 0.5);
  CHECK(limiter_phi(Limiter::minmod, 3.0) == 1.0);
  CHECK(limiter_phi(Limiter::superbee, 0.25) == 0.5);
  CHECK(limiter_phi(Limiter::superbee, 1.5) == 1.5);
  CHECK(limiter_phi(Limiter::superbee, 4.0) == 2.0);
  CHECK(limiter_phi(Limiter::none, -3.0) == 1.0);
}
