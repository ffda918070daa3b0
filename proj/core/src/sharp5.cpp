#include "swpm/sharp5.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swpm/errors.hpp"
#include "swpm/parallel.hpp"
#include "vecmath.hpp"

namespace swpm {

WenoTraces weno5_reconstruct(std::span<const double> row, const WenoOptions& opt) {
  if (row.size() < 7) throw ConfigError("weno5_reconstruct: need at least one interior value");
  const int n = static_cast<int>(row.size()) - 6;
  const double* v = row.data() + 3;
  WenoTraces t;
  t.left.resize(static_cast<std::size_t>(n + 1));
  t.right.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    t.left[static_cast<std::size_t>(k)] = weno5_edge(v[k - 3], v[k - 2], v[k - 1], v[k], v[k + 1], opt);
    t.right[static_cast<std::size_t>(k)] = weno5_edge(v[k + 2], v[k + 1], v[k], v[k - 1], v[k - 2], opt);
  }
  return t;
}

Vec3 internal_term_x(const Vec3& q_left_edge, const Vec3& q_right_edge, const Material& m) {
  const Vec3 fl = flux_x(q_left_edge, m);
  const Vec3 fr = flux_x(q_right_edge, m);
  return {fr[0] - fl[0], fr[1] - fl[1], fr[2] - fl[2]};
}

Sharp5::Sharp5(const MaterialField& field, const BoundarySpec& bc, Sharp5Options opts)
    : field_(field), bc_(bc), opts_(opts), g_(field.geom), two_d_(!field.geom.one_dimensional()) {
  if (g_.ghost < 3) throw ConfigError("sharp5 needs a ghost width of at least 3");
  if (!(opts_.weno.epsilon > 0.0)) throw ConfigError("sharp5: weno epsilon must be positive");
  bc_.validate();
  q1_ = GridState(g_);
  k_ = GridState(g_);
  if (two_d_)
    for (Array2D* a : {&py1_, &py3_, &my1_, &my3_}) *a = Array2D(g_);
}

namespace {

struct LineScratch {
  std::vector<double> el, er, ml, mr, xl, xr;

  void resize(int n) {
    for (auto* v : {&el, &er, &ml, &mr, &xl, &xr}) v->resize(static_cast<std::size_t>(n));
  }
};

template <bool Linear>
int trace_pass(int n, const double* const e[6], const double* const m[6],
               const double* __restrict Kl, const double* __restrict Kr, double epsilon,
               double* __restrict el, double* __restrict er, double* __restrict ml,
               double* __restrict mr, double* __restrict xl, double* __restrict xr) {
  const double *e0 = e[0], *e1 = e[1], *e2 = e[2], *e3 = e[3], *e4 = e[4], *e5 = e[5];
  const double *m0 = m[0], *m1 = m[1], *m2 = m[2], *m3 = m[3], *m4 = m[4], *m5 = m[5];
  int bad = 0;
  for (int k = 0; k < n; ++k) {
    el[k] = weno5_edge<Linear>(e0[k], e1[k], e2[k], e3[k], e4[k], epsilon);
    er[k] = weno5_edge<Linear>(e5[k], e4[k], e3[k], e2[k], e1[k], epsilon);
    ml[k] = weno5_edge<Linear>(m0[k], m1[k], m2[k], m3[k], m4[k], epsilon);
    mr[k] = weno5_edge<Linear>(m5[k], m4[k], m3[k], m2[k], m1[k], epsilon);
    const double al = Kl[k] * el[k];
    const double ar = Kr[k] * er[k];
    bad += !(al < kMaxExponent) + !(ar < kMaxExponent) + !(ml[k] == ml[k]) + !(mr[k] == mr[k]);
    xl[k] = std::min(al, kMaxExponent);
    xr[k] = std::min(ar, kMaxExponent);
  }
  return bad;
}

void flux_pass(int n, const double* __restrict Kl, const double* __restrict rl,
               const double* __restrict Kr, const double* __restrict rr,
               const double* __restrict ml, const double* __restrict mr,
               const double* __restrict xl, const double* __restrict xr, double* __restrict pl1,
               double* __restrict pl2, double* __restrict ph1, double* __restrict ph2) {
  for (int k = 0; k < n; ++k) {
    const double zl = std::sqrt(rl[k] * Kl[k] * xl[k]);
    const double zr = std::sqrt(rr[k] * Kr[k] * xr[k]);
    const double fl1 = -ml[k] / rl[k], fl2 = -(xl[k] + 1.0);
    const double fr1 = -mr[k] / rr[k], fr2 = -(xr[k] + 1.0);
    const double df1 = fr1 - fl1;
    const double df2 = fr2 - fl2;
    const double inv = 1.0 / (zl + zr);
    const double b1 = (zr * df1 + df2) * inv;
    const double b3 = (df2 - zl * df1) * inv;
    pl1[k] = b1 + fl1;
    pl2[k] = b1 * zl + fl2;
    ph1[k] = -b3 - fr1;
    ph2[k] = b3 * zr - fr2;
  }
}

// Interface terms along a line of n interfaces. e[r][k], m[r][k] give the
// strain and normal momentum of the cell at stencil offset r - 3 from the
// interface (r = 0..5, the interface lies between offsets -1 and 0). Kl, rl
// and Kr, rr are the materials of the cells on the low and high side.
// Writes amdq + f(low trace) to pl*, apdq - f(high trace) to ph*, and returns
// the number of overflowing or non-finite traces.
template <bool Linear>
int interface_line(int n, const double* const e[6], const double* const m[6], const double* Kl,
                   const double* rl, const double* Kr, const double* rr, double epsilon,
                   LineScratch& s, double* pl1, double* pl2, double* ph1, double* ph2) {
  s.resize(n);
  const int bad = trace_pass<Linear>(n, e, m, Kl, Kr, epsilon, s.el.data(), s.er.data(),
                                     s.ml.data(), s.mr.data(), s.xl.data(), s.xr.data());
  detail::exp_batch(s.xl.data(), s.xl.data(), n);
  detail::exp_batch(s.xr.data(), s.xr.data(), n);
  flux_pass(n, Kl, rl, Kr, rr, s.ml.data(), s.mr.data(), s.xl.data(), s.xr.data(), pl1, pl2, ph1,
            ph2);
  return bad;
}

std::string overflow_message(const char* where, double t) {
  std::ostringstream msg;
  msg << "sharp5: non-finite or overflowing trace in " << where << " sweep at t=" << t;
  return msg.str();
}

}  // namespace

template <bool Linear>
void Sharp5::x_sweep(const GridState& q, GridState& out) {
  const int nx = g_.nx;
  const int ny = two_d_ ? g_.ny : 1;
  const double inv_h = 1.0 / g_.h;
  const double epsilon = opts_.weno.epsilon;
  std::vector<int> bad(static_cast<std::size_t>(ny), 0);
  parallel_rows(opts_.workers, 0, ny, [&](int j) {
    thread_local LineScratch scratch;
    thread_local std::vector<double> p1, p2, m1, m2;
    for (auto* v : {&p1, &p2, &m1, &m2}) v->resize(static_cast<std::size_t>(nx + 1));
    const double* er = q.eps.row(j);
    const double* mr = q.mx.row(j);
    const double* e[6];
    const double* m[6];
    for (int r = 0; r < 6; ++r) {
      e[r] = er + (r - 3);
      m[r] = mr + (r - 3);
    }
    const double* K = field_.K.row(j);
    const double* rho = field_.rho.row(j);
    int nbad = interface_line<Linear>(nx + 1, e, m, K - 1, rho - 1, K, rho, epsilon, scratch,
                                      p1.data(), p2.data(), m1.data(), m2.data());
    double* oe = out.eps.row(j);
    double* om = out.mx.row(j);
    double* oy = out.my.row(j);
    for (int i = 0; i < nx; ++i) {
      const auto a = static_cast<std::size_t>(i);
      oe[i] = -inv_h * (p1[a + 1] + m1[a]);
      om[i] = -inv_h * (p2[a + 1] + m2[a]);
      oy[i] = 0.0;
      nbad += !(oe[i] - oe[i] == 0.0) + !(om[i] - om[i] == 0.0);
    }
    bad[static_cast<std::size_t>(j)] = nbad;
  });
  for (int b : bad)
    if (b) throw NumericalError(overflow_message("x", q.t));
}

template <bool Linear>
void Sharp5::y_sweep(const GridState& q, GridState& out) {
  const int nx = g_.nx;
  const int ny = g_.ny;
  const double inv_h = 1.0 / g_.h;
  const double epsilon = opts_.weno.epsilon;
  std::vector<int> bad(static_cast<std::size_t>(ny + 1), 0);
  parallel_rows(opts_.workers, 0, ny + 1, [&](int k) {
    thread_local LineScratch scratch;
    const double* e[6];
    const double* m[6];
    for (int r = 0; r < 6; ++r) {
      e[r] = q.eps.row(k - 3 + r);
      m[r] = q.my.row(k - 3 + r);
    }
    bad[static_cast<std::size_t>(k)] = interface_line<Linear>(
        nx, e, m, field_.K.row(k - 1), field_.rho.row(k - 1), field_.K.row(k), field_.rho.row(k),
        epsilon, scratch, py1_.row(k), py3_.row(k), my1_.row(k), my3_.row(k));
  });
  for (int b : bad)
    if (b) throw NumericalError(overflow_message("y", q.t));
  parallel_rows(opts_.workers, 0, ny, [&](int j) {
    const double* p1 = py1_.row(j + 1);
    const double* p3 = py3_.row(j + 1);
    const double* m1 = my1_.row(j);
    const double* m3 = my3_.row(j);
    double* oe = out.eps.row(j);
    double* oy = out.my.row(j);
    for (int i = 0; i < nx; ++i) {
      oe[i] -= inv_h * (p1[i] + m1[i]);
      oy[i] -= inv_h * (p3[i] + m3[i]);
    }
  });
}

void Sharp5::rhs(GridState& state, GridState& out) {
  if (!(state.geom == g_) || !(out.geom == g_))
    throw ConfigError("sharp5: state geometry does not match material field");
  fill_ghost(state, bc_);
  if (opts_.weno.linear_weights) {
    x_sweep<true>(state, out);
    if (two_d_) y_sweep<true>(state, out);
  } else {
    x_sweep<false>(state, out);
    if (two_d_) y_sweep<false>(state, out);
  }
}

namespace {

double interior_max_speed(const GridState& s, const MaterialField& f) {
  const int ny = s.geom.one_dimensional() ? 1 : s.geom.ny;
  double cmax = 0.0;
  for (int j = 0; j < ny; ++j) {
    const double* e = s.eps.row(j);
    const double* K = f.K.row(j);
    const double* r = f.rho.row(j);
    for (int i = 0; i < s.geom.nx; ++i) {
      const double a = K[i] * e[i];
      if (!(a < kMaxExponent)) throw NumericalError("sharp5: stress overflow while computing dt");
      cmax = std::max(cmax, std::sqrt(K[i] * std::exp(a) / r[i]));
    }
  }
  return cmax;
}

// Applies op(u, q1, k) element-wise to the three conserved arrays.
template <class Op>
void combine(GridState& u, GridState& q1, const GridState& k, Op op) {
  Array2D* us[3] = {&u.eps, &u.mx, &u.my};
  Array2D* qs[3] = {&q1.eps, &q1.mx, &q1.my};
  const Array2D* ks[3] = {&k.eps, &k.mx, &k.my};
  for (int c = 0; c < 3; ++c) {
    auto a = us[c]->raw();
    auto b = qs[c]->raw();
    auto d = ks[c]->raw();
    for (std::size_t n = 0; n < a.size(); ++n) op(a[n], b[n], d[n]);
  }
}

}  // namespace

double Sharp5::stable_dt(const GridState& state, const StepControl& ctrl) const {
  const double remaining = ctrl.t_final - state.t;
  const double cmax = interior_max_speed(state, field_);
  if (!(cmax > 0.0)) return remaining;
  const double dims = two_d_ ? 2.0 : 1.0;
  return std::min(ctrl.cfl_target * g_.h / (dims * cmax), remaining);
}

StepReport Sharp5::step(GridState& state, double dt, const StepControl& ctrl) {
  if (!(state.geom == g_)) throw ConfigError("sharp5: state geometry does not match material field");
  const double dims = two_d_ ? 2.0 : 1.0;
  const double cmax = interior_max_speed(state, field_);
  StepReport rep;
  double cfl = dims * dt * cmax / g_.h;
  while (cfl > ctrl.cfl_max) {
    if (rep.retries >= ctrl.max_retries) {
      std::ostringstream msg;
      msg << "sharp5: CFL " << cfl << " exceeds " << ctrl.cfl_max << " after " << rep.retries
          << " retries (t=" << state.t << ")";
      throw NumericalError(msg.str());
    }
    ++rep.retries;
    dt *= 0.5;
    cfl = dims * dt * cmax / g_.h;
  }

  const double t0 = state.t;
  q1_.eps = state.eps;
  q1_.mx = state.mx;
  q1_.my = state.my;
  q1_.t = t0;
  const double a = dt / 6.0;
  auto stage = [&] {
    rhs(q1_, k_);
    combine(state, q1_, k_, [a](double&, double& q, double k) { q += a * k; });
  };
  for (int s = 0; s < 5; ++s) stage();
  combine(state, q1_, k_, [](double& u, double& q, double) {
    u = u / 25.0 + 9.0 / 25.0 * q;
    q = 15.0 * u - 5.0 * q;
  });
  for (int s = 0; s < 4; ++s) stage();
  rhs(q1_, k_);
  const double b = dt / 10.0;
  combine(state, q1_, k_, [b](double& u, double& q, double k) { u = u + 0.6 * q + b * k; });
  state.t = t0 + dt;
  fill_ghost(state, bc_);
  rep.dt = dt;
  rep.cfl = cfl;
  return rep;
}

}  // namespace swpm
