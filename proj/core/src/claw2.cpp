#include "swpm/claw2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "swpm/errors.hpp"
#include "swpm/parallel.hpp"

namespace swpm {

std::string_view to_string(Limiter l) {
  switch (l) {
    case Limiter::none: return "none";
    case Limiter::minmod: return "minmod";
    case Limiter::superbee: return "superbee";
    case Limiter::mc: return "mc";
  }
  return "unknown";
}

Limiter limiter_from_string(std::string_view name) {
  if (name == "none") return Limiter::none;
  if (name == "minmod") return Limiter::minmod;
  if (name == "superbee") return Limiter::superbee;
  if (name == "mc") return Limiter::mc;
  throw ConfigError("unknown limiter '" + std::string(name) + "'");
}

double limiter_phi(Limiter l, double theta) {
  switch (l) {
    case Limiter::none: return 1.0;
    case Limiter::minmod: return std::max(0.0, std::min(1.0, theta));
    case Limiter::superbee:
      return std::max({0.0, std::min(1.0, 2.0 * theta), std::min(2.0, theta)});
    case Limiter::mc: return std::max(0.0, std::min({0.5 * (1.0 + theta), 2.0, 2.0 * theta}));
  }
  return 1.0;
}

void StepControl::validate() const {
  if (!(cfl_target > 0.0 && cfl_target <= cfl_max))
    throw ConfigError("step: need 0 < cfl_target <= cfl_max");
  if (max_retries < 0) throw ConfigError("step: max_retries must be non-negative");
}

double max_sound_speed(const GridState& s, const MaterialField& f) {
  const auto& g = s.geom;
  const int j0 = g.one_dimensional() ? 0 : -1;
  const int j1 = g.one_dimensional() ? 1 : g.ny + 1;
  double cmax = 0.0;
  for (int j = j0; j < j1; ++j) {
    const double* e = s.eps.row(j);
    const double* K = f.K.row(j);
    const double* r = f.rho.row(j);
    for (int i = -1; i <= g.nx; ++i) {
      const double a = K[i] * e[i];
      if (!(a < kMaxExponent)) throw NumericalError("stress overflow while computing dt");
      cmax = std::max(cmax, std::sqrt(K[i] * std::exp(a) / r[i]));
    }
  }
  return cmax;
}

double compute_dt(const GridState& s, const MaterialField& f, const StepControl& ctrl, double h) {
  const double remaining = ctrl.t_final - s.t;
  const double cmax = max_sound_speed(s, f);
  if (!(cmax > 0.0)) return remaining;
  return std::min(ctrl.cfl_target * h / cmax, remaining);
}

Claw2::Claw2(const MaterialField& field, const BoundarySpec& bc, Claw2Options opts)
    : field_(field), bc_(bc), opts_(opts), g_(field.geom), two_d_(!field.geom.one_dimensional()) {
  if (g_.ghost < 2) throw ConfigError("claw2 needs a ghost width of at least 2");
  if (opts_.order != 1 && opts_.order != 2) throw ConfigError("claw2: order must be 1 or 2");
  bc_.validate();
  for (Array2D* a : {&u_, &v_, &sig_, &z_, &c_, &bx1_, &bx3_, &by1_, &by3_, &fx1_, &fx2_, &gy1_,
                     &gy3_, &td_, &tu_, &tl_, &tr_})
    *a = Array2D(g_);
  next_ = GridState(g_);
}

StepReport Claw2::step(GridState& state, double dt, const StepControl& ctrl) {
  if (!(state.geom == g_)) throw ConfigError("claw2: state geometry does not match material field");
  fill_ghost(state, bc_);
  StepReport rep;
  for (;;) {
    const double cfl = attempt(state, dt, ctrl.cfl_max);
    if (cfl <= ctrl.cfl_max) {
      rep.dt = dt;
      rep.cfl = cfl;
      return rep;
    }
    if (rep.retries >= ctrl.max_retries) {
      std::ostringstream msg;
      msg << "claw2: CFL " << cfl << " exceeds " << ctrl.cfl_max << " after " << rep.retries
          << " retries (t=" << state.t << ")";
      throw NumericalError(msg.str());
    }
    ++rep.retries;
    dt *= 0.5;
  }
}

double Claw2::attempt(GridState& state, double dt, double cfl_max) {
  const double lambda = dt / g_.h;
  double cmax = 0.0;
  compute_cells(state, &cmax);
  const double cfl = lambda * cmax;
  if (cfl > cfl_max) return cfl;
  normal_solves();
  second_order_corrections(lambda);
  if (two_d_ && opts_.transverse != TransverseMode::none) transverse_splits(lambda);
  update(state, lambda);
  state.t += dt;
  return cfl;
}

void Claw2::compute_cells(const GridState& s, double* cmax) {
  const int gw = g_.ghost;
  const int j0 = two_d_ ? -gw : 0;
  const int j1 = two_d_ ? g_.ny + gw : 1;
  std::vector<double> row_max(static_cast<std::size_t>(j1 - j0), 0.0);
  std::vector<int> bad(static_cast<std::size_t>(j1 - j0), 0);
  parallel_rows(opts_.workers, j0, j1, [&](int j) {
    const double* e = s.eps.row(j);
    const double* mx = s.mx.row(j);
    const double* my = s.my.row(j);
    const double* K = field_.K.row(j);
    const double* rho = field_.rho.row(j);
    double* u = u_.row(j);
    double* v = v_.row(j);
    double* sig = sig_.row(j);
    double* z = z_.row(j);
    double* c = c_.row(j);
    int nbad = 0;
    for (int i = -gw; i < g_.nx + gw; ++i) {
      const double a = K[i] * e[i];
      nbad += !(a < kMaxExponent) || !std::isfinite(mx[i]) || !std::isfinite(my[i]);
      const double ex = std::exp(std::min(a, kMaxExponent));
      const double se = K[i] * ex;
      const double inv_rho = 1.0 / rho[i];
      u[i] = mx[i] * inv_rho;
      v[i] = my[i] * inv_rho;
      sig[i] = ex + 1.0;
      z[i] = std::sqrt(rho[i] * se);
      c[i] = z[i] * inv_rho;
    }
    double m = 0.0;
    if (!two_d_ || (j >= -1 && j <= g_.ny))
      for (int i = -1; i <= g_.nx; ++i) m = std::max(m, c[i]);
    row_max[static_cast<std::size_t>(j - j0)] = m;
    bad[static_cast<std::size_t>(j - j0)] = nbad;
  });
  for (std::size_t k = 0; k < bad.size(); ++k) {
    if (bad[k]) {
      check_finite(s);
      std::ostringstream msg;
      msg << "claw2: non-finite or overflowing state near row " << (static_cast<int>(k) + j0)
          << " at t=" << s.t;
      throw NumericalError(msg.str());
    }
  }
  *cmax = *std::max_element(row_max.begin(), row_max.end());
}

void Claw2::normal_solves() {
  const int nx = g_.nx;
  const int j0 = two_d_ ? -1 : 0;
  const int j1 = two_d_ ? g_.ny + 1 : 1;
  parallel_rows(opts_.workers, j0, j1, [&](int j) {
    const double* u = u_.row(j);
    const double* sig = sig_.row(j);
    const double* z = z_.row(j);
    double* b1 = bx1_.row(j);
    double* b3 = bx3_.row(j);
    for (int i = -1; i <= nx + 1; ++i) {
      const double df1 = u[i - 1] - u[i];
      const double df2 = sig[i - 1] - sig[i];
      const double inv = 1.0 / (z[i - 1] + z[i]);
      b1[i] = (z[i] * df1 + df2) * inv;
      b3[i] = (df2 - z[i - 1] * df1) * inv;
    }
  });
  if (!two_d_) return;
  parallel_rows(opts_.workers, -1, g_.ny + 2, [&](int j) {
    const double* vd = v_.row(j - 1);
    const double* vu = v_.row(j);
    const double* sd = sig_.row(j - 1);
    const double* su = sig_.row(j);
    const double* zd = z_.row(j - 1);
    const double* zu = z_.row(j);
    double* b1 = by1_.row(j);
    double* b3 = by3_.row(j);
    for (int i = -1; i <= nx; ++i) {
      const double dg1 = vd[i] - vu[i];
      const double dg3 = sd[i] - su[i];
      const double inv = 1.0 / (zd[i] + zu[i]);
      b1[i] = (zu[i] * dg1 + dg3) * inv;
      b3[i] = (dg3 - zd[i] * dg1) * inv;
    }
  });
}

namespace {

// theta for limiting wave `w` (vector strength*(1, z)) against the upwind wave
// `wu` (strength*(1, zu)) of the same family; the third component is zero
// for the waves of one direction and the sign pattern (+/-1 first entry) is
// shared by both, so the dot product reduces to the expression below.
inline double wave_phi(Limiter lim, double b, double z, double bu, double zu) {
  if (lim == Limiter::none) return 1.0;
  if (b == 0.0) return 0.0;
  const double theta = (bu * (1.0 + zu * z)) / (b * (1.0 + z * z));
  return limiter_phi(lim, theta);
}

}  // namespace

void Claw2::second_order_corrections(double lambda) {
  const int nx = g_.nx;
  const Limiter lim = opts_.limiter;
  const int j0 = two_d_ ? -1 : 0;
  const int j1 = two_d_ ? g_.ny + 1 : 1;
  if (opts_.order == 1) {
    fx1_.fill(0.0);
    fx2_.fill(0.0);
    gy1_.fill(0.0);
    gy3_.fill(0.0);
    return;
  }
  parallel_rows(opts_.workers, j0, j1, [&](int j) {
    const double* z = z_.row(j);
    const double* c = c_.row(j);
    const double* b1 = bx1_.row(j);
    const double* b3 = bx3_.row(j);
    double* f1 = fx1_.row(j);
    double* f2 = fx2_.row(j);
    for (int i = 0; i <= nx; ++i) {
      const double zl = z[i - 1], zr = z[i];
      const double p1 = wave_phi(lim, b1[i], zl, b1[i + 1], zr);
      const double p3 = wave_phi(lim, b3[i], zr, b3[i - 1], zl);
      const double w1 = (1.0 - lambda * c[i - 1]) * p1 * b1[i];
      const double w3 = (1.0 - lambda * c[i]) * p3 * b3[i];
      f1[i] = -w1 - w3;
      f2[i] = -w1 * zl + w3 * zr;
    }
  });
  if (!two_d_) return;
  parallel_rows(opts_.workers, 0, g_.ny + 1, [&](int j) {
    const double* zd = z_.row(j - 1);
    const double* zu = z_.row(j);
    const double* cd = c_.row(j - 1);
    const double* cu = c_.row(j);
    const double* b1 = by1_.row(j);
    const double* b1u = by1_.row(j + 1);
    const double* b3 = by3_.row(j);
    const double* b3d = by3_.row(j - 1);
    double* g1 = gy1_.row(j);
    double* g3 = gy3_.row(j);
    for (int i = -1; i <= nx; ++i) {
      const double p1 = wave_phi(lim, b1[i], zd[i], b1u[i], zu[i]);
      const double p3 = wave_phi(lim, b3[i], zu[i], b3d[i], zd[i]);
      const double w1 = (1.0 - lambda * cd[i]) * p1 * b1[i];
      const double w3 = (1.0 - lambda * cu[i]) * p3 * b3[i];
      g1[i] = -w1 - w3;
      g3[i] = -w1 * zd[i] + w3 * zu[i];
    }
  });
}

void Claw2::transverse_splits(double lambda) {
  (void)lambda;
  const int nx = g_.nx;
  const bool with_corr = opts_.transverse == TransverseMode::second && opts_.order == 2;
  // x-fluctuations entering cell (i, j): only the strain component enters the
  // y-split (the momentum component lies along the zero-speed eigenvector).
  parallel_rows(opts_.workers, -1, g_.ny + 1, [&](int j) {
    const double* b1 = bx1_.row(j);
    const double* b3 = bx3_.row(j);
    const double* f1 = fx1_.row(j);
    const double* zd = z_.row(j - 1);
    const double* zc = z_.row(j);
    const double* zu = z_.row(j + 1);
    const double* cd = c_.row(j - 1);
    const double* cu = c_.row(j + 1);
    double* td = td_.row(j);
    double* tu = tu_.row(j);
    for (int i = 0; i < nx; ++i) {
      double a = b1[i + 1] - b3[i];
      if (with_corr) a += f1[i + 1] - f1[i];
      td[i] = -cd[i] * zc[i] * a / (zd[i] + zc[i]);
      tu[i] = -cu[i] * zc[i] * a / (zc[i] + zu[i]);
    }
  });
  parallel_rows(opts_.workers, 0, g_.ny, [&](int j) {
    const double* b1u = by1_.row(j + 1);
    const double* b3 = by3_.row(j);
    const double* g1 = gy1_.row(j);
    const double* g1u = gy1_.row(j + 1);
    const double* z = z_.row(j);
    const double* c = c_.row(j);
    double* tl = tl_.row(j);
    double* tr = tr_.row(j);
    for (int i = -1; i <= nx; ++i) {
      double b = b1u[i] - b3[i];
      if (with_corr) b += g1u[i] - g1[i];
      tl[i] = -c[i - 1] * z[i] * b / (z[i - 1] + z[i]);
      tr[i] = -c[i + 1] * z[i] * b / (z[i] + z[i + 1]);
    }
  });
}

void Claw2::update(GridState& s, double lambda) {
  const int nx = g_.nx;
  const bool transverse = two_d_ && opts_.transverse != TransverseMode::none;
  const double half = 0.5;
  const double hl = 0.5 * lambda;
  // Assemble the full correction fluxes in place: own second-order part plus
  // the transverse corner deposits.
  parallel_rows(opts_.workers, 0, two_d_ ? g_.ny : 1, [&](int j) {
    const double* z = z_.row(j);
    double* f1 = fx1_.row(j);
    double* f2 = fx2_.row(j);
    const double* tl = tl_.row(j);
    const double* tr = tr_.row(j);
    for (int i = 0; i <= nx; ++i) {
      double a1 = half * f1[i];
      double a2 = half * f2[i];
      if (transverse) {
        a1 -= hl * (tl[i] - tr[i - 1]);
        a2 -= hl * (tl[i] * z[i - 1] + tr[i - 1] * z[i]);
      }
      f1[i] = a1;
      f2[i] = a2;
    }
  });
  if (two_d_) {
    parallel_rows(opts_.workers, 0, g_.ny + 1, [&](int j) {
      const double* zd = z_.row(j - 1);
      const double* zu = z_.row(j);
      double* g1 = gy1_.row(j);
      double* g3 = gy3_.row(j);
      const double* td = td_.row(j);
      const double* tu = tu_.row(j - 1);
      for (int i = 0; i < nx; ++i) {
        double a1 = half * g1[i];
        double a3 = half * g3[i];
        if (transverse) {
          a1 -= hl * (td[i] - tu[i]);
          a3 -= hl * (td[i] * zd[i] + tu[i] * zu[i]);
        }
        g1[i] = a1;
        g3[i] = a3;
      }
    });
  }

  parallel_rows(opts_.workers, 0, two_d_ ? g_.ny : 1, [&](int j) {
    const double* e = s.eps.row(j);
    const double* mx = s.mx.row(j);
    const double* my = s.my.row(j);
    const double* z = z_.row(j);
    const double* b1 = bx1_.row(j);
    const double* b3 = bx3_.row(j);
    const double* f1 = fx1_.row(j);
    const double* f2 = fx2_.row(j);
    double* ne = next_.eps.row(j);
    double* nmx = next_.mx.row(j);
    double* nmy = next_.my.row(j);
    if (!two_d_) {
      for (int i = 0; i < nx; ++i) {
        ne[i] = e[i] - lambda * ((b1[i + 1] - b3[i]) + (f1[i + 1] - f1[i]));
        nmx[i] = mx[i] - lambda * ((b1[i + 1] + b3[i]) * z[i] + (f2[i + 1] - f2[i]));
        nmy[i] = my[i];
      }
      return;
    }
    const double* c1 = by1_.row(j + 1);
    const double* c3 = by3_.row(j);
    const double* g1 = gy1_.row(j);
    const double* g1u = gy1_.row(j + 1);
    const double* g3 = gy3_.row(j);
    const double* g3u = gy3_.row(j + 1);
    for (int i = 0; i < nx; ++i) {
      const double dx1 = (b1[i + 1] - b3[i]) + (f1[i + 1] - f1[i]);
      const double dy1 = (c1[i] - c3[i]) + (g1u[i] - g1[i]);
      ne[i] = e[i] - lambda * (dx1 + dy1);
      nmx[i] = mx[i] - lambda * ((b1[i + 1] + b3[i]) * z[i] + (f2[i + 1] - f2[i]));
      nmy[i] = my[i] - lambda * ((c1[i] + c3[i]) * z[i] + (g3u[i] - g3[i]));
    }
  });
  std::swap(s.eps, next_.eps);
  std::swap(s.mx, next_.mx);
  std::swap(s.my, next_.my);
}

}  // namespace swpm
