#include "swpm/riemann.hpp"

#include <cmath>
#include <sstream>

#include "swpm/errors.hpp"

namespace swpm {

Vec3 flux_x(const Vec3& q, const Material& m) { return {-q[1] / m.rho, -stress(q[0], m.K), 0.0}; }

Vec3 flux_y(const Vec3& q, const Material& m) { return {-q[2] / m.rho, 0.0, -stress(q[0], m.K)}; }

WaveCoeffs wave_coeffs(double eps, const Material& m) {
  const double se = stress_deriv(eps, m.K);
  return {std::sqrt(m.rho * se), std::sqrt(se / m.rho)};
}

namespace {

void require_positive(const Material& m) {
  if (!(m.K > 0.0 && m.rho > 0.0)) throw NumericalError("riemann: corrupted material data");
}

}  // namespace

RiemannResult solve_normal_x(const Vec3& ql, const Vec3& qr, const Material& ml,
                             const Material& mr) {
  require_positive(ml);
  require_positive(mr);
  const Vec3 fl = flux_x(ql, ml);
  const Vec3 fr = flux_x(qr, mr);
  const WaveCoeffs wl = wave_coeffs(ql[0], ml);
  const WaveCoeffs wr = wave_coeffs(qr[0], mr);
  const double df1 = fr[0] - fl[0];
  const double df2 = fr[1] - fl[1];
  const double df3 = fr[2] - fl[2];
  const double zsum = wl.Z + wr.Z;
  const double beta1 = (wr.Z * df1 + df2) / zsum;
  const double beta3 = (df2 - wl.Z * df1) / zsum;

  RiemannResult r;
  r.zwave1 = {beta1, beta1 * wl.Z, 0.0};
  r.zwave2 = {0.0, 0.0, df3};
  r.zwave3 = {-beta3, beta3 * wr.Z, 0.0};
  r.s1 = -wl.c;
  r.s3 = wr.c;
  r.amdq = r.zwave1;
  r.apdq = r.zwave3;
  return r;
}

RiemannResult solve_normal_y(const Vec3& qd, const Vec3& qu, const Material& md,
                             const Material& mu) {
  require_positive(md);
  require_positive(mu);
  const Vec3 gd = flux_y(qd, md);
  const Vec3 gu = flux_y(qu, mu);
  const WaveCoeffs wd = wave_coeffs(qd[0], md);
  const WaveCoeffs wu = wave_coeffs(qu[0], mu);
  const double dg1 = gu[0] - gd[0];
  const double dg2 = gu[1] - gd[1];
  const double dg3 = gu[2] - gd[2];
  const double zsum = wd.Z + wu.Z;
  const double beta1 = (wu.Z * dg1 + dg3) / zsum;
  const double beta3 = (dg3 - wd.Z * dg1) / zsum;

  RiemannResult r;
  r.zwave1 = {beta1, 0.0, beta1 * wd.Z};
  r.zwave2 = {0.0, dg2, 0.0};
  r.zwave3 = {-beta3, 0.0, beta3 * wu.Z};
  r.s1 = -wd.c;
  r.s3 = wu.c;
  r.amdq = r.zwave1;
  r.apdq = r.zwave3;
  return r;
}

TransverseSplit solve_transverse_y(const Vec3& f, const WaveCoeffs& down, const WaveCoeffs& up) {
  const double zsum = down.Z + up.Z;
  const double g1 = (up.Z * f[0] + f[2]) / zsum;
  const double g3 = (f[2] - down.Z * f[0]) / zsum;
  const double a = -down.c * g1;
  const double b = up.c * g3;
  return {{a, 0.0, a * down.Z}, {-b, 0.0, b * up.Z}};
}

TransverseSplit solve_transverse_x(const Vec3& f, const WaveCoeffs& left,
                                   const WaveCoeffs& right) {
  const double zsum = left.Z + right.Z;
  const double g1 = (right.Z * f[0] + f[1]) / zsum;
  const double g3 = (f[1] - left.Z * f[0]) / zsum;
  const double a = -left.c * g1;
  const double b = right.c * g3;
  return {{a, a * left.Z, 0.0}, {-b, b * right.Z, 0.0}};
}

Mat3 quasilinear_x(double eps, const Material& m) {
  const double se = stress_deriv(eps, m.K);
  return {{{0.0, -1.0 / m.rho, 0.0}, {-se, 0.0, 0.0}, {0.0, 0.0, 0.0}}};
}

Mat3 quasilinear_y(double eps, const Material& m) {
  const double se = stress_deriv(eps, m.K);
  return {{{0.0, 0.0, -1.0 / m.rho}, {0.0, 0.0, 0.0}, {-se, 0.0, 0.0}}};
}

QuasilinearEigen eigen_x(double eps, const Material& m) {
  const WaveCoeffs w = wave_coeffs(eps, m);
  return {{1.0, w.Z, 0.0}, {0.0, 0.0, 1.0}, {-1.0, w.Z, 0.0}, {-w.c, 0.0, w.c}};
}

QuasilinearEigen eigen_y(double eps, const Material& m) {
  const WaveCoeffs w = wave_coeffs(eps, m);
  return {{1.0, 0.0, w.Z}, {0.0, 1.0, 0.0}, {-1.0, 0.0, w.Z}, {-w.c, 0.0, w.c}};
}

namespace {

// Velocity change across a shock in material m joining stress sigma0 (strain
// eps0) to stress sigma: sign(dsigma) * sqrt(dsigma * deps / rho), together
// with its derivative in sigma.
struct ShockBranch {
  double du = 0.0;
  double d_du = 0.0;
  double eps = 0.0;
};

ShockBranch shock_branch(double sigma, double sigma0, double eps0, const Material& m) {
  ShockBranch b;
  b.eps = std::log(sigma - 1.0) / m.K;
  const double ds = sigma - sigma0;
  const double de = b.eps - eps0;
  const double p = ds * de;
  const double deps_dsigma = 1.0 / (m.K * (sigma - 1.0));
  if (p <= 0.0 || std::abs(ds) <= 1e-13 * sigma) {
    // Weak-shock limit: du ~ ds / Z with Z evaluated at sigma.
    const double z = std::sqrt(m.rho / deps_dsigma);
    b.du = ds / z;
    b.d_du = 1.0 / z;
    return b;
  }
  const double mag = std::sqrt(p / m.rho);
  b.du = ds > 0.0 ? mag : -mag;
  b.d_du = std::abs(de + ds * deps_dsigma) / (2.0 * m.rho * mag);
  return b;
}

double shock_speed(double sigma_a, double eps_a, double sigma_b, double eps_b, const Material& m) {
  const double ds = sigma_b - sigma_a;
  const double de = eps_b - eps_a;
  if (std::abs(ds) <= 1e-13 * std::abs(sigma_a) || ds * de <= 0.0)
    return std::sqrt(stress_deriv(eps_a, m.K) / m.rho);
  return std::sqrt(ds / (m.rho * de));
}

}  // namespace

AllShockSolution exact_all_shock(const Vec3& ql, const Vec3& qr, const Material& ml,
                                 const Material& mr) {
  require_positive(ml);
  require_positive(mr);
  const double sl = stress(ql[0], ml.K);
  const double sr = stress(qr[0], mr.K);
  const double ul = ql[1] / ml.rho;
  const double ur = qr[1] / mr.rho;

  // phi(sigma) = u_mid from the left branch minus u_mid from the right branch;
  // strictly increasing on (1, inf).
  auto phi = [&](double s, double* dphi) {
    const ShockBranch bl = shock_branch(s, sl, ql[0], ml);
    const ShockBranch br = shock_branch(s, sr, qr[0], mr);
    if (dphi) *dphi = bl.d_du + br.d_du;
    return (ul + bl.du) - (ur - br.du);
  };

  double lo = 1.0 + 0.5 * (std::min(sl, sr) - 1.0);
  double hi = std::max(sl, sr);
  int guard = 0;
  while (phi(lo, nullptr) > 0.0 && guard++ < 200) lo = 1.0 + 0.5 * (lo - 1.0);
  guard = 0;
  while (phi(hi, nullptr) < 0.0 && guard++ < 200) hi = 1.0 + 2.0 * (hi - 1.0);

  double s = 0.5 * (sl + sr);
  if (!(s > lo && s < hi)) s = 0.5 * (lo + hi);
  AllShockSolution out;
  bool converged = false;
  for (int it = 1; it <= 100; ++it) {
    out.iterations = it;
    double d = 0.0;
    const double f = phi(s, &d);
    if (f == 0.0) {
      converged = true;
      break;
    }
    if (f < 0.0) lo = s;
    else hi = s;
    double next = s - f / d;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - s);
    s = next;
    if (step <= 1e-15 * s || hi - lo <= 1e-15 * s) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "exact_all_shock: no convergence after 100 iterations (sigma_l=" << sl
        << ", sigma_r=" << sr << ")";
    throw NumericalError(msg.str());
  }

  const ShockBranch bl = shock_branch(s, sl, ql[0], ml);
  const ShockBranch br = shock_branch(s, sr, qr[0], mr);
  out.sigma_mid = s;
  out.u_mid = 0.5 * ((ul + bl.du) + (ur - br.du));
  out.q_mid_left = {bl.eps, ml.rho * out.u_mid, ql[2]};
  out.q_mid_right = {br.eps, mr.rho * out.u_mid, qr[2]};
  out.s_left = -shock_speed(sl, ql[0], s, bl.eps, ml);
  out.s_right = shock_speed(sr, qr[0], s, br.eps, mr);
  const Vec3 f_ml = flux_x(out.q_mid_left, ml);
  const Vec3 f_l = flux_x(ql, ml);
  const Vec3 f_r = flux_x(qr, mr);
  const Vec3 f_mr = flux_x(out.q_mid_right, mr);
  for (int k = 0; k < 3; ++k) {
    out.amdq[k] = f_ml[k] - f_l[k];
    out.apdq[k] = f_r[k] - f_mr[k];
  }
  return out;
}

}  // namespace swpm
