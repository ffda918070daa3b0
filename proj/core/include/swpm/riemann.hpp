#pragma once

#include <array>

#include "swpm/medium.hpp"

namespace swpm {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Normal flux in x: f(q) = (-u, -sigma, 0) with u = mx / rho.
Vec3 flux_x(const Vec3& q, const Material& m);
/// Normal flux in y: g(q) = (-v, 0, -sigma) with v = my / rho.
Vec3 flux_y(const Vec3& q, const Material& m);

/// f-wave decomposition of one interface.
///
/// zwave1 travels with speed s1 = -c of the left (or lower) state, zwave3 with
/// s3 = +c of the right (or upper) state. The zero-speed wave zwave2 carries
/// the flux jump in the tangential-momentum component, which is identically
/// zero for this system; it is reported but never propagated.
struct RiemannResult {
  Vec3 zwave1{};
  Vec3 zwave2{};
  Vec3 zwave3{};
  double s1 = 0.0;
  double s3 = 0.0;
  Vec3 amdq{};
  Vec3 apdq{};
};

/// x-interface between cells with states ql | qr and materials ml | mr.
/// Decomposes F(qr) - F(ql) on r1 = (1, Z_l, 0), r2 = (0, 0, 1), r3 = (-1, Z_r, 0).
RiemannResult solve_normal_x(const Vec3& ql, const Vec3& qr, const Material& ml,
                             const Material& mr);

/// y-interface between lower state qd and upper state qu.
/// Decomposes G(qu) - G(qd) on r1 = (1, 0, Z_d), r2 = (0, 1, 0), r3 = (-1, 0, Z_u).
RiemannResult solve_normal_y(const Vec3& qd, const Vec3& qu, const Material& md,
                             const Material& mu);

/// Local wave data of one side of a transverse interface, evaluated at the
/// current state of that cell.
struct WaveCoeffs {
  double Z = 1.0;
  double c = 1.0;
};
WaveCoeffs wave_coeffs(double eps, const Material& m);

struct TransverseSplit {
  Vec3 minus{};  ///< down-going (y) or left-going (x) correction, s1*gamma1*r1
  Vec3 plus{};   ///< up-going (y) or right-going (x) correction, s3*gamma3*r3
};

/// Splits a horizontal fluctuation into up- and down-going corrections on the
/// y-interface between `down` and `up` using the y eigenvectors.
TransverseSplit solve_transverse_y(const Vec3& fluct, const WaveCoeffs& down, const WaveCoeffs& up);

/// Splits a vertical fluctuation into left- and right-going corrections on the
/// x-interface between `left` and `right` using the x eigenvectors.
TransverseSplit solve_transverse_x(const Vec3& fluct, const WaveCoeffs& left,
                                   const WaveCoeffs& right);

/// Quasilinear matrices of one cell and their eigenpairs.
struct QuasilinearEigen {
  Vec3 r1{};
  Vec3 r2{};
  Vec3 r3{};
  Vec3 lambda{};  ///< (-c, 0, +c)
};
Mat3 quasilinear_x(double eps, const Material& m);
Mat3 quasilinear_y(double eps, const Material& m);
QuasilinearEigen eigen_x(double eps, const Material& m);
QuasilinearEigen eigen_y(double eps, const Material& m);

/// Exact all-shock solution of an x-interface problem: a left-going shock in
/// the left material and a right-going shock in the right material, with u
/// and sigma continuous across the stationary material interface.
struct AllShockSolution {
  double u_mid = 0.0;
  double sigma_mid = 0.0;
  Vec3 q_mid_left{};   ///< middle state on the left of the material interface
  Vec3 q_mid_right{};  ///< middle state on the right of the material interface
  double s_left = 0.0;
  double s_right = 0.0;
  Vec3 amdq{};  ///< f(q_mid_left) - f(ql) = s_left (q_mid_left - ql)
  Vec3 apdq{};  ///< f(qr) - f(q_mid_right) = s_right (qr - q_mid_right)
  int iterations = 0;
};

/// Safeguarded Newton iteration on the middle stress. Throws NumericalError
/// if it has not converged after 100 iterations.
AllShockSolution exact_all_shock(const Vec3& ql, const Vec3& qr, const Material& ml,
                                 const Material& mr);

}  // namespace swpm
