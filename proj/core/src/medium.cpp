#include "swpm/medium.hpp"

#include <cmath>
#include <numbers>

#include "swpm/errors.hpp"

namespace swpm {

void GridGeometry::validate() const {
  if (nx <= 0 || ny <= 0) throw ConfigError("grid: nx and ny must be positive");
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("grid: cell size h must be positive");
  if (ghost < 2) throw ConfigError("grid: ghost width must be at least 2");
}

std::string_view to_string(MediumKind kind) {
  switch (kind) {
    case MediumKind::homogeneous: return "homogeneous";
    case MediumKind::checkerboard: return "checkerboard";
    case MediumKind::sinusoidal: return "sinusoidal";
    case MediumKind::layered1d: return "layered1d";
  }
  return "unknown";
}

MediumKind medium_kind_from_string(std::string_view name) {
  if (name == "homogeneous") return MediumKind::homogeneous;
  if (name == "checkerboard") return MediumKind::checkerboard;
  if (name == "sinusoidal") return MediumKind::sinusoidal;
  if (name == "layered1d") return MediumKind::layered1d;
  throw ConfigError("unknown medium kind '" + std::string(name) + "'");
}

void MediumSpec::validate() const {
  if (!(KA > 0.0 && KB > 0.0 && rhoA > 0.0 && rhoB > 0.0))
    throw ConfigError("medium: K and rho must be strictly positive");
}

Material sample_checkerboard(const MediumSpec& spec, double x, double y) {
  const double px = x - std::floor(x) - 0.5;
  const double py = y - std::floor(y) - 0.5;
  return px * py > 0.0 ? spec.b() : spec.a();
}

Material sample_sinusoidal(const MediumSpec& spec, double x, double y) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double s = std::sin(two_pi * x) * std::sin(two_pi * y);
  return {0.5 * (spec.KA + spec.KB) + 0.5 * (spec.KA - spec.KB) * s,
          0.5 * (spec.rhoA + spec.rhoB) + 0.5 * (spec.rhoA - spec.rhoB) * s};
}

Material sample_layered(const MediumSpec& spec, double x) {
  return x - std::floor(x) < 0.5 ? spec.a() : spec.b();
}

Material sample(const MediumSpec& spec, double x, double y) {
  switch (spec.kind) {
    case MediumKind::homogeneous: return spec.a();
    case MediumKind::checkerboard: return sample_checkerboard(spec, x, y);
    case MediumKind::sinusoidal: return sample_sinusoidal(spec, x, y);
    case MediumKind::layered1d: return sample_layered(spec, x);
  }
  return spec.a();
}

MaterialField build_field(const MediumSpec& spec, const GridGeometry& geom) {
  spec.validate();
  geom.validate();
  MaterialField field{geom, Array2D(geom), Array2D(geom)};
  for (int j = -geom.ghost; j < geom.ny + geom.ghost; ++j) {
    for (int i = -geom.ghost; i < geom.nx + geom.ghost; ++i) {
      const Material m = sample(spec, geom.xc(i), geom.yc(j));
      field.K(i, j) = m.K;
      field.rho(i, j) = m.rho;
    }
  }
  return field;
}

double stress(double eps, double K) {
  const double a = K * eps;
  if (!(a < kMaxExponent)) throw NumericalError("stress overflow: K*eps = " + std::to_string(a));
  return std::exp(a) + 1.0;
}

double stress_deriv(double eps, double K) {
  const double a = K * eps;
  if (!(a < kMaxExponent)) throw NumericalError("stress overflow: K*eps = " + std::to_string(a));
  return K * std::exp(a);
}

double sound_speed(double eps, double K, double rho) { return std::sqrt(stress_deriv(eps, K) / rho); }

double impedance(double eps, double K, double rho) { return std::sqrt(rho * stress_deriv(eps, K)); }

double strain_from_stress(double sigma, double K) {
  if (!(sigma > 1.0)) throw ConfigError("stress must exceed 1 to be invertible");
  return std::log(sigma - 1.0) / K;
}

}  // namespace swpm
