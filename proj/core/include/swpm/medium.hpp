#pragma once

#include <string>
#include <string_view>

#include "swpm/array2d.hpp"

namespace swpm {

enum class MediumKind { homogeneous, checkerboard, sinusoidal, layered1d };

std::string_view to_string(MediumKind kind);
MediumKind medium_kind_from_string(std::string_view name);

/// Local material coefficients: bulk modulus K and density rho.
struct Material {
  double K = 1.0;
  double rho = 1.0;

  bool operator==(const Material&) const = default;
};

/// Analytic description of a unit-period medium built from two materials.
struct MediumSpec {
  MediumKind kind = MediumKind::homogeneous;
  double KA = 1.0;
  double rhoA = 1.0;
  double KB = 1.0;
  double rhoB = 1.0;

  static constexpr double period = 1.0;

  Material a() const { return {KA, rhoA}; }
  Material b() const { return {KB, rhoB}; }

  /// Throws ConfigError if any coefficient is non-positive.
  void validate() const;

  bool operator==(const MediumSpec&) const = default;
};

/// A where (x - floor x - 1/2)(y - floor y - 1/2) < 0, B where > 0.
/// Zero (a cell center exactly on a material line) resolves to A.
Material sample_checkerboard(const MediumSpec& spec, double x, double y);

/// Mean of A and B plus half their difference times sin(2 pi x) sin(2 pi y).
Material sample_sinusoidal(const MediumSpec& spec, double x, double y);

/// Layers normal to x: A on [n, n + 1/2), B on [n + 1/2, n + 1).
Material sample_layered(const MediumSpec& spec, double x);

Material sample(const MediumSpec& spec, double x, double y);

/// Per-cell K and rho, ghost frame included. Ghost values are filled by
/// fill_ghost_material() according to the boundary conditions.
struct MaterialField {
  GridGeometry geom;
  Array2D K;
  Array2D rho;

  bool operator==(const MaterialField&) const = default;
};

/// Samples the medium at cell centers of the interior cells. Ghost cells are
/// left as copies of the sampled medium; call fill_ghost_material() to apply
/// the mirror/extrapolation rule of a boundary spec.
MaterialField build_field(const MediumSpec& spec, const GridGeometry& geom);

/// sigma(eps) = exp(K eps) + 1. Throws NumericalError when K eps overflows.
double stress(double eps, double K);
/// d sigma / d eps = K exp(K eps).
double stress_deriv(double eps, double K);
/// c = sqrt(sigma_eps / rho)
double sound_speed(double eps, double K, double rho);
/// Z = sqrt(rho sigma_eps)
double impedance(double eps, double K, double rho);

/// Inverse of stress(): the strain carrying total stress sigma (> 1).
double strain_from_stress(double sigma, double K);

/// Largest K*eps accepted before exp() is considered to have blown up.
inline constexpr double kMaxExponent = 700.0;

}  // namespace swpm
