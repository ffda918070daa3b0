#pragma once

#include <cmath>
#include <random>

#include "swpm/diagnostics.hpp"
#include "swpm/grid.hpp"
#include "swpm/medium.hpp"

namespace swpm::test {

inline MaterialField field_for(const MediumSpec& spec, const GridGeometry& g,
                               const BoundarySpec& bc) {
  MaterialField f = build_field(spec, g);
  fill_ghost_material(f, bc);
  return f;
}

inline MediumSpec checkerboard(double b) {
  MediumSpec s;
  s.kind = MediumKind::checkerboard;
  s.KB = s.rhoB = b;
  return s;
}

inline MediumSpec sinusoidal(double b) {
  MediumSpec s;
  s.kind = MediumKind::sinusoidal;
  s.KB = s.rhoB = b;
  return s;
}

/// Sum of a few random low-wavenumber Fourier modes on a periodic box.
inline GridState random_smooth_state(const GridGeometry& g, unsigned seed, double amp) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double lx = g.nx * g.h, ly = g.ny * g.h;
  GridState s(g);
  for (Array2D* a : {&s.eps, &s.mx, &s.my}) {
    for (int m = 0; m < 4; ++m) {
      const int kx = 1 + m % 2, ky = g.one_dimensional() ? 0 : 1 + m / 2;
      const double c = amp * u(rng), ph = 3.0 * u(rng);
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
          (*a)(i, j) += c * std::sin(2.0 * M_PI * (kx * g.xc(i) / lx + ky * g.yc(j) / ly) + ph);
    }
  }
  return s;
}

inline double max_interior_diff(const Array2D& a, const Array2D& b, int nx, int ny) {
  double d = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

inline double max_state_diff(const GridState& a, const GridState& b) {
  const int nx = a.geom.nx, ny = a.geom.ny;
  return std::max({max_interior_diff(a.eps, b.eps, nx, ny), max_interior_diff(a.mx, b.mx, nx, ny),
                   max_interior_diff(a.my, b.my, nx, ny)});
}

/// Plain relative L2 difference of a coarse field and the block average of a
/// fine one.
inline double plain_relative_l2(const ScalarField& coarse, const ScalarField& fine) {
  const ScalarField r = restrict_block_average(fine, fine.nx / coarse.nx);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < r.v.size(); ++k) {
    num += (coarse.v[k] - r.v[k]) * (coarse.v[k] - r.v[k]);
    den += r.v[k] * r.v[k];
  }
  return std::sqrt(num / den);
}

}  // namespace swpm::test
