#include "swpm/grid.hpp"

#include <cmath>
#include <sstream>

#include "swpm/errors.hpp"

namespace swpm {

std::string_view to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::reflecting_wall: return "reflecting";
    case BoundaryKind::outflow_extrapolation: return "outflow";
    case BoundaryKind::periodic: return "periodic";
  }
  return "unknown";
}

BoundaryKind boundary_kind_from_string(std::string_view name) {
  if (name == "reflecting" || name == "wall" || name == "reflecting_wall")
    return BoundaryKind::reflecting_wall;
  if (name == "outflow" || name == "extrap" || name == "outflow_extrapolation")
    return BoundaryKind::outflow_extrapolation;
  if (name == "periodic") return BoundaryKind::periodic;
  throw ConfigError("unknown boundary kind '" + std::string(name) + "'");
}

void BoundarySpec::validate() const {
  if ((left == BoundaryKind::periodic) != (right == BoundaryKind::periodic))
    throw ConfigError("periodic boundaries must be set on both left and right");
  if ((bottom == BoundaryKind::periodic) != (top == BoundaryKind::periodic))
    throw ConfigError("periodic boundaries must be set on both bottom and top");
}

void check_finite(const GridState& s) {
  const auto& g = s.geom;
  for (int j = 0; j < g.ny; ++j) {
    const double* e = s.eps.row(j);
    const double* u = s.mx.row(j);
    const double* v = s.my.row(j);
    for (int i = 0; i < g.nx; ++i) {
      if (!std::isfinite(e[i]) || !std::isfinite(u[i]) || !std::isfinite(v[i])) {
        std::ostringstream msg;
        msg << "non-finite state at cell (" << i << ", " << j << ") t=" << s.t << ": eps=" << e[i]
            << " mx=" << u[i] << " my=" << v[i];
        throw NumericalError(msg.str());
      }
    }
  }
}

namespace {

// Fills ghost columns of one array for rows [j0, j1). `sign` is applied at
// reflecting walls (-1 for the wall-normal momentum).
void fill_x(Array2D& a, const GridGeometry& g, BoundaryKind left, BoundaryKind right, double sign,
            int j0, int j1) {
  const int nx = g.nx;
  for (int j = j0; j < j1; ++j) {
    double* r = a.row(j);
    for (int k = 0; k < g.ghost; ++k) {
      switch (left) {
        case BoundaryKind::reflecting_wall: r[-1 - k] = sign * r[std::min(k, nx - 1)]; break;
        case BoundaryKind::outflow_extrapolation: r[-1 - k] = r[0]; break;
        case BoundaryKind::periodic: r[-1 - k] = r[((nx - 1 - k) % nx + nx) % nx]; break;
      }
      switch (right) {
        case BoundaryKind::reflecting_wall: r[nx + k] = sign * r[std::max(nx - 1 - k, 0)]; break;
        case BoundaryKind::outflow_extrapolation: r[nx + k] = r[nx - 1]; break;
        case BoundaryKind::periodic: r[nx + k] = r[k % nx]; break;
      }
    }
  }
}

void fill_y(Array2D& a, const GridGeometry& g, BoundaryKind bottom, BoundaryKind top, double sign) {
  const int ny = g.ny;
  const int w = g.stride();
  for (int k = 0; k < g.ghost; ++k) {
    int src_b = 0;
    double sb = 1.0;
    switch (bottom) {
      case BoundaryKind::reflecting_wall: src_b = std::min(k, ny - 1); sb = sign; break;
      case BoundaryKind::outflow_extrapolation: src_b = 0; break;
      case BoundaryKind::periodic: src_b = ((ny - 1 - k) % ny + ny) % ny; break;
    }
    int src_t = ny - 1;
    double st = 1.0;
    switch (top) {
      case BoundaryKind::reflecting_wall: src_t = std::max(ny - 1 - k, 0); st = sign; break;
      case BoundaryKind::outflow_extrapolation: src_t = ny - 1; break;
      case BoundaryKind::periodic: src_t = k % ny; break;
    }
    double* db = a.row(-1 - k) - g.ghost;
    const double* sbr = a.row(src_b) - g.ghost;
    double* dt = a.row(ny + k) - g.ghost;
    const double* str = a.row(src_t) - g.ghost;
    for (int i = 0; i < w; ++i) {
      db[i] = sb * sbr[i];
      dt[i] = st * str[i];
    }
  }
}

}  // namespace

void fill_ghost(GridState& s, const BoundarySpec& bc) {
  const auto& g = s.geom;
  fill_x(s.eps, g, bc.left, bc.right, 1.0, 0, g.ny);
  fill_x(s.mx, g, bc.left, bc.right, -1.0, 0, g.ny);
  fill_x(s.my, g, bc.left, bc.right, 1.0, 0, g.ny);
  fill_y(s.eps, g, bc.bottom, bc.top, 1.0);
  fill_y(s.mx, g, bc.bottom, bc.top, 1.0);
  fill_y(s.my, g, bc.bottom, bc.top, -1.0);
}

void fill_ghost_material(MaterialField& f, const BoundarySpec& bc) {
  const auto& g = f.geom;
  for (Array2D* a : {&f.K, &f.rho}) {
    fill_x(*a, g, bc.left, bc.right, 1.0, 0, g.ny);
    fill_y(*a, g, bc.bottom, bc.top, 1.0);
  }
}

GridState set_initial_condition(const GridGeometry& geom, const MaterialField& field,
                                const PulseParams& p) {
  if (!(p.width > 0.0)) throw ConfigError("ic: pulse width must be positive");
  GridState s(geom);
  const bool one_d = geom.one_dimensional();
  for (int j = 0; j < geom.ny; ++j) {
    const double dy = one_d ? 0.0 : geom.yc(j) - p.yc;
    for (int i = 0; i < geom.nx; ++i) {
      const double dx = geom.xc(i) - p.xc;
      const double dsigma = p.amplitude * std::exp(-(dx * dx + dy * dy) / p.width);
      if (!(1.0 + dsigma > 0.0))
        throw ConfigError("ic: stress perturbation must stay above -1 (got " +
                          std::to_string(dsigma) + ")");
      s.eps(i, j) = std::log1p(dsigma) / field.K(i, j);
    }
  }
  return s;
}

ConservedTotals conserved_totals(const GridState& s) {
  const auto& g = s.geom;
  const double area = g.one_dimensional() ? g.h : g.h * g.h;
  ConservedTotals tot;
  for (int j = 0; j < g.ny; ++j) {
    double se = 0.0, su = 0.0, sv = 0.0;
    const double* e = s.eps.row(j);
    const double* u = s.mx.row(j);
    const double* v = s.my.row(j);
    for (int i = 0; i < g.nx; ++i) {
      se += e[i];
      su += u[i];
      sv += v[i];
    }
    tot.eps += se;
    tot.mx += su;
    tot.my += sv;
  }
  tot.eps *= area;
  tot.mx *= area;
  tot.my *= area;
  return tot;
}

}  // namespace swpm
