#include "swpm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "swpm/errors.hpp"

namespace swpm {

namespace {

double cell_area(const GridGeometry& g) { return g.one_dimensional() ? g.h : g.h * g.h; }

void require_same_geometry(const GridState& s, const MaterialField& f, const char* what) {
  if (!(s.geom == f.geom))
    throw ConfigError(std::string(what) + ": state and material field grids differ");
}

}  // namespace

ScalarField stress_field(const GridState& s, const MaterialField& f) {
  require_same_geometry(s, f, "stress_field");
  ScalarField out{s.geom.nx, s.geom.ny, s.geom.h, {}};
  out.v.resize(static_cast<std::size_t>(out.nx) * out.ny);
  for (int j = 0; j < out.ny; ++j)
    for (int i = 0; i < out.nx; ++i) out.at(i, j) = stress(s.eps(i, j), f.K(i, j));
  return out;
}

double entropy(const GridState& s, const MaterialField& f) {
  require_same_geometry(s, f, "entropy");
  double total = 0.0;
  for (int j = 0; j < s.geom.ny; ++j) {
    const double* e = s.eps.row(j);
    const double* mx = s.mx.row(j);
    const double* my = s.my.row(j);
    const double* K = f.K.row(j);
    const double* rho = f.rho.row(j);
    double row = 0.0;
    for (int i = 0; i < s.geom.nx; ++i) {
      const double a = K[i] * e[i];
      if (!(a < kMaxExponent)) throw NumericalError("entropy: stress overflow");
      const double kinetic = 0.5 * (mx[i] * mx[i] + my[i] * my[i]) / rho[i];
      row += kinetic + std::expm1(a) / K[i] + e[i];
    }
    total += row;
  }
  return total * cell_area(s.geom);
}

ScalarField restrict_block_average(const ScalarField& fine, int factor) {
  if (factor < 1 || fine.nx % factor != 0 || fine.ny % factor != 0)
    throw ConfigError("restrict_block_average: grid is not an integer refinement");
  ScalarField c{fine.nx / factor, fine.ny / factor, fine.h * factor, {}};
  c.v.assign(static_cast<std::size_t>(c.nx) * c.ny, 0.0);
  const double w = 1.0 / (static_cast<double>(factor) * factor);
  for (int J = 0; J < c.ny; ++J)
    for (int I = 0; I < c.nx; ++I) {
      double sum = 0.0;
      for (int b = 0; b < factor; ++b)
        for (int a = 0; a < factor; ++a) sum += fine.at(I * factor + a, J * factor + b);
      c.at(I, J) = sum * w;
    }
  return c;
}

double relative_error(const ScalarField& sigma, const ScalarField& ref) {
  if (sigma.nx <= 0 || sigma.ny <= 0 || ref.nx % sigma.nx != 0 || ref.ny % sigma.ny != 0 ||
      ref.nx / sigma.nx != ref.ny / sigma.ny)
    throw ConfigError("relative_error: reference grid is not an integer refinement");
  const int factor = ref.nx / sigma.nx;
  const ScalarField r = factor == 1 ? ref : restrict_block_average(ref, factor);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < sigma.v.size(); ++k) {
    const double d = sigma.v[k] - r.v[k];
    num += d * d;
    den += r.v[k] * r.v[k];
  }
  if (!(den > 0.0)) throw NumericalError("relative_error: reference has zero norm");
  return (ref.h / sigma.h) * std::sqrt(num / den);
}

std::vector<double> convergence_rates(const std::vector<double>& h,
                                      const std::vector<double>& errors) {
  if (h.size() != errors.size() || h.size() < 2)
    throw ConfigError("convergence_rates: need at least two (h, error) pairs");
  std::vector<double> rates;
  for (std::size_t k = 0; k + 1 < h.size(); ++k) {
    if (!(errors[k] > 0.0 && errors[k + 1] > 0.0))
      throw NumericalError("convergence_rates: errors must be positive");
    rates.push_back(std::log(errors[k] / errors[k + 1]) / std::log(h[k] / h[k + 1]));
  }
  return rates;
}

std::string_view to_string(SliceLine line) {
  return line == SliceLine::y_eq_0 ? "y_eq_0" : "y_eq_x";
}

SliceLine slice_line_from_string(std::string_view name) {
  if (name == "y_eq_0" || name == "y=0") return SliceLine::y_eq_0;
  if (name == "y_eq_x" || name == "y=x") return SliceLine::y_eq_x;
  throw ConfigError("unknown slice line '" + std::string(name) + "'");
}

std::vector<SlicePoint> extract_slice(const GridState& s, const MaterialField& f, SliceLine line) {
  require_same_geometry(s, f, "extract_slice");
  std::vector<SlicePoint> out;
  const auto& g = s.geom;
  if (line == SliceLine::y_eq_0) {
    for (int i = 0; i < g.nx; ++i) out.push_back({g.xc(i), stress(s.eps(i, 0), f.K(i, 0))});
  } else {
    const int n = std::min(g.nx, g.ny);
    for (int i = 0; i < n; ++i)
      out.push_back({std::sqrt(2.0) * g.xc(i), stress(s.eps(i, i), f.K(i, i))});
  }
  return out;
}

int rightmost_local_minimum(const std::vector<double>& row, int end) {
  const int last = static_cast<int>(row.size()) - 2;
  for (int i = end >= 0 ? std::min(end - 1, last) : last; i >= 1; --i) {
    const auto k = static_cast<std::size_t>(i);
    if (row[k] < row[k + 1] && row[k] < row[k - 1]) return i;
  }
  return -1;
}

GridState isolate_leading(const GridState& s, const MaterialField& f, double peak_fraction) {
  require_same_geometry(s, f, "isolate_leading");
  GridState out = s;
  const auto& g = s.geom;
  std::vector<double> row(static_cast<std::size_t>(g.nx));
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i)
      row[static_cast<std::size_t>(i)] = stress(s.eps(i, j), f.K(i, j)) - 2.0;
    int end = -1;
    if (peak_fraction > 0.0) {
      const double top = *std::max_element(row.begin(), row.end());
      for (int i = g.nx - 2; i >= 1 && end < 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (row[k] >= peak_fraction * top && row[k] >= row[k - 1] && row[k] >= row[k + 1]) end = i;
      }
    }
    const int x = rightmost_local_minimum(row, end);
    for (int i = 0; i < x; ++i) {
      out.eps(i, j) = 0.0;
      out.mx(i, j) = 0.0;
      out.my(i, j) = 0.0;
    }
  }
  return out;
}

GridState superpose(const GridState& a, const GridState& b, bool negate_b_velocity) {
  if (!(a.geom == b.geom)) throw ConfigError("superpose: grids differ");
  GridState out = a;
  const double sm = negate_b_velocity ? -1.0 : 1.0;
  auto add = [](Array2D& dst, const Array2D& src, double w) {
    auto d = dst.raw();
    auto s = src.raw();
    for (std::size_t k = 0; k < d.size(); ++k) d[k] += w * s[k];
  };
  add(out.eps, b.eps, 1.0);
  add(out.mx, b.mx, sm);
  add(out.my, b.my, sm);
  return out;
}

GridState shift_cells(const GridState& s, int n) {
  GridState out(s.geom);
  out.t = s.t;
  const auto& g = s.geom;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const int src = i - n;
      if (src < 0 || src >= g.nx) continue;
      out.eps(i, j) = s.eps(src, j);
      out.mx(i, j) = s.mx(src, j);
      out.my(i, j) = s.my(src, j);
    }
  return out;
}

std::vector<Pulse> detect_pulses(const std::vector<SlicePoint>& slice, double min_amplitude,
                                 double separation) {
  const int n = static_cast<int>(slice.size());
  auto p = [&](int k) { return slice[static_cast<std::size_t>(k)].sigma - 2.0; };
  std::vector<Pulse> peaks;
  for (int k = 0; k < n; ++k) {
    const double v = p(k);
    if (v <= min_amplitude) continue;
    const bool left_ok = k == 0 || v > p(k - 1);
    const bool right_ok = k == n - 1 || v >= p(k + 1);
    if (!(left_ok && right_ok)) continue;
    Pulse cand{k, slice[static_cast<std::size_t>(k)].s, v};
    while (!peaks.empty()) {
      const Pulse& last = peaks.back();
      double lowest = last.amplitude;
      for (int m = last.index; m <= k; ++m) lowest = std::min(lowest, p(m));
      if (lowest < separation * std::min(last.amplitude, cand.amplitude)) break;
      if (last.amplitude >= cand.amplitude) {
        cand = last;
        peaks.pop_back();
        break;
      }
      peaks.pop_back();
    }
    peaks.push_back(cand);
  }
  return peaks;
}

void DiagnosticsSeries::record(const GridState& s, const MaterialField& f) {
  const double eta = swpm::entropy(s, f);
  if (times.empty()) entropy0 = eta;
  const ConservedTotals tot = conserved_totals(s);
  times.push_back(s.t);
  entropy.push_back(entropy0 != 0.0 ? eta / entropy0 : 1.0);
  mass_eps.push_back(tot.eps);
  mom_x.push_back(tot.mx);
  mom_y.push_back(tot.my);
}

void DiagnosticsSeries::write_csv(std::ostream& os) const {
  os << "t,entropy,eps,mx,my\n" << std::setprecision(17);
  for (std::size_t k = 0; k < times.size(); ++k)
    os << times[k] << ',' << entropy[k] << ',' << mass_eps[k] << ',' << mom_x[k] << ','
       << mom_y[k] << '\n';
}

}  // namespace swpm
