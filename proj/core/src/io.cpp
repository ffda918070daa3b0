#include "swpm/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "swpm/errors.hpp"

namespace swpm {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::out | std::ios::trunc | mode);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return os;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ifstream is(path, std::ios::in | mode);
  if (!is) throw ConfigError("cannot open '" + path.string() + "'");
  return is;
}

void put_le(std::ostream& os, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  os.write(reinterpret_cast<const char*>(&bits), sizeof bits);
}

double get_le(std::istream& is) {
  std::uint64_t bits = 0;
  is.read(reinterpret_cast<char*>(&bits), sizeof bits);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  return std::bit_cast<double>(bits);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

void write_dump(const std::filesystem::path& path, const GridState& s) {
  auto os = open_out(path, std::ios::binary);
  const auto& g = s.geom;
  char header[256];
  std::snprintf(header, sizeof header, "%d %d %.17g %.17g %.17g %.17g\n", g.nx, g.ny, g.h, g.x0,
                g.y0, s.t);
  os << "SWPM1\n" << header;
  for (const Array2D* a : {&s.eps, &s.mx, &s.my})
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) put_le(os, (*a)(i, j));
  if (!os) throw std::runtime_error("write failed for '" + path.string() + "'");
}

GridState read_dump(const std::filesystem::path& path, int ghost) {
  auto is = open_in(path, std::ios::binary);
  std::string magic, line;
  std::getline(is, magic);
  if (magic != "SWPM1") throw ConfigError("'" + path.string() + "' is not an SWPM1 dump");
  std::getline(is, line);
  GridGeometry g;
  g.ghost = ghost;
  double t = 0.0;
  std::istringstream hs(line);
  if (!(hs >> g.nx >> g.ny >> g.h >> g.x0 >> g.y0 >> t))
    throw ConfigError("malformed dump header in '" + path.string() + "'");
  g.validate();
  GridState s(g);
  s.t = t;
  for (Array2D* a : {&s.eps, &s.mx, &s.my})
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) (*a)(i, j) = get_le(is);
  if (!is) throw ConfigError("truncated dump '" + path.string() + "'");
  return s;
}

void write_slice_csv(const std::filesystem::path& path, const std::vector<SlicePoint>& slice) {
  auto os = open_out(path);
  os << "s,sigma\n" << std::setprecision(17);
  for (const auto& p : slice) os << p.s << ',' << p.sigma << '\n';
}

std::vector<SlicePoint> read_slice_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  const int cs = t.column("s");
  const int cv = t.column("sigma");
  std::vector<SlicePoint> out;
  for (const auto& r : t.rows)
    out.push_back({r[static_cast<std::size_t>(cs)], r[static_cast<std::size_t>(cv)]});
  return out;
}

void write_series_csv(const std::filesystem::path& path, const DiagnosticsSeries& series) {
  auto os = open_out(path);
  series.write_csv(os);
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return static_cast<int>(k);
  throw ConfigError("csv: no column '" + name + "'");
}

void write_csv(const std::filesystem::path& path, const CsvTable& t) {
  auto os = open_out(path);
  for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
  os << '\n' << std::setprecision(17);
  for (const auto& r : t.rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << '\n';
  }
}

CsvTable read_csv(const std::filesystem::path& path) {
  auto is = open_in(path);
  CsvTable t;
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("csv: empty file '" + path.string() + "'");
  t.columns = split(line, ',');
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw ConfigError("csv: bad number '" + cell + "' on line " + std::to_string(lineno));
      }
    }
    if (row.size() != t.columns.size())
      throw ConfigError("csv: wrong field count on line " + std::to_string(lineno));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace swpm
