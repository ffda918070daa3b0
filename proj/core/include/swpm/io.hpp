#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "swpm/diagnostics.hpp"
#include "swpm/grid.hpp"

namespace swpm {

/// Binary dump: "SWPM1\n", then "nx ny h x0 y0 t\n" in ASCII, then the eps,
/// mx and my planes of the interior cells as little-endian float64, row-major.
void write_dump(const std::filesystem::path& path, const GridState& state);

/// Reads a dump into a state with the given ghost width; the ghost frame is
/// zero until fill_ghost() is called.
GridState read_dump(const std::filesystem::path& path, int ghost = 3);

/// "s,sigma" rows.
void write_slice_csv(const std::filesystem::path& path, const std::vector<SlicePoint>& slice);
std::vector<SlicePoint> read_slice_csv(const std::filesystem::path& path);

void write_series_csv(const std::filesystem::path& path, const DiagnosticsSeries& series);

/// A small header-plus-rows numeric table.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const;
};
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace swpm
