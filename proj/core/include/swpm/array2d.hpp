#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace swpm {

/// Uniform Cartesian grid with square cells and an inline ghost frame.
///
/// Cell (i, j) with 0 <= i < nx, 0 <= j < ny is interior; ghost cells extend
/// the index range to [-ghost, nx + ghost) x [-ghost, ny + ghost). A grid with
/// ny == 1 is treated as one-dimensional by the schemes (no y sweeps).
struct GridGeometry {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  int ghost = 3;

  int stride() const { return nx + 2 * ghost; }
  int rows() const { return ny + 2 * ghost; }
  std::size_t total() const {
    return static_cast<std::size_t>(stride()) * static_cast<std::size_t>(rows());
  }
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(j + ghost) * static_cast<std::size_t>(stride()) +
           static_cast<std::size_t>(i + ghost);
  }
  double xc(int i) const { return x0 + (i + 0.5) * h; }
  double yc(int j) const { return y0 + (j + 0.5) * h; }
  bool one_dimensional() const { return ny == 1; }

  /// Throws ConfigError on non-positive sizes or spacing.
  void validate() const;

  bool operator==(const GridGeometry&) const = default;
};

/// Row-major scalar field over a GridGeometry, ghost frame included.
class Array2D {
 public:
  Array2D() = default;
  explicit Array2D(const GridGeometry& geom, double fill = 0.0)
      : nx_(geom.nx), ny_(geom.ny), ghost_(geom.ghost), stride_(geom.stride()),
        data_(geom.total(), fill) {}

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  /// Pointer to cell (0, j); valid for i in [-ghost, nx + ghost).
  double* row(int j) { return data_.data() + index(0, j); }
  const double* row(int j) const { return data_.data() + index(0, j); }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int ghost() const { return ghost_; }

  bool operator==(const Array2D&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + ghost_) * static_cast<std::size_t>(stride_) +
           static_cast<std::size_t>(i + ghost_);
  }

  int nx_ = 0;
  int ny_ = 0;
  int ghost_ = 0;
  int stride_ = 0;
  std::vector<double> data_;
};

}  // namespace swpm
