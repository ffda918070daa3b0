#include "vecmath.hpp"

#include <cmath>

namespace swpm::detail {

void exp_batch(const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] = std::exp(x[i]);
}

}  // namespace swpm::detail
