#pragma once

namespace swpm::detail {

/// y[i] = exp(x[i]) for i < n, using the vectorized libm variants.
void exp_batch(const double* x, double* y, int n);

}  // namespace swpm::detail
