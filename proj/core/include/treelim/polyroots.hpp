#pragma once

#include <complex>
#include <vector>

namespace treelim {

// All complex roots of sum coeffs[k] * x^k. Aberth iteration seeded from the
// tropical root magnitudes (upper hull of (k, log|coeffs[k]|)), which keeps it
// stable when root magnitudes span many orders, as they do when tracking
// Newton-polygon branches at large |z|.
std::vector<std::complex<double>> find_roots(std::vector<std::complex<double>> coeffs);

}  // namespace treelim
