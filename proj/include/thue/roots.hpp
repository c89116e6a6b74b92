// Numerical complex roots of small integer polynomials.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace thue {

using Complex = std::complex<long double>;

/// All complex roots of sum coeffs[i] X^i (lowest degree first, nonzero
/// leading and constant terms) by Aberth-Ehrlich iteration in long double.
std::vector<Complex> complex_roots(const std::vector<std::int64_t>& coeffs);

/// Cauchy bound 1 + max |c_i / c_n| on the modulus of every root.
long double cauchy_bound(const std::vector<std::int64_t>& coeffs);

}  // namespace thue
