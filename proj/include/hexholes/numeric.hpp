#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace hexholes {

// Exact arbitrary-precision integer count and rational ratio.
// cpp_rational keeps values in lowest terms with positive denominator.
using Count = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

using Matrix = std::vector<std::vector<Count>>;

// C(n, k); 0 for out-of-range arguments (k < 0, n < 0 or k > n).
Count binomial(long long n, long long k);

// Exact determinant via Bareiss fraction-free elimination with row pivoting.
// The empty matrix has determinant 1. Throws std::invalid_argument if the
// matrix is not square.
Count det_exact(Matrix m);

}  // namespace hexholes
