#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace netcomplexity {

using BigInt = boost::multiprecision::cpp_int;

/// Smallest k with 2^k >= x; defined as 0 for x <= 1.
int ceil_log2(std::uint64_t x);
int ceil_log2(const BigInt& x);

/// log2 of a positive integer, computed from the bit length plus the
/// leading 53-bit mantissa. Relative error is a few ulp, well inside 1e-12.
double log2_exact(const BigInt& x);

BigInt factorial(unsigned n);
double log2_factorial(unsigned n);

/// Exact binomial coefficient; throws std::invalid_argument when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);
double log2_binomial(std::uint64_t n, std::uint64_t k);

}  // namespace netcomplexity
