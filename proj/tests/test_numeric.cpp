#include "netcomplexity/numeric.hpp"

#include "netcomplexity/rng.hpp"

#include "doctest.h"

#include <cmath>

using namespace netcomplexity;

TEST_CASE("ceil_log2 on word-sized integers") {
  CHECK(ceil_log2(0) == 0);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
  CHECK(ceil_log2(28) == 5);
  CHECK(ceil_log2(std::uint64_t(1) << 63) == 63);
}

TEST_CASE("ceil_log2 on big integers matches the word version") {
  for (std::uint64_t x : {0ull, 1ull, 2ull, 3ull, 1023ull, 1024ull, 1025ull})
    CHECK(ceil_log2(BigInt(x)) == ceil_log2(x));
  CHECK(ceil_log2(BigInt(1) << 200) == 200);
  CHECK(ceil_log2((BigInt(1) << 200) + 1) == 201);
}

TEST_CASE("log2_exact agrees with std::log2 on representable values") {
  for (std::uint64_t x : {1ull, 2ull, 3ull, 7ull, 28ull, 1000000007ull}) {
    CHECK(log2_exact(BigInt(x)) ==
          doctest::Approx(std::log2(double(x))).epsilon(1e-14));
  }
  // a 300-bit value: log2(2^300) == 300 exactly
  CHECK(log2_exact(BigInt(1) << 300) == doctest::Approx(300.0).epsilon(1e-14));
  CHECK_THROWS_AS(log2_exact(BigInt(0)), std::invalid_argument);
}

TEST_CASE("factorial and binomial are exact") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(28, 0) == 1);
  CHECK(binomial(28, 28) == 1);
  CHECK(binomial(28, 1) == 28);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
  CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);
}

TEST_CASE("log2_binomial endpoints and anchor values") {
  CHECK(log2_binomial(28, 0) == 0.0);
  CHECK(log2_binomial(28, 28) == 0.0);
  CHECK(log2_binomial(28, 1) == doctest::Approx(std::log2(28.0)).epsilon(1e-12));
  CHECK_THROWS_AS(log2_binomial(5, 6), std::invalid_argument);
}

TEST_CASE("log2_binomial is symmetric in k and n-k") {
  for (std::uint64_t n : {5ull, 28ull, 100ull, 9900ull})
    for (std::uint64_t k = 0; k <= n && k <= 40; k += 7)
      CHECK(log2_binomial(n, k) == log2_binomial(n, n - k));
}

TEST_CASE("log2 of factorial is consistent with the exact product") {
  for (unsigned n : {1u, 2u, 8u, 100u, 500u})
    CHECK(log2_factorial(n) == doctest::Approx(log2_exact(factorial(n))).epsilon(1e-14));
}

TEST_CASE("seed derivation and bounded draws") {
  CHECK(netcomplexity::derive_seed(42, 3) == netcomplexity::mix64(42 ^ 3));
  CHECK(netcomplexity::mix64(1) != netcomplexity::mix64(2));
  netcomplexity::Rng rng(9);
  for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}
