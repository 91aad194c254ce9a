#include "netcomplexity/numeric.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace netcomplexity {

int ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return 64 - static_cast<int>(std::countl_zero(x - 1));
}

int ceil_log2(const BigInt& x) {
  if (x <= 1) return 0;
  BigInt y = x - 1;
  return static_cast<int>(boost::multiprecision::msb(y)) + 1;
}

double log2_exact(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("log2_exact: argument must be positive");
  const auto bits = static_cast<int>(boost::multiprecision::msb(x));  // floor(log2 x)
  if (bits <= 62) return std::log2(x.convert_to<double>());
  const int shift = bits - 52;
  const std::uint64_t top = BigInt(x >> shift).convert_to<std::uint64_t>();
  return static_cast<double>(shift) + std::log2(static_cast<double>(top));
}

namespace {

std::mutex memo_mutex;
std::vector<BigInt> factorial_memo{BigInt(1)};       // factorial_memo[k] = k!
std::vector<double> log2_factorial_memo{0.0};

void grow_factorials(unsigned n) {
  while (factorial_memo.size() <= n) {
    const auto k = factorial_memo.size();
    factorial_memo.push_back(factorial_memo.back() * static_cast<unsigned>(k));
    log2_factorial_memo.push_back(log2_exact(factorial_memo.back()));
  }
}

}  // namespace

BigInt factorial(unsigned n) {
  std::lock_guard lock(memo_mutex);
  grow_factorials(n);
  return factorial_memo[n];
}

double log2_factorial(unsigned n) {
  std::lock_guard lock(memo_mutex);
  grow_factorials(n);
  return log2_factorial_memo[n];
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("binomial: k > n");
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: C(n-k+i, i) is an integer
  }
  return result;
}

double log2_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("log2_binomial: k > n");
  static std::mutex cache_mutex;
  static std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, double>> cache;
  const std::uint64_t kk = (k > n - k) ? n - k : k;
  {
    std::lock_guard lock(cache_mutex);
    auto row = cache.find(n);
    if (row != cache.end()) {
      auto it = row->second.find(kk);
      if (it != row->second.end()) return it->second;
    }
  }
  const double value = log2_exact(binomial(n, kk));
  std::lock_guard lock(cache_mutex);
  cache[n][kk] = value;
  return value;
}

}  // namespace netcomplexity
