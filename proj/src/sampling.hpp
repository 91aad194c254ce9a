#pragma once

#include "netcomplexity/network.hpp"
#include "netcomplexity/rng.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace netcomplexity::detail {

// One uniformly random slot under the given policy. Undirected slots with
// self-loops are drawn by index decoding so loops are not over-weighted.
inline std::pair<int, int> random_slot(Rng& rng, int n, bool directed,
                                       bool self_loops) {
  const auto un = static_cast<std::uint64_t>(n);
  if (directed) {
    for (;;) {
      const int u = static_cast<int>(rng.below(un));
      const int v = static_cast<int>(rng.below(un));
      if (u == v && !self_loops) continue;
      return {u, v};
    }
  }
  if (!self_loops) {
    for (;;) {
      const int u = static_cast<int>(rng.below(un));
      const int v = static_cast<int>(rng.below(un));
      if (u == v) continue;
      return {std::min(u, v), std::max(u, v)};
    }
  }
  // index over pairs i <= j
  const std::uint64_t idx = rng.below(un * (un + 1) / 2);
  std::uint64_t j = static_cast<std::uint64_t>(
      (std::sqrt(8.0 * static_cast<double>(idx) + 1.0) - 1.0) / 2.0);
  while (j * (j + 1) / 2 > idx) --j;
  while ((j + 1) * (j + 2) / 2 <= idx) ++j;
  const std::uint64_t i = idx - j * (j + 1) / 2;
  return {static_cast<int>(i), static_cast<int>(j)};
}

// All slots of the policy, in canonical order.
inline std::vector<std::pair<int, int>> enumerate_slots(int n, bool directed,
                                                        bool self_loops) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    const int v0 = directed ? 0 : u;
    for (int v = v0; v < n; ++v) {
      if (u == v && !self_loops) continue;
      slots.emplace_back(u, v);
    }
  }
  return slots;
}

// Draws `count` distinct slots, in draw order. Rejection sampling in the
// sparse regime; above 90% occupancy a partial Fisher-Yates over the
// enumerated slot list keeps the cost bounded.
inline std::vector<std::pair<int, int>> sample_distinct_slots(
    Rng& rng, int n, bool directed, bool self_loops, std::uint64_t count) {
  const std::uint64_t total = slot_count(n, directed, self_loops);
  std::vector<std::pair<int, int>> picks;
  picks.reserve(count);
  if (count * 10 > total * 9) {
    auto slots = enumerate_slots(n, directed, self_loops);
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t j = k + rng.below(total - k);
      std::swap(slots[k], slots[j]);
      picks.push_back(slots[k]);
    }
    return picks;
  }
  std::unordered_set<std::uint64_t> used;
  used.reserve(count * 2);
  while (picks.size() < count) {
    const auto [u, v] = random_slot(rng, n, directed, self_loops);
    const std::uint64_t key =
        static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
    if (used.insert(key).second) picks.emplace_back(u, v);
  }
  return picks;
}

}  // namespace netcomplexity::detail
