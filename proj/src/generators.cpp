#include "netcomplexity/generators.hpp"

#include "netcomplexity/neutral_model.hpp"
#include "netcomplexity/rng.hpp"
#include "sampling.hpp"

#include <stdexcept>
#include <vector>

namespace netcomplexity {

namespace {

double draw_weight(Rng& rng, WeightModel model) {
  switch (model) {
    case WeightModel::unit:
      return 1.0;
    case WeightModel::uniform01:
      return rng.uniform01();
    default:
      throw std::invalid_argument("draw_weight: unsupported weight model here");
  }
}

}  // namespace

Network erdos_renyi(const GeneratorSpec& spec) {
  if (spec.weights == WeightModel::normal_mean0)
    return normal_weight_null(spec.n, spec.l_or_m, spec.seed);
  if (spec.l_or_m > slot_count(spec.n, spec.directed, false))
    throw std::invalid_argument("erdos_renyi: more links than slots");
  Rng rng(spec.seed);
  const auto slots =
      detail::sample_distinct_slots(rng, spec.n, spec.directed, false, spec.l_or_m);
  Network out(spec.n, spec.directed, false);
  for (const auto& [u, v] : slots) out.add_link(u, v, draw_weight(rng, spec.weights));
  return out;
}

Network preferential_attachment(const GeneratorSpec& spec) {
  const int n = spec.n;
  const auto m = static_cast<int>(spec.l_or_m);
  if (m < 1) throw std::invalid_argument("preferential_attachment: m must be >= 1");
  if (n <= m) throw std::invalid_argument("preferential_attachment: requires n > m");
  if (spec.weights == WeightModel::normal_mean0)
    throw std::invalid_argument("preferential_attachment: normal weights unsupported");
  const int seeds = spec.seed_nodes > 0 ? spec.seed_nodes : m;
  if (seeds < 1 || seeds >= n)
    throw std::invalid_argument("preferential_attachment: bad seed node count");

  Rng rng(spec.seed);
  Network out(n, true, false);
  std::vector<std::uint64_t> degree(n, 0);
  std::vector<int> picked;
  for (int j = seeds; j < n; ++j) {
    const int emit = std::min(m, j);
    picked.clear();
    // degree+1 smoothing keeps link-free nodes attachable; all picks for one
    // node are made against the state before its links are added
    std::uint64_t total = 0;
    for (int i = 0; i < j; ++i) total += degree[i] + 1;
    while (static_cast<int>(picked.size()) < emit) {
      std::uint64_t r = rng.below(total);
      int target = j - 1;
      for (int i = 0; i < j; ++i) {
        const std::uint64_t w = degree[i] + 1;
        if (r < w) {
          target = i;
          break;
        }
        r -= w;
      }
      bool duplicate = false;
      for (int p : picked) duplicate |= (p == target);
      if (!duplicate) picked.push_back(target);
    }
    for (int target : picked) {
      out.add_link(j, target, draw_weight(rng, spec.weights));
      ++degree[j];
      ++degree[target];
    }
  }
  return out;
}

Network generate(const GeneratorSpec& spec) {
  switch (spec.model) {
    case GeneratorModel::erdos_renyi:
      return erdos_renyi(spec);
    case GeneratorModel::preferential_attachment:
      return preferential_attachment(spec);
  }
  throw std::invalid_argument("generate: unknown model");
}

}  // namespace netcomplexity
