#pragma once

#include "netcomplexity/network.hpp"

#include <cstdint>

namespace netcomplexity {

enum class GeneratorModel { erdos_renyi, preferential_attachment };

enum class WeightModel { unit, uniform01, normal_mean0 };

struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::erdos_renyi;
  int n = 1;
  std::uint64_t l_or_m = 0;  // link count for ER, out-links per node for PA
  bool directed = false;
  WeightModel weights = WeightModel::unit;
  std::uint64_t seed = 0;
  int seed_nodes = 0;  // PA only; 0 means m link-free seed nodes
};

/// G(n, l): exactly l distinct uniformly random slots, no self-loops.
Network erdos_renyi(const GeneratorSpec& spec);

/// Sequential attachment: after `seed_nodes` link-free seed nodes, each new
/// node emits min(m, existing) links toward distinct existing nodes picked
/// with probability proportional to degree + 1. Output is directed new->old;
/// weights are uniform on (0,1) unless the unit model is chosen.
Network preferential_attachment(const GeneratorSpec& spec);

/// Dispatch on spec.model; an ER spec with normal_mean0 weights produces the
/// sign-flipped normal-weight digraph.
Network generate(const GeneratorSpec& spec);

}  // namespace netcomplexity
