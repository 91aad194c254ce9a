#pragma once

#include "netcomplexity/network.hpp"
#include "netcomplexity/numeric.hpp"

#include <cstdint>
#include <stdexcept>

namespace netcomplexity {

struct AutResult {
  BigInt order = 1;          // exact |Aut|
  int generators_found = 0;  // diagnostics
  std::uint64_t nodes_searched = 0;
};

/// Raised when an explicit search budget runs out. The engine never returns
/// an approximate order.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AutOptions {
  std::uint64_t node_budget = 0;  // search-tree nodes; 0 means unlimited
};

/// Exact order of the automorphism group of the unweighted structure
/// (weights ignored, direction and self-loop pattern respected).
/// Equitable partition refinement with individualization backtracking;
/// the group order is assembled from an orbit-stabilizer tower, with
/// isolated vertices and repeated isomorphic components factored out.
AutResult aut_order(const Network& net, const AutOptions& options = {});

/// Validation oracle: counts permutations preserving the adjacency relation
/// by full enumeration. Hard-capped at n <= 10.
AutResult aut_order_bruteforce(const Network& net);

/// log2(n! / |Aut|), the number of bits of labelling freedom; always >= 0.
double renumbering_count_log2(const Network& net, const AutOptions& options = {});

}  // namespace netcomplexity
