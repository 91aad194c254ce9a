#pragma once

#include "netcomplexity/automorphism.hpp"
#include "netcomplexity/network.hpp"

#include <cstdint>

namespace netcomplexity {

struct ComplexityReport {
  int prefix_bits = 0;
  double log2_omega_linklists = 0.0;  // payload: log2 C(L, l)
  double log2_renumberings = 0.0;     // log2(n!/|Aut|)
  double total_bits = 0.0;
  bool ceil_variant = false;
  bool labelled_variant = false;
};

/// Self-delimiting header length: 2*ceil(log2 n) + ceil(log2 L) + 1 bits,
/// with ceil(log2 x) taken as 0 for x <= 1.
int prefix_bits(int n, std::uint64_t slots);

/// Information content of the unweighted structure:
/// prefix + log2 C(L, l) - log2(n!/|Aut|). The payload term is left real
/// valued unless ceil_variant asks for a bit-exact encoding length.
ComplexityReport complexity(const Network& net, bool ceil_variant = false,
                            const AutOptions& options = {});

/// Labelled-network variant: prefix + ceil(log2 C(L, l)), no symmetry
/// subtraction. Uses the network's own slot policy (build the network
/// directed with self-loops for the L = n^2 form).
ComplexityReport labelled_complexity(const Network& net);

/// Threshold integral of partial-network complexities over normalized
/// weights: sum over distinct thresholds t_j (with t_0 = 0, t_end = 1) of
/// (t_{j+1} - t_j) * C(links with weight <= t_j), node count held fixed.
double weighted_complexity(const Network& net, bool ceil_variant = false,
                           const AutOptions& options = {});

enum class LogBase { two, e };

struct MAResult {
  double mutual_information = 0.0;  // I
  double entropy = 0.0;             // joint flow entropy H
  double ma = 0.0;                  // product of the two published factors
};

/// Medium articulation over normalized flow weights. The published product
/// equals I*(H-I); both factors are evaluated literally so that identity is
/// an independent cross-check. Undirected links contribute half their weight
/// in each direction.
MAResult medium_articulation(const Network& net, LogBase base = LogBase::two);

}  // namespace netcomplexity
