#pragma once

#include "netcomplexity/automorphism.hpp"
#include "netcomplexity/network.hpp"

#include <cstdint>
#include <vector>

namespace netcomplexity {

enum class ScoreMode {
  automatic,   // weighted when any weight differs from 1
  unweighted,  // plain structural complexity
  weighted,    // threshold-integral complexity
};

/// Headline complexity of a network under the resolved scoring mode.
double score_complexity(const Network& net, ScoreMode mode = ScoreMode::automatic,
                        const AutOptions& options = {});

/// Reattaches every link to a uniformly random unoccupied slot, all links
/// reassigned against an initially empty slot set. Node count, link count,
/// weight multiset, directedness and self-loop policy are preserved exactly;
/// parallel links never arise.
Network shuffle_links(const Network& net, std::uint64_t seed);

struct EnsembleStats {
  std::size_t samples = 0;
  std::vector<double> ln_c_values;  // by replica index
  double mean_ln_c = 0.0;
  double std_ln_c = 0.0;  // population standard deviation
  double geometric_mean_c = 0.0;
};

/// Scores `samples` link-shuffled replicas; replica k is seeded with
/// derive_seed(seed, k), so the ensemble is reproducible bit for bit.
EnsembleStats ensemble_stats(const Network& net, std::size_t samples,
                             std::uint64_t seed, ScoreMode mode = ScoreMode::automatic,
                             const AutOptions& options = {});

struct SignificanceReport {
  double c_real = 0.0;
  double surplus = 0.0;  // c_real - geometric mean of the ensemble
  double sigma = 0.0;    // +infinity when the ensemble is degenerate
};

SignificanceReport significance(const Network& net, const EnsembleStats& stats,
                                ScoreMode mode = ScoreMode::automatic,
                                const AutOptions& options = {});
SignificanceReport significance_value(double c_real, const EnsembleStats& stats);

/// Neutral weighted digraph: `links` distinct node pairs, weights |N(0,sigma)|,
/// a negative draw flipping the link direction (positive draws point from the
/// lower to the higher node index).
Network normal_weight_null(int n, std::uint64_t links, std::uint64_t seed,
                           double sigma = 1.0);

}  // namespace netcomplexity
