#include "netcomplexity/neutral_model.hpp"

#include "netcomplexity/complexity.hpp"
#include "netcomplexity/rng.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace netcomplexity {

namespace {

ScoreMode resolve(const Network& net, ScoreMode mode) {
  if (mode != ScoreMode::automatic) return mode;
  for (const Link& l : net.links())
    if (l.weight != 1.0) return ScoreMode::weighted;
  return ScoreMode::unweighted;
}

}  // namespace

double score_complexity(const Network& net, ScoreMode mode, const AutOptions& options) {
  switch (resolve(net, mode)) {
    case ScoreMode::weighted:
      return weighted_complexity(net, false, options);
    default:
      return complexity(net, false, options).total_bits;
  }
}

Network shuffle_links(const Network& net, std::uint64_t seed) {
  const std::uint64_t l = net.link_count();
  if (l > net.slot_count())
    throw std::invalid_argument("shuffle_links: more links than slots");
  Rng rng(seed);
  const auto slots = detail::sample_distinct_slots(
      rng, net.node_count(), net.directed(), net.allow_self_loops(), l);
  Network out(net.node_count(), net.directed(), net.allow_self_loops());
  std::size_t k = 0;
  for (const Link& link : net.links()) {
    out.add_link(slots[k].first, slots[k].second, link.weight);
    ++k;
  }
  return out;
}

EnsembleStats ensemble_stats(const Network& net, std::size_t samples,
                             std::uint64_t seed, ScoreMode mode,
                             const AutOptions& options) {
  if (samples < 2)
    throw std::invalid_argument("ensemble_stats: at least 2 samples required");
  const ScoreMode resolved = resolve(net, mode);
  EnsembleStats stats;
  stats.samples = samples;
  stats.ln_c_values.resize(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    try {
      const Network replica = shuffle_links(net, derive_seed(seed, k));
      stats.ln_c_values[k] = std::log(score_complexity(replica, resolved, options));
    } catch (const ResourceLimitError& e) {
      throw ResourceLimitError("replica " + std::to_string(k) + " of " +
                               std::to_string(samples) + " (" +
                               std::to_string(k) + " scored): " + e.what());
    }
  }
  const auto [mn, mx] =
      std::minmax_element(stats.ln_c_values.begin(), stats.ln_c_values.end());
  if (*mn == *mx) {  // degenerate ensemble: exactly zero spread
    stats.mean_ln_c = *mn;
    stats.std_ln_c = 0.0;
  } else {
    double sum = 0.0;
    for (double v : stats.ln_c_values) sum += v;
    stats.mean_ln_c = sum / static_cast<double>(samples);
    double ss = 0.0;
    for (double v : stats.ln_c_values)
      ss += (v - stats.mean_ln_c) * (v - stats.mean_ln_c);
    stats.std_ln_c = std::sqrt(ss / static_cast<double>(samples));
  }
  stats.geometric_mean_c = std::exp(stats.mean_ln_c);
  return stats;
}

SignificanceReport significance_value(double c_real, const EnsembleStats& stats) {
  SignificanceReport report;
  report.c_real = c_real;
  report.surplus = c_real - stats.geometric_mean_c;
  report.sigma = stats.std_ln_c == 0.0
                     ? std::numeric_limits<double>::infinity()
                     : std::abs(std::log(c_real) - stats.mean_ln_c) / stats.std_ln_c;
  return report;
}

SignificanceReport significance(const Network& net, const EnsembleStats& stats,
                                ScoreMode mode, const AutOptions& options) {
  return significance_value(score_complexity(net, mode, options), stats);
}

Network normal_weight_null(int n, std::uint64_t links, std::uint64_t seed,
                           double sigma) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("normal_weight_null: sigma must be positive");
  if (links > slot_count(n, false, false))
    throw std::invalid_argument("normal_weight_null: more links than node pairs");
  Rng rng(seed);
  const auto pairs = detail::sample_distinct_slots(rng, n, false, false, links);
  Network out(n, true, false);
  for (const auto& [a, b] : pairs) {
    double x = 0.0;
    while (x == 0.0) x = sigma * rng.normal();
    if (x > 0.0)
      out.add_link(a, b, x);
    else
      out.add_link(b, a, -x);
  }
  return out;
}

}  // namespace netcomplexity
