#include "netcomplexity/complexity.hpp"

#include "netcomplexity/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace netcomplexity {

int prefix_bits(int n, std::uint64_t slots) {
  if (n < 1) throw std::invalid_argument("prefix_bits: node count must be >= 1");
  return 2 * ceil_log2(static_cast<std::uint64_t>(n)) + ceil_log2(slots) + 1;
}

ComplexityReport complexity(const Network& net, bool ceil_variant,
                            const AutOptions& options) {
  const std::uint64_t slots = net.slot_count();
  const std::uint64_t l = net.link_count();
  ComplexityReport report;
  report.ceil_variant = ceil_variant;
  report.prefix_bits = prefix_bits(net.node_count(), slots);
  report.log2_omega_linklists =
      ceil_variant ? static_cast<double>(ceil_log2(binomial(slots, l)))
                   : log2_binomial(slots, l);
  report.log2_renumberings = renumbering_count_log2(net, options);
  report.total_bits =
      report.prefix_bits + report.log2_omega_linklists - report.log2_renumberings;
  return report;
}

ComplexityReport labelled_complexity(const Network& net) {
  const std::uint64_t slots = net.slot_count();
  const std::uint64_t l = net.link_count();
  ComplexityReport report;
  report.ceil_variant = true;
  report.labelled_variant = true;
  report.prefix_bits = prefix_bits(net.node_count(), slots);
  report.log2_omega_linklists = static_cast<double>(ceil_log2(binomial(slots, l)));
  report.log2_renumberings = 0.0;
  report.total_bits = report.prefix_bits + report.log2_omega_linklists;
  return report;
}

double weighted_complexity(const Network& net, bool ceil_variant,
                           const AutOptions& options) {
  if (net.link_count() == 0)
    throw std::invalid_argument("weighted_complexity: network has no links");
  const Network normalized = normalize_weights(net);

  // distinct thresholds strictly below 1; ties enter together
  std::vector<double> weights;
  weights.reserve(normalized.link_count());
  for (const Link& l : normalized.links()) weights.push_back(l.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  std::vector<double> thresholds{0.0};
  for (double w : weights)
    if (w < 1.0) thresholds.push_back(w);

  double total = 0.0;
  for (std::size_t j = 0; j < thresholds.size(); ++j) {
    const double next = (j + 1 < thresholds.size()) ? thresholds[j + 1] : 1.0;
    const double span = next - thresholds[j];
    if (span <= 0.0) continue;
    const Network partial = threshold_subnetwork(normalized, thresholds[j]);
    total += span * complexity(partial, ceil_variant, options).total_bits;
  }
  return total;
}

MAResult medium_articulation(const Network& net, LogBase base) {
  if (net.link_count() == 0)
    throw std::invalid_argument("medium_articulation: network has no links");
  const Network normalized = normalize_weights(net);
  const int n = normalized.node_count();

  // flow matrix entries: directed links as-is, undirected split half each way
  std::vector<std::pair<std::pair<int, int>, double>> flows;
  flows.reserve(2 * normalized.link_count());
  for (const Link& l : normalized.links()) {
    if (normalized.directed() || l.source == l.target) {
      flows.push_back({{l.source, l.target}, l.weight});
    } else {
      flows.push_back({{l.source, l.target}, l.weight / 2.0});
      flows.push_back({{l.target, l.source}, l.weight / 2.0});
    }
  }
  std::vector<double> row(n, 0.0), col(n, 0.0);
  for (const auto& [uv, w] : flows) {
    row[uv.first] += w;
    col[uv.second] += w;
  }

  const double scale = (base == LogBase::two) ? 1.0 / std::log(2.0) : 1.0;
  double info = 0.0;     // sum w log(w / (row col))
  double entropy = 0.0;  // -sum w log w
  double second = 0.0;   // sum w log(w^2 / (row col))
  for (const auto& [uv, w] : flows) {
    const double rc = row[uv.first] * col[uv.second];
    info += w * std::log(w / rc);
    entropy -= w * std::log(w);
    second += w * std::log(w * w / rc);
  }
  MAResult result;
  result.mutual_information = info * scale;
  result.entropy = entropy * scale;
  result.ma = (-info * scale) * (second * scale) + 0.0;  // no negative zero
  return result;
}

}  // namespace netcomplexity
