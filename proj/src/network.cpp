#include "netcomplexity/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netcomplexity {

std::uint64_t slot_count(int n, bool directed, bool allow_self_loops) {
  if (n < 1) throw std::invalid_argument("slot_count: node count must be >= 1");
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t pairs = directed ? un * (un - 1) : un * (un - 1) / 2;
  if (allow_self_loops) pairs += un;
  return pairs;
}

Network::Network(int node_count, bool directed, bool allow_self_loops)
    : n_(node_count), directed_(directed), allow_self_loops_(allow_self_loops) {
  if (node_count < 1) throw std::invalid_argument("Network: node count must be >= 1");
}

std::uint64_t Network::slot_count() const {
  return netcomplexity::slot_count(n_, directed_, allow_self_loops_);
}

std::uint64_t Network::slot_key(int u, int v) const {
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) +
         static_cast<std::uint64_t>(v);
}

void Network::add_link(int u, int v, double weight) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("add_link: node index out of range");
  if (u == v && !allow_self_loops_)
    throw std::invalid_argument("add_link: self-loops are not allowed on this network");
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw std::invalid_argument("add_link: weight must be a positive finite real");
  if (!directed_ && u > v) std::swap(u, v);
  const std::uint64_t key = slot_key(u, v);
  const auto it = std::lower_bound(occupied_.begin(), occupied_.end(), key);
  if (it != occupied_.end() && *it == key)
    throw std::invalid_argument("add_link: duplicate link (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  occupied_.insert(it, key);
  links_.push_back(Link{u, v, weight});
}

bool Network::has_link(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  if (!directed_ && u > v) std::swap(u, v);
  return std::binary_search(occupied_.begin(), occupied_.end(), slot_key(u, v));
}

double Network::link_weight(int u, int v) const {
  if (!directed_ && u > v) std::swap(u, v);
  for (const Link& l : links_)
    if (l.source == u && l.target == v) return l.weight;
  throw std::invalid_argument("link_weight: no such link");
}

double Network::total_weight() const {
  double sum = 0.0;
  for (const Link& l : links_) sum += l.weight;
  return sum;
}

std::vector<Link> Network::sorted_links() const {
  std::vector<Link> out = links_;
  std::sort(out.begin(), out.end(), [](const Link& a, const Link& b) {
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  });
  return out;
}

bool Network::operator==(const Network& other) const {
  return n_ == other.n_ && directed_ == other.directed_ &&
         allow_self_loops_ == other.allow_self_loops_ &&
         sorted_links() == other.sorted_links();
}

Network complement(const Network& net) {
  const int n = net.node_count();
  Network out(n, net.directed(), net.allow_self_loops());
  for (int u = 0; u < n; ++u) {
    const int v0 = net.directed() ? 0 : u;
    for (int v = v0; v < n; ++v) {
      if (u == v && !net.allow_self_loops()) continue;
      if (!net.has_link(u, v)) out.add_link(u, v, 1.0);
    }
  }
  return out;
}

Network threshold_subnetwork(const Network& net, double t) {
  Network out(net.node_count(), net.directed(), net.allow_self_loops());
  for (const Link& l : net.links())
    if (l.weight <= t) out.add_link(l.source, l.target, l.weight);
  return out;
}

Network normalize_weights(const Network& net) {
  if (net.link_count() == 0)
    throw std::invalid_argument("normalize_weights: network has no links");
  const double total = net.total_weight();
  Network out(net.node_count(), net.directed(), net.allow_self_loops());
  for (const Link& l : net.links()) out.add_link(l.source, l.target, l.weight / total);
  return out;
}

}  // namespace netcomplexity
