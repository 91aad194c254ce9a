#pragma once

#include <cstdint>
#include <vector>

namespace netcomplexity {

struct Link {
  int source = 0;
  int target = 0;
  double weight = 1.0;

  friend bool operator==(const Link&, const Link&) = default;
};

/// Number of distinct (source,target) slots available to a network with the
/// given policies: n(n-1)/2 undirected, n(n-1) directed, plus n when
/// self-loops are allowed.
std::uint64_t slot_count(int n, bool directed, bool allow_self_loops);

/// A simple graph with positively weighted links. Node identities are dense
/// 0-based integers; undirected links are stored with source < target.
/// Parallel links are rejected, never merged. Instances are immutable once
/// built and safe to share read-only across threads.
class Network {
 public:
  Network(int node_count, bool directed, bool allow_self_loops);

  int node_count() const { return n_; }
  bool directed() const { return directed_; }
  bool allow_self_loops() const { return allow_self_loops_; }
  std::uint64_t slot_count() const;
  std::size_t link_count() const { return links_.size(); }

  /// Links in insertion order.
  const std::vector<Link>& links() const { return links_; }
  std::vector<Link> sorted_links() const;

  void add_link(int u, int v, double weight);
  bool has_link(int u, int v) const;
  double link_weight(int u, int v) const;  // throws when the link is absent
  double total_weight() const;

  /// Structural equality: same node count, policies and link set with
  /// exactly equal weights. Link insertion order is ignored.
  bool operator==(const Network& other) const;

 private:
  std::uint64_t slot_key(int u, int v) const;

  int n_;
  bool directed_;
  bool allow_self_loops_;
  std::vector<Link> links_;
  std::vector<std::uint64_t> occupied_;  // sorted slot keys, for queries
};

/// Unweighted complement within the same slot universe; every complement
/// link gets weight 1.
Network complement(const Network& net);

/// Subnetwork keeping exactly the links with weight <= t; node count and
/// policies are retained.
Network threshold_subnetwork(const Network& net, double t);

/// Rescales weights to sum to 1. Throws on a network without links.
Network normalize_weights(const Network& net);

}  // namespace netcomplexity
