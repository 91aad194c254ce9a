#include "netcomplexity/automorphism.hpp"

#include "netcomplexity/rng.hpp"

#include "doctest.h"

#include <cmath>

using namespace netcomplexity;

namespace {

Network undirected_from_mask(int n, unsigned mask) {
  Network g(n, false, false);
  unsigned bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) g.add_link(i, j, 1.0);
  return g;
}

Network random_digraph(Rng& rng, int max_n) {
  const int n = 1 + int(rng.below(max_n));
  const bool loops = rng.below(2);
  Network g(n, true, loops);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && !loops) continue;
      if (rng.below(2)) g.add_link(i, j, 1.0);
    }
  return g;
}

Network relabel(const Network& g, const std::vector<int>& perm) {
  Network out(g.node_count(), g.directed(), g.allow_self_loops());
  for (const Link& l : g.links()) out.add_link(perm[l.source], perm[l.target], l.weight);
  return out;
}

}  // namespace

TEST_CASE("brute-force oracle on known groups") {
  // complete graph: every permutation preserves adjacency
  Network k4 = complement(Network(4, false, false));
  CHECK(aut_order_bruteforce(k4).order == 24);

  // one undirected link among 8 nodes: swap the endpoints, permute the rest
  Network s8(8, false, false);
  s8.add_link(0, 1, 1.0);
  CHECK(aut_order_bruteforce(s8).order == 1440);  // 2 * 6!

  // a single directed link is rigid
  Network d2(2, true, false);
  d2.add_link(0, 1, 1.0);
  CHECK(aut_order_bruteforce(d2).order == 1);

  CHECK_THROWS_AS(aut_order_bruteforce(Network(11, false, false)),
                  std::invalid_argument);
}

TEST_CASE("search engine on known groups") {
  CHECK(aut_order(Network(4, false, false)).order == 24);  // S4 on the empty graph

  Network path(3, false, false);
  path.add_link(0, 1, 1.0);
  path.add_link(1, 2, 1.0);
  CHECK(aut_order(path).order == 2);

  Network cycle(3, true, false);
  cycle.add_link(0, 1, 1.0);
  cycle.add_link(1, 2, 1.0);
  cycle.add_link(2, 0, 1.0);
  CHECK(aut_order(cycle).order == 3);

  // petersen graph: |Aut| = 120
  Network petersen(10, false, false);
  for (int i = 0; i < 5; ++i) {
    petersen.add_link(i, (i + 1) % 5, 1.0);
    petersen.add_link(i, i + 5, 1.0);
    petersen.add_link(i + 5, 5 + (i + 2) % 5, 1.0);
  }
  CHECK(aut_order(petersen).order == 120);
  CHECK(aut_order_bruteforce(petersen).order == 120);
}

TEST_CASE("engine equals brute force on every n=5 linklist") {
  for (unsigned mask = 0; mask < 1024; ++mask) {
    const Network g = undirected_from_mask(5, mask);
    CHECK(aut_order(g).order == aut_order_bruteforce(g).order);
  }
}

TEST_CASE("engine equals brute force on random digraphs") {
  Rng rng(4242);
  for (int t = 0; t < 200; ++t) {
    const Network g = random_digraph(rng, 7);
    CHECK(aut_order(g).order == aut_order_bruteforce(g).order);
  }
}

TEST_CASE("order is invariant under relabelling and complement") {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    const Network g = random_digraph(rng, 7);
    const int n = g.node_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    CHECK(aut_order(g).order == aut_order(relabel(g, perm)).order);
    CHECK(aut_order(g).order == aut_order(complement(g)).order);
  }
}

TEST_CASE("order divides n! exactly") {
  Rng rng(512);
  for (int t = 0; t < 60; ++t) {
    const Network g = random_digraph(rng, 7);
    const BigInt order = aut_order(g).order;
    CHECK(order >= 1);
    CHECK(factorial(unsigned(g.node_count())) % order == 0);
  }
}

TEST_CASE("renumbering counts") {
  CHECK(renumbering_count_log2(Network(8, false, false)) == 0.0);

  Network s8(8, false, false);
  s8.add_link(0, 1, 1.0);  // 8!/1440 = 28 relabellings
  CHECK(renumbering_count_log2(s8) ==
        doctest::Approx(std::log2(28.0)).epsilon(1e-12));

  Network cycle(3, true, false);
  cycle.add_link(0, 1, 1.0);
  cycle.add_link(1, 2, 1.0);
  cycle.add_link(2, 0, 1.0);
  CHECK(renumbering_count_log2(cycle) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("node budget raises a resource error, never a wrong answer") {
  Network g(12, false, false);
  for (int i = 0; i < 6; ++i) g.add_link(2 * i, 2 * i + 1, 1.0);  // six twin links
  AutOptions tight;
  tight.node_budget = 2;
  CHECK_THROWS_AS(aut_order(g, tight), ResourceLimitError);
  AutOptions loose;
  loose.node_budget = 1000000;
  CHECK(aut_order(g, loose).order == factorial(6) * 64);  // (2!^6) * 6!
}

TEST_CASE("repeated runs are deterministic") {
  Rng rng(31);
  const Network g = random_digraph(rng, 7);
  const AutResult a = aut_order(g);
  const AutResult b = aut_order(g);
  CHECK(a.order == b.order);
  CHECK(a.generators_found == b.generators_found);
  CHECK(a.nodes_searched == b.nodes_searched);
}
