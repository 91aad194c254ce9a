#include "netcomplexity/generators.hpp"

#include "netcomplexity/rng.hpp"

#include "doctest.h"

#include <algorithm>
#include <vector>

using namespace netcomplexity;

namespace {

GeneratorSpec er_spec(int n, std::uint64_t l, bool directed, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.model = GeneratorModel::erdos_renyi;
  spec.n = n;
  spec.l_or_m = l;
  spec.directed = directed;
  spec.seed = seed;
  return spec;
}

GeneratorSpec pa_spec(int n, std::uint64_t m, std::uint64_t seed, int seed_nodes = 0) {
  GeneratorSpec spec;
  spec.model = GeneratorModel::preferential_attachment;
  spec.n = n;
  spec.l_or_m = m;
  spec.seed = seed;
  spec.seed_nodes = seed_nodes;
  spec.weights = WeightModel::uniform01;
  return spec;
}

int max_total_degree(const Network& g) {
  std::vector<int> deg(g.node_count(), 0);
  for (const Link& l : g.links()) {
    ++deg[l.source];
    ++deg[l.target];
  }
  return *std::max_element(deg.begin(), deg.end());
}

}  // namespace

TEST_CASE("erdos-renyi endpoints") {
  CHECK(erdos_renyi(er_spec(8, 28, false, 1)) ==
        complement(Network(8, false, false)));
  CHECK(erdos_renyi(er_spec(8, 0, false, 1)).link_count() == 0);
  CHECK_THROWS_AS(erdos_renyi(er_spec(8, 29, false, 1)), std::invalid_argument);
}

TEST_CASE("erdos-renyi draws exactly l clean slots") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Network g = erdos_renyi(er_spec(15, 40, true, seed));
    CHECK(g.link_count() == 40);
    for (const Link& l : g.links()) CHECK(l.source != l.target);
  }
  CHECK(erdos_renyi(er_spec(15, 40, true, 3)) == erdos_renyi(er_spec(15, 40, true, 3)));
}

TEST_CASE("preferential attachment link counts") {
  const Network pa1 = preferential_attachment(pa_spec(100, 1, 9));
  CHECK(pa1.link_count() == 99);
  CHECK(pa1.directed());

  // three seed nodes, three links per newcomer: 97 * 3
  const Network pa3 = preferential_attachment(pa_spec(100, 3, 9, 3));
  CHECK(pa3.link_count() == 291);

  CHECK_THROWS_AS(preferential_attachment(pa_spec(3, 3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(preferential_attachment(pa_spec(5, 0, 1)), std::invalid_argument);
}

TEST_CASE("m=1 attachment builds a forest hanging from node 0") {
  const Network g = preferential_attachment(pa_spec(60, 1, 31));
  std::vector<int> outdeg(60, 0);
  for (const Link& l : g.links()) {
    CHECK(l.source > l.target);  // newcomers point at older nodes
    ++outdeg[l.source];
  }
  CHECK(outdeg[0] == 0);
  for (int v = 1; v < 60; ++v) CHECK(outdeg[v] == 1);
  for (const Link& l : g.links()) {
    CHECK(l.weight > 0.0);
    CHECK(l.weight <= 1.0);
  }
}

TEST_CASE("attachment produces heavier tails than matched uniform graphs") {
  int pa_wins = 0;
  for (std::uint64_t run = 0; run < 100; ++run) {
    const int pa_max = max_total_degree(preferential_attachment(pa_spec(1000, 1, run)));
    const int er_max = max_total_degree(erdos_renyi(er_spec(1000, 999, true, run)));
    if (pa_max > er_max) ++pa_wins;
  }
  CHECK(pa_wins >= 95);
}

TEST_CASE("generate dispatches on the model") {
  CHECK(generate(er_spec(6, 5, false, 2)) == erdos_renyi(er_spec(6, 5, false, 2)));
  CHECK(generate(pa_spec(10, 2, 4)) == preferential_attachment(pa_spec(10, 2, 4)));

  GeneratorSpec normal = er_spec(10, 12, false, 6);
  normal.weights = WeightModel::normal_mean0;
  const Network g = generate(normal);
  CHECK(g.link_count() == 12);
  CHECK(g.directed());
}
