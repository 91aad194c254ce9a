#include "netcomplexity/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace netcomplexity {

namespace {

// Unweighted adjacency view. Self-loops are kept out of the adjacency lists
// and act as a vertex colour; the bit matrix retains them for verification.
struct Digraph {
  int n = 0;
  std::size_t links = 0;
  std::vector<std::vector<int>> out, in;
  std::vector<std::uint8_t> loop;
  std::vector<std::uint64_t> bits;

  explicit Digraph(int nodes)
      : n(nodes), out(nodes), in(nodes), loop(nodes, 0),
        bits((static_cast<std::size_t>(nodes) * nodes + 63) / 64, 0) {}

  void set_bit(int u, int v) {
    const std::size_t idx = static_cast<std::size_t>(u) * n + v;
    bits[idx >> 6] |= std::uint64_t(1) << (idx & 63);
  }
  bool edge(int u, int v) const {
    const std::size_t idx = static_cast<std::size_t>(u) * n + v;
    return (bits[idx >> 6] >> (idx & 63)) & 1;
  }
  void add(int u, int v, bool directed) {
    ++links;
    if (u == v) {
      loop[u] = 1;
      set_bit(u, u);
      return;
    }
    out[u].push_back(v);
    in[v].push_back(u);
    set_bit(u, v);
    if (!directed) {
      out[v].push_back(u);
      in[u].push_back(v);
      set_bit(v, u);
    }
  }
};

// Ordered partition of the vertices, stored cell-contiguously. cell_len is
// valid at cell start indices only.
struct Partition {
  std::vector<int> order, pos, cell_start, cell_len;
  int cells = 0;

  explicit Partition(const Digraph& g) {
    const int n = g.n;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    // vertices without a self-loop first
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.loop[a] < g.loop[b]; });
    pos.assign(n, 0);
    cell_start.assign(n, 0);
    cell_len.assign(n, 0);
    int s = 0;
    for (int i = 0; i < n; ++i) {
      pos[order[i]] = i;
      if (i > 0 && g.loop[order[i]] != g.loop[order[i - 1]]) s = i;
      if (s == i) ++cells;
      cell_start[order[i]] = s;
      ++cell_len[s];
    }
  }

  bool discrete() const { return cells == static_cast<int>(order.size()); }

  int first_nonsingleton() const {
    const int n = static_cast<int>(order.size());
    for (int s = 0; s < n;) {
      if (cell_len[s] > 1) return s;
      s += cell_len[s];
    }
    return -1;
  }

  // Splits {v} out of its cell, placed before the remainder.
  void individualize(int v) {
    const int s = cell_start[v];
    const int len = cell_len[s];
    if (len == 1) return;
    const int pv = pos[v];
    const int u = order[s];
    order[s] = v;
    order[pv] = u;
    pos[v] = s;
    pos[u] = pv;
    cell_len[s] = 1;
    const int rs = s + 1;
    cell_len[rs] = len - 1;
    for (int k = rs; k < s + len; ++k) cell_start[order[k]] = rs;
    ++cells;
  }
};

// Refines to the coarsest equitable partition. Every ordering decision is
// positional or count-based, never label-based, so two runs started from
// structurally matching states split identically cell for cell.
class Refiner {
 public:
  explicit Refiner(const Digraph& g)
      : g_(g), cnt_to_(g.n, 0), cnt_from_(g.n, 0), vstamp_(g.n, 0) {}

  void refine(Partition& p) {
    const int n = g_.n;
    bool changed = true;
    while (changed && !p.discrete()) {
      changed = false;
      for (int ws = 0; ws < n;) {
        const int wlen = p.cell_len[ws];
        ++round_;
        touched_.clear();
        for (int k = ws; k < ws + wlen; ++k) {
          const int w = p.order[k];
          for (int x : g_.in[w]) {
            touch(x);
            ++cnt_to_[x];
          }
          for (int x : g_.out[w]) {
            touch(x);
            ++cnt_from_[x];
          }
        }
        affected_.clear();
        for (int x : touched_) {
          const int cs = p.cell_start[x];
          if (p.cell_len[cs] > 1) affected_.push_back(cs);
        }
        std::sort(affected_.begin(), affected_.end());
        affected_.erase(std::unique(affected_.begin(), affected_.end()),
                        affected_.end());
        for (int cs : affected_) changed |= split(p, cs);
        ws += wlen;
      }
    }
  }

 private:
  void touch(int x) {
    if (vstamp_[x] != round_) {
      vstamp_[x] = round_;
      cnt_to_[x] = 0;
      cnt_from_[x] = 0;
      touched_.push_back(x);
    }
  }

  bool split(Partition& p, int s) {
    const int len = p.cell_len[s];
    scratch_.clear();
    for (int k = s; k < s + len; ++k) {
      const int v = p.order[k];
      const bool t = vstamp_[v] == round_;
      scratch_.emplace_back(t ? cnt_to_[v] : 0, t ? cnt_from_[v] : 0, v);
    }
    std::stable_sort(scratch_.begin(), scratch_.end(),
                     [](const auto& a, const auto& b) {
                       if (std::get<0>(a) != std::get<0>(b))
                         return std::get<0>(a) < std::get<0>(b);
                       return std::get<1>(a) < std::get<1>(b);
                     });
    bool any = false;
    int sub = s;
    for (int k = 0; k < len; ++k) {
      const int v = std::get<2>(scratch_[k]);
      if (k > 0 && (std::get<0>(scratch_[k]) != std::get<0>(scratch_[k - 1]) ||
                    std::get<1>(scratch_[k]) != std::get<1>(scratch_[k - 1]))) {
        p.cell_len[sub] = s + k - sub;
        sub = s + k;
        ++p.cells;
        any = true;
      }
      p.order[s + k] = v;
      p.pos[v] = s + k;
      p.cell_start[v] = sub;
    }
    p.cell_len[sub] = s + len - sub;
    return any;
  }

  const Digraph& g_;
  std::vector<int> cnt_to_, cnt_from_;
  std::vector<long> vstamp_;
  std::vector<int> touched_, affected_;
  std::vector<std::tuple<int, int, int>> scratch_;
  long round_ = 0;
};

// Search-node accounting shared across every search a single aut_order
// call performs.
struct Budget {
  std::uint64_t limit = 0;  // 0 = unlimited
  std::uint64_t used = 0;

  void tick() {
    ++used;
    if (limit && used > limit)
      throw ResourceLimitError("automorphism search: node budget exceeded");
  }
};

// Backtracking search for one structure-preserving bijection gp -> gq
// extending the individualizations already applied to P and Q.
class PairSearcher {
 public:
  PairSearcher(const Digraph& gp, const Digraph& gq, Budget& budget)
      : gp_(gp), gq_(gq), refp_(gp), refq_(gq), budget_(budget) {}

  std::optional<std::vector<int>> search(const Partition& p, const Partition& q) {
    budget_.tick();
    if (!same_shape(p, q)) return std::nullopt;
    const int s = p.first_nonsingleton();
    if (s < 0) return verify_leaf(p, q);
    const int len = p.cell_len[s];
    int x = p.order[s];
    for (int k = s + 1; k < s + len; ++k) x = std::min(x, p.order[k]);
    std::vector<int> cand(q.order.begin() + s, q.order.begin() + s + len);
    std::sort(cand.begin(), cand.end());
    // when searching within one graph, extending the identity first tends to
    // succeed immediately
    const auto self = std::find(cand.begin(), cand.end(), x);
    if (&gp_ == &gq_ && self != cand.end())
      std::rotate(cand.begin(), self, self + 1);
    for (int y : cand) {
      Partition pc = p;
      pc.individualize(x);
      refp_.refine(pc);
      Partition qc = q;
      qc.individualize(y);
      refq_.refine(qc);
      if (auto r = search(pc, qc)) return r;
    }
    return std::nullopt;
  }

  Refiner& refiner_p() { return refp_; }
  Refiner& refiner_q() { return refq_; }

 private:
  bool same_shape(const Partition& p, const Partition& q) const {
    const int n = gp_.n;
    for (int s = 0; s < n;) {
      if (p.cell_len[s] != q.cell_len[s]) return false;
      s += p.cell_len[s];
    }
    return true;
  }

  std::optional<std::vector<int>> verify_leaf(const Partition& p, const Partition& q) const {
    const int n = gp_.n;
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[p.order[i]] = q.order[i];
    for (int u = 0; u < n; ++u) {
      if (gp_.loop[u] != gq_.loop[map[u]]) return std::nullopt;
      for (int v : gp_.out[u])
        if (!gq_.edge(map[u], map[v])) return std::nullopt;
    }
    return map;
  }

  const Digraph& gp_;
  const Digraph& gq_;
  Refiner refp_, refq_;
  Budget& budget_;
};

struct CoreResult {
  BigInt order = 1;
  int generators = 0;
};

// |Aut| of one connected structure by an orbit-stabilizer tower: at each
// level the orbit of the lowest vertex of the first non-singleton cell is
// determined exactly (membership decided by search), then that vertex is
// fixed and the stabilizer handled recursively.
CoreResult aut_connected(const Digraph& g, Budget& budget) {
  CoreResult res;
  PairSearcher searcher(g, g, budget);
  Partition r(g);
  searcher.refiner_p().refine(r);
  std::vector<std::vector<int>> pool;  // every automorphism discovered
  std::vector<int> fixed;
  std::vector<char> in_orbit(g.n, 0);

  const auto grow_orbit = [&](int v) {
    std::fill(in_orbit.begin(), in_orbit.end(), 0);
    std::vector<const std::vector<int>*> usable;
    for (const auto& gen : pool) {
      bool ok = true;
      for (int f : fixed)
        if (gen[f] != f) {
          ok = false;
          break;
        }
      if (ok) usable.push_back(&gen);
    }
    std::vector<int> queue{v};
    in_orbit[v] = 1;
    while (!queue.empty()) {
      const int w = queue.back();
      queue.pop_back();
      for (const auto* gen : usable) {
        const int w2 = (*gen)[w];
        if (!in_orbit[w2]) {
          in_orbit[w2] = 1;
          queue.push_back(w2);
        }
      }
    }
  };

  while (!r.discrete()) {
    const int s = r.first_nonsingleton();
    const int len = r.cell_len[s];
    std::vector<int> cell(r.order.begin() + s, r.order.begin() + s + len);
    std::sort(cell.begin(), cell.end());
    const int v = cell[0];
    grow_orbit(v);
    for (int i = 1; i < len; ++i) {
      const int u = cell[i];
      if (in_orbit[u]) continue;
      Partition p = r;
      p.individualize(v);
      searcher.refiner_p().refine(p);
      Partition q = r;
      q.individualize(u);
      searcher.refiner_q().refine(q);
      if (auto found = searcher.search(p, q)) {
        pool.push_back(std::move(*found));
        grow_orbit(v);
      }
    }
    int orbit_size = 0;
    for (int u : cell) orbit_size += in_orbit[u];
    res.order *= orbit_size;
    fixed.push_back(v);
    r.individualize(v);
    searcher.refiner_p().refine(r);
  }
  res.generators = static_cast<int>(pool.size());
  return res;
}

// One isomorphism test between two structures of equal invariants.
bool isomorphic(const Digraph& a, const Digraph& b, Budget& budget) {
  if (a.n != b.n || a.links != b.links) return false;
  PairSearcher searcher(a, b, budget);
  Partition p(a);
  searcher.refiner_p().refine(p);
  Partition q(b);
  searcher.refiner_q().refine(q);
  return searcher.search(p, q).has_value();
}

Digraph digraph_of(const Network& net) {
  Digraph g(net.node_count());
  for (const Link& l : net.links()) g.add(l.source, l.target, net.directed());
  return g;
}

// Induced substructure on the listed vertices (relabelled 0..k-1).
Digraph induce(const Digraph& g, const std::vector<int>& vertices, bool directed) {
  Digraph sub(static_cast<int>(vertices.size()));
  std::vector<int> local(g.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  for (int v : vertices) {
    if (g.loop[v]) sub.add(local[v], local[v], directed);
    for (int w : g.out[v]) {
      if (!directed && local[w] < local[v]) continue;  // each undirected link once
      sub.add(local[v], local[w], directed);
    }
  }
  return sub;
}

// Label-free bucket key: (n, links, loops, sorted degree signature).
using ComponentKey = std::tuple<int, std::size_t, int, std::vector<std::pair<int, int>>>;

ComponentKey key_of(const Digraph& g) {
  std::vector<std::pair<int, int>> degrees(g.n);
  int loops = 0;
  for (int v = 0; v < g.n; ++v) {
    degrees[v] = {static_cast<int>(g.in[v].size()), static_cast<int>(g.out[v].size())};
    loops += g.loop[v];
  }
  std::sort(degrees.begin(), degrees.end());
  return {g.n, g.links, loops, std::move(degrees)};
}

}  // namespace

AutResult aut_order(const Network& net, const AutOptions& options) {
  const int n = net.node_count();
  AutResult result;
  Budget budget{options.node_budget, 0};

  // A structure and its complement share the automorphism group; work on the
  // sparser of the two.
  const bool use_complement = 2 * net.link_count() > net.slot_count();
  const Network base = use_complement ? complement(net) : net;
  const Digraph g = digraph_of(base);

  // isolated vertices are freely interchangeable
  std::vector<int> component(n, -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> members;
  for (int v = 0; v < n; ++v) {
    if (component[v] >= 0 || (g.out[v].empty() && g.in[v].empty() && !g.loop[v]))
      continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    component[v] = c;
    stack.assign(1, v);
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      members[c].push_back(w);
      for (const auto* adj : {&g.out[w], &g.in[w]})
        for (int x : *adj)
          if (component[x] < 0) {
            component[x] = c;
            stack.push_back(x);
          }
    }
  }
  int isolated = 0;
  for (int v = 0; v < n; ++v)
    if (component[v] < 0) ++isolated;
  result.order = factorial(static_cast<unsigned>(isolated));

  // group components into isomorphism classes; |Aut| of m copies of a
  // structure C is |Aut(C)|^m * m!
  std::map<ComponentKey, std::vector<std::pair<Digraph, unsigned>>> classes;
  for (auto& verts : members) {
    std::sort(verts.begin(), verts.end());
    Digraph sub = induce(g, verts, base.directed());
    auto& bucket = classes[key_of(sub)];
    bool matched = false;
    for (auto& [rep, count] : bucket) {
      if (isomorphic(rep, sub, budget)) {
        ++count;
        matched = true;
        break;
      }
    }
    if (!matched) bucket.emplace_back(std::move(sub), 1);
  }
  for (const auto& [key, bucket] : classes) {
    for (const auto& [rep, count] : bucket) {
      const CoreResult core = aut_connected(rep, budget);
      result.generators_found += core.generators;
      result.order *= boost::multiprecision::pow(core.order, count);
      result.order *= factorial(count);
    }
  }
  result.nodes_searched = budget.used;
  return result;
}

AutResult aut_order_bruteforce(const Network& net) {
  const int n = net.node_count();
  if (n > 10)
    throw std::invalid_argument("aut_order_bruteforce: capped at n <= 10");
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (const Link& l : net.links()) {
    adj[static_cast<std::size_t>(l.source) * n + l.target] = 1;
    if (!net.directed()) adj[static_cast<std::size_t>(l.target) * n + l.source] = 1;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  std::uint64_t tried = 0;
  do {
    ++tried;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n; ++v)
        if (adj[static_cast<std::size_t>(u) * n + v] &&
            !adj[static_cast<std::size_t>(perm[u]) * n + perm[v]]) {
          ok = false;
          break;
        }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  AutResult res;
  res.order = count;
  res.nodes_searched = tried;
  return res;
}

double renumbering_count_log2(const Network& net, const AutOptions& options) {
  const AutResult aut = aut_order(net, options);
  const BigInt all = factorial(static_cast<unsigned>(net.node_count()));
  const BigInt renumberings = all / aut.order;
  if (renumberings * aut.order != all)
    throw std::logic_error("renumbering_count_log2: |Aut| does not divide n!");
  return log2_exact(renumberings);
}

}  // namespace netcomplexity
