#pragma once

// Shared test utilities: seeded generators and the independent brute-force
// oracles the unit and acceptance suites check the library against.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "temperedkit/graphalg.hpp"
#include "temperedkit/poset.hpp"
#include "temperedkit/signature.hpp"

namespace testutil {

using namespace tempered;

inline int pair_bit_index(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Poset from strict upper-triangular bits (row-major, most significant
// first); bits must already be transitively closed.
inline Poset poset_from_bits(int n, OrderBits a) {
  const int total = n * (n - 1) / 2;
  std::vector<std::uint16_t> up(n);
  for (int i = 0; i < n; ++i) up[i] = static_cast<std::uint16_t>(1u << i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((a >> (total - 1 - pair_bit_index(n, i, j))) & 1) {
        up[i] |= static_cast<std::uint16_t>(1u << j);
      }
    }
  }
  return Poset::from_up_sets(n, std::move(up));
}

// Random poset on n points: random strict order on shuffled labels.
inline Poset random_poset(int n, std::mt19937_64& rng, double edge_prob = 0.4) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) pairs.emplace_back(order[i], order[j]);
    }
  }
  return Poset::from_cover_relations(n, pairs);
}

inline TemperedPoset random_tempered_poset(int n, std::mt19937_64& rng) {
  Poset p = random_poset(n, rng);
  std::vector<int> temp(n);
  std::bernoulli_distribution coin(0.5);
  for (int& t : temp) t = coin(rng) ? 1 : 0;
  return TemperedPoset(std::move(p), std::move(temp));
}

inline Poset relabel(const Poset& p, const std::vector<int>& perm) {
  const int n = p.size();
  std::vector<std::uint16_t> up(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.leq(i, j)) up[perm[i]] |= static_cast<std::uint16_t>(1u << perm[j]);
    }
  }
  return Poset::from_up_sets(n, std::move(up));
}

inline TemperedPoset relabel(const TemperedPoset& tp, const std::vector<int>& perm) {
  std::vector<int> temp(tp.temp.size());
  for (std::size_t i = 0; i < tp.temp.size(); ++i) temp[perm[i]] = tp.temp[i];
  return TemperedPoset(relabel(tp.poset, perm), std::move(temp));
}

// Brute-force isomorphism search over all bijections.
inline bool isomorphic(const TemperedPoset& x, const TemperedPoset& y) {
  if (x.poset.size() != y.poset.size()) return false;
  const int n = x.poset.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (x.temp[i] != y.temp[perm[i]]) ok = false;
      for (int j = 0; j < n && ok; ++j) {
        if (x.poset.leq(i, j) != y.poset.leq(perm[i], perm[j])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Random graph with multiplicities <= max_mult; resampled until it satisfies
// Condition (K) when required.
inline Graph random_graph(int max_vertices, std::mt19937_64& rng, bool require_k,
                          int max_mult = 3) {
  std::uniform_int_distribution<int> vertex_count(1, max_vertices);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::bernoulli_distribution has_edge(0.35);
  for (;;) {
    int n = vertex_count(rng);
    std::vector<std::vector<long long>> adj(n, std::vector<long long>(n, 0));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (has_edge(rng)) adj[u][v] = mult(rng);
      }
    }
    Graph g(n, std::move(adj));
    if (!require_k || condition_K(g).holds) return g;
  }
}

// Independent Condition (K) oracle. Each simple cycle is enumerated once
// from its smallest vertex, then credited to every vertex it passes through,
// since rotating a cycle bases it at each of its vertices.
inline std::vector<long long> cycle_counts_by_base(const Graph& g) {
  const int n = g.vertices();
  std::vector<long long> counts(n, 0);
  std::vector<int> path;
  std::vector<bool> used(n, false);

  auto enumerate = [&](auto&& self, int base, int current, long long mult) -> void {
    if (g.edge_count(current, base) > 0) {
      long long total = mult * g.edge_count(current, base);
      counts[base] += total;
      for (int v : path) counts[v] += total;
    }
    for (int w = base + 1; w < n; ++w) {
      if (used[w] || g.edge_count(current, w) == 0) continue;
      used[w] = true;
      path.push_back(w);
      self(self, base, w, mult * g.edge_count(current, w));
      path.pop_back();
      used[w] = false;
    }
  };
  for (int base = 0; base < n; ++base) {
    path.clear();
    std::fill(used.begin(), used.end(), false);
    enumerate(enumerate, base, base, 1);
  }
  return counts;
}

// Exhaustive hereditary-and-saturated filter over all vertex subsets.
inline std::vector<VertexSet> lattice_by_filtering(const Graph& g) {
  const int n = g.vertices();
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!((s >> v) & 1u)) continue;
      for (int w = 0; w < n && ok; ++w) {
        if (g.edge_count(v, w) > 0 && !((s >> w) & 1u)) ok = false;
      }
    }
    for (int v = 0; v < n && ok; ++v) {
      if (((s >> v) & 1u) || !g.is_regular(v)) continue;
      bool all_in = true;
      for (int w = 0; w < n && all_in; ++w) {
        if (g.edge_count(v, w) > 0 && !((s >> w) & 1u)) all_in = false;
      }
      if (all_in) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Graph whose tempered primitive ideal space is the given poset: one vertex
// per point, a double loop for temperature 1, a sink for temperature 0, and
// an edge along every cover. A finite graph forces cold points to be
// maximal (an acyclic stratum needs a true sink, and saturation would
// otherwise swallow it), so other inputs are rejected.
inline Graph realize(const TemperedPoset& tp) {
  const int n = tp.poset.size();
  for (int x = 0; x < n; ++x) {
    if (tp.temp[x] == 0 && (tp.poset.up_set(x) & ~(1u << x)) != 0) {
      throw std::invalid_argument("cold points must be maximal to realize the "
                                  "space with a finite graph");
    }
  }
  std::vector<std::vector<long long>> adj(n, std::vector<long long>(n, 0));
  for (int x = 0; x < n; ++x) {
    if (tp.temp[x] == 1) adj[x][x] = 2;
  }
  for (auto [x, y] : transitive_reduction(tp.poset)) adj[x][y] = 1;
  return Graph(n, std::move(adj));
}

}  // namespace testutil
