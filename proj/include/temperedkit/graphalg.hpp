#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "temperedkit/intlin.hpp"
#include "temperedkit/poset.hpp"
#include "temperedkit/signature.hpp"

namespace tempered {

// Vertex subset of a graph as a bitmask; bit v stands for vertex v (0-based).
using VertexSet = std::uint32_t;

// Finite directed multigraph through its edge-count matrix.
// adj[v][w] = number of edges v -> w.
class Graph {
 public:
  static constexpr int kMaxVertices = 20;

  Graph(int n_vertices, std::vector<std::vector<long long>> adj);
  static Graph from_edges(int n_vertices,
                          const std::vector<std::tuple<int, int, long long>>& edges);

  int vertices() const { return n_; }
  long long edge_count(int v, int w) const { return adj_[v][w]; }
  const std::vector<std::vector<long long>>& adjacency() const { return adj_; }

  // v emits at least one edge (so it is regular; finite graphs only).
  bool is_regular(int v) const;
  bool is_sink(int v) const { return !is_regular(v); }
  VertexSet all_vertices() const { return static_cast<VertexSet>((1u << n_) - 1u); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<long long>> adj_;
};

// Smallest superset of S closed under taking edge targets and saturation.
VertexSet saturated_hereditary_closure(const Graph& g, VertexSet s);

// Condition (K): no vertex is the base of exactly one simple cycle.
struct ConditionK {
  bool holds = true;
  std::optional<int> witness;  // a vertex based on exactly one simple cycle
};
ConditionK condition_K(const Graph& g);

// All hereditary-and-saturated vertex sets, sorted by size then mask.
// Requires Condition (K) so the lattice is the full ideal lattice.
struct IdealLattice {
  std::vector<VertexSet> elements;
  bool contains(VertexSet h) const;
};
IdealLattice ideal_lattice(const Graph& g);

// One point of the primitive ideal space: a join-irreducible lattice element
// with its stratum and temperature.
struct PrimPoint {
  VertexSet min_open = 0;     // the join-irreducible element j
  VertexSet stratum = 0;      // j minus its unique lower cover
  int temperature = 0;        // 1 iff the stratum carries a cycle
};

struct PrimSpace {
  TemperedPoset tempered;            // specialisation order with temperatures
  std::vector<PrimPoint> points;     // index-aligned with the poset
  IdealLattice lattice;

  // Join of the min_opens over an open set of Prim points.
  VertexSet open_vertices(const Graph& g, PointSet prim_open) const;
};
PrimSpace prim_space(const Graph& g);

// K-theory of the subquotient over a locally closed vertex set W:
// K0 = coker(A_W^T - I restricted to regular columns), K1 = its kernel.
struct KPair {
  CokernelPresentation k0;          // generator_images hold the vertex classes
  KernelPresentation k1;
  IntMatrix presentation;            // rows: W ascending; cols: regular subset
  std::vector<int> stratum_vertices;
  std::vector<int> regular_vertices;
};
KPair k_pair(const Graph& g, VertexSet w);

// The six-term cycle for lattice elements U subset V subset W.
struct SixTerm {
  GroupHom iota0, pi0, delta0, iota1, pi1, delta1;
  bool exact = false;
};
SixTerm six_term(const Graph& g, VertexSet u, VertexSet v, VertexSet w);

// Filtered K-theory: a KPair for every locally closed subset of Prim and the
// six maps for every triple of opens.
struct FilteredK {
  PrimSpace prim;

  struct Entry {
    LocallyClosed prim_subset;   // canonical (U, V) pair of Prim opens
    VertexSet vertex_set = 0;
    KPair k;
  };
  std::vector<Entry> entries;

  struct Triple {
    PointSet open_u = 0, open_v = 0, open_w = 0;  // Prim opens
    SixTerm maps;
  };
  std::vector<Triple> triples;

  const Entry& entry(PointSet prim_difference) const;
};
FilteredK filtered_k(const Graph& g);

// Candidate isomorphism between two filtered K-theories: one pair of maps per
// locally closed subset, indexed by the Prim difference mask of fk1.
struct CertCandidate {
  std::map<PointSet, std::pair<IntMatrix, IntMatrix>> maps;  // (alpha0, alpha1)
};

enum class CertVerdict { Pass, Fail, Indeterminate };

// Checks a candidate: isomorphisms everywhere, naturality against every
// stored transform, and K0-positivity on singleton strata. Positivity is
// decided exactly for cyclic stratum K0 and reported Indeterminate otherwise.
CertVerdict iso_certificate_check(const FilteredK& fk1, const FilteredK& fk2,
                                  const CertCandidate& candidate);

// Canonical signature of each connected component of the tempered Prim space.
std::vector<Signature> tempered_signature(const Graph& g);

}  // namespace tempered
