#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "helpers.hpp"
#include "temperedkit/graphalg.hpp"

using namespace tempered;

namespace {

Graph path3() {
  return Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
}

// Two vertices, double loops at both, one connecting edge.
Graph mixed_pi_pi() {
  return Graph::from_edges(2, {{0, 0, 2}, {0, 1, 1}, {1, 1, 2}});
}

// Double loop feeding a sink.
Graph mixed_pi_af() {
  return Graph::from_edges(2, {{0, 0, 2}, {0, 1, 1}});
}

// Triple loop over a double loop, connected by one edge.
Graph worked_example() {
  return Graph::from_edges(2, {{0, 0, 3}, {0, 1, 1}, {1, 1, 2}});
}

}  // namespace

TEST_CASE("saturated hereditary closure") {
  CHECK(saturated_hereditary_closure(path3(), 0b100) == 0b111);
  Graph loops = Graph::from_edges(2, {{0, 0, 1}, {1, 1, 1}, {0, 1, 1}});
  CHECK(saturated_hereditary_closure(loops, 0b10) == 0b10);
  CHECK(saturated_hereditary_closure(path3(), 0) == 0);
  // Heredity pulls the tail in, then saturation pulls the head after it.
  CHECK(saturated_hereditary_closure(path3(), 0b010) == 0b111);
}

TEST_CASE("condition K on the worked examples") {
  ConditionK single = condition_K(Graph::from_edges(1, {{0, 0, 1}}));
  CHECK_FALSE(single.holds);
  CHECK(single.witness == 0);

  CHECK(condition_K(Graph::from_edges(1, {{0, 0, 2}})).holds);
  CHECK(condition_K(path3()).holds);

  // A two-cycle with no other returns: each vertex bases exactly one cycle.
  ConditionK pair = condition_K(Graph::from_edges(2, {{0, 1, 1}, {1, 0, 1}}));
  CHECK_FALSE(pair.holds);
}

TEST_CASE("condition K agrees with the cycle-count oracle") {
  std::mt19937_64 rng(60902);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = testutil::random_graph(6, rng, false);
    auto counts = testutil::cycle_counts_by_base(g);
    bool oracle = std::none_of(counts.begin(), counts.end(),
                               [](long long c) { return c == 1; });
    CHECK(condition_K(g).holds == oracle);
  }
}

TEST_CASE("ideal lattices of the worked examples") {
  CHECK(ideal_lattice(path3()).elements == std::vector<VertexSet>{0, 0b111});

  Graph loops = Graph::from_edges(2, {{0, 0, 2}, {1, 1, 2}, {0, 1, 1}});
  CHECK(ideal_lattice(loops).elements == std::vector<VertexSet>{0, 0b10, 0b11});

  Graph isolated(2, {{0, 0}, {0, 0}});
  CHECK(ideal_lattice(isolated).elements.size() == 4);

  CHECK_THROWS_AS(ideal_lattice(Graph::from_edges(1, {{0, 0, 1}})), ConditionKError);
}

TEST_CASE("generated lattice equals the exhaustive subset filter") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testutil::random_graph(7, rng, true);
    auto filtered = testutil::lattice_by_filtering(g);
    std::sort(filtered.begin(), filtered.end(), [](VertexSet a, VertexSet b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    CHECK(ideal_lattice(g).elements == filtered);
  }
}

TEST_CASE("prim spaces of the worked examples") {
  PrimSpace both_pi = prim_space(mixed_pi_pi());
  CHECK(both_pi.tempered.poset.size() == 2);
  CHECK(both_pi.tempered.temp == std::vector<int>{1, 1});
  CHECK(format(canonical_signature(both_pi.tempered)) == "2.1.3");

  PrimSpace pi_af = prim_space(mixed_pi_af());
  CHECK(format(canonical_signature(pi_af.tempered)) == "2.1.2");

  PrimSpace simple = prim_space(path3());
  CHECK(simple.tempered.poset.size() == 1);
  CHECK(simple.tempered.temp == std::vector<int>{0});
  CHECK(format(canonical_signature(simple.tempered)) == "1.0.0");
}

TEST_CASE("prim open sets biject with the ideal lattice") {
  std::mt19937_64 rng(777001);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testutil::random_graph(6, rng, true);
    PrimSpace space = prim_space(g);
    auto opens = open_sets(space.tempered.poset);
    CHECK(opens.size() == space.lattice.elements.size());
    std::vector<VertexSet> mapped;
    for (PointSet u : opens) mapped.push_back(space.open_vertices(g, u));
    std::sort(mapped.begin(), mapped.end());
    std::vector<VertexSet> lattice = space.lattice.elements;
    std::sort(lattice.begin(), lattice.end());
    CHECK(mapped == lattice);
  }
}

TEST_CASE("k-theory of single-vertex and sink graphs") {
  for (int m = 2; m <= 6; ++m) {
    Graph g = Graph::from_edges(1, {{0, 0, static_cast<long long>(m)}});
    KPair kp = k_pair(g, g.all_vertices());
    if (m == 2) {
      CHECK(kp.k0.group.is_trivial());
    } else {
      CHECK(kp.k0.group.free_rank == 0);
      CHECK(kp.k0.group.torsion == std::vector<Int>{m - 1});
    }
    CHECK(kp.k1.group.is_trivial());
  }

  Graph sink(1, {{0}});
  KPair kp = k_pair(sink, 1);
  CHECK(kp.k0.group.free_rank == 1);
  CHECK(kp.k0.group.torsion.empty());
  CHECK(kp.k0.group.generator_images == std::vector<std::vector<Int>>{{Int(1)}});
  CHECK(kp.k1.group.is_trivial());
}

TEST_CASE("k-theory of the worked two-vertex example") {
  Graph g = worked_example();
  KPair whole = k_pair(g, g.all_vertices());
  CHECK(whole.k0.group.free_rank == 0);
  CHECK(whole.k0.group.torsion == std::vector<Int>{2});
  CHECK(whole.k1.group.is_trivial());
}

TEST_CASE("k_pair rejects sets that are not differences of lattice elements") {
  CHECK_THROWS_AS(k_pair(path3(), 0b010), NotLocallyClosedError);
}

TEST_CASE("six-term cycle of the worked example") {
  Graph g = worked_example();
  SixTerm st = six_term(g, 0, 0b10, 0b11);
  CHECK(st.exact);
  // K0: 0 -> Z/2 -> Z/2 -> 0.
  CHECK(st.iota0.source.is_trivial());
  CHECK(st.iota0.target.torsion == std::vector<Int>{2});
  CHECK(st.pi0.target.torsion == std::vector<Int>{2});
  CHECK(is_isomorphism(st.pi0));
  CHECK(is_zero_hom(st.delta0));
  CHECK(is_zero_hom(st.delta1));
  CHECK(st.iota1.source.is_trivial());
  CHECK(st.pi1.target.is_trivial());
}

TEST_CASE("degenerate triples are exact") {
  Graph g = worked_example();
  SixTerm st = six_term(g, 0, 0, 0b11);
  CHECK(st.exact);
  CHECK(st.iota0.source.is_trivial());
  CHECK(is_isomorphism(st.pi0));

  CHECK_THROWS_AS(six_term(g, 0b11, 0b10, 0b11), NotNestedError);
  CHECK_THROWS_AS(six_term(g, 0, 0b01, 0b11), NotNestedError);
}

TEST_CASE("six-term sequences of acyclic graphs have vanishing K1") {
  Graph g = Graph::from_edges(4, {{0, 1, 2}, {1, 2, 1}, {0, 3, 1}, {1, 3, 3}});
  IdealLattice lat = ideal_lattice(g);
  for (VertexSet u : lat.elements) {
    for (VertexSet v : lat.elements) {
      if ((u & ~v) != 0) continue;
      for (VertexSet w : lat.elements) {
        if ((v & ~w) != 0) continue;
        SixTerm st = six_term(g, u, v, w);
        CHECK(st.exact);
        CHECK(st.iota1.source.is_trivial());
        CHECK(st.iota1.target.is_trivial());
        CHECK(st.pi1.target.is_trivial());
      }
    }
  }
}

TEST_CASE("filtered K-theory of a simple graph") {
  FilteredK fk = filtered_k(path3());
  CHECK(fk.entries.size() == 2);  // empty set and the point
  CHECK(fk.prim.tempered.poset.size() == 1);
}

TEST_CASE("filtered K-theory of the two-point chain") {
  FilteredK fk = filtered_k(worked_example());
  CHECK(fk.entries.size() == 4);
  int nontrivial = 0;
  for (const auto& t : fk.triples) {
    CHECK(t.maps.exact);
    if (t.open_u != t.open_v && t.open_v != t.open_w) ++nontrivial;
  }
  CHECK(nontrivial == 1);
}

TEST_CASE("certificate checks on the worked example") {
  Graph g = worked_example();
  FilteredK fk1 = filtered_k(g);
  FilteredK fk2 = filtered_k(g);

  CertCandidate identity;
  for (const auto& e : fk1.entries) {
    identity.maps[e.prim_subset.difference] = {
        IntMatrix::identity(e.k.k0.group.dim()),
        IntMatrix::identity(e.k.k1.group.dim())};
  }
  CHECK(iso_certificate_check(fk1, fk2, identity) == CertVerdict::Pass);

  // Negation passes here: every nontrivial K0 is Z/2 and both strata are hot.
  CertCandidate negation = identity;
  for (auto& [subset, maps] : negation.maps) {
    for (int i = 0; i < maps.first.rows(); ++i) maps.first.at(i, i) = -1;
  }
  CHECK(iso_certificate_check(fk1, fk2, negation) == CertVerdict::Pass);
}

TEST_CASE("certificate rejects a sign flip on a cold cyclic stratum") {
  Graph g = mixed_pi_af();  // stratum {2} is a sink: K0 = Z with tau = 0
  FilteredK fk1 = filtered_k(g);
  FilteredK fk2 = filtered_k(g);

  CertCandidate flipped;
  for (const auto& e : fk1.entries) {
    IntMatrix a0 = IntMatrix::identity(e.k.k0.group.dim());
    if (e.prim_subset.difference != 0 && e.k.k0.group.free_rank == 1 &&
        e.k.k0.group.torsion.empty()) {
      // Flip the free K0 classes; positivity on the cold stratum must fail.
      for (int i = 0; i < a0.rows(); ++i) a0.at(i, i) = -1;
    }
    flipped.maps[e.prim_subset.difference] = {
        std::move(a0), IntMatrix::identity(e.k.k1.group.dim())};
  }
  CHECK(iso_certificate_check(fk1, fk2, flipped) == CertVerdict::Fail);
}

TEST_CASE("certificate shape mismatch") {
  FilteredK fk1 = filtered_k(worked_example());
  FilteredK fk2 = filtered_k(path3());
  CertCandidate empty;
  CHECK_THROWS_AS(iso_certificate_check(fk1, fk2, empty), ShapeMismatchError);
}

TEST_CASE("tempered signatures per component") {
  CHECK(tempered_signature(mixed_pi_pi()) ==
        std::vector<Signature>{Signature{2, 1, 3}});

  Graph two_loops = Graph::from_edges(2, {{0, 0, 2}, {1, 1, 2}});
  CHECK(tempered_signature(two_loops) ==
        std::vector<Signature>{Signature{1, 0, 1}, Signature{1, 0, 1}});

  CHECK(tempered_signature(path3()) == std::vector<Signature>{Signature{1, 0, 0}});
}

TEST_CASE("rank difference counts sinks stratum by stratum") {
  std::mt19937_64 rng(909090);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = testutil::random_graph(5, rng, true);
    FilteredK fk = filtered_k(g);
    for (const auto& e : fk.entries) {
      int sinks = 0;
      for (int v = 0; v < g.vertices(); ++v) {
        if (((e.vertex_set >> v) & 1u) && g.is_sink(v)) ++sinks;
      }
      CHECK(e.k.k0.group.free_rank - e.k.k1.group.free_rank == sinks);
    }
  }
}
