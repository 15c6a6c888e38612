#include "temperedkit/graphalg.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace tempered {

Graph::Graph(int n_vertices, std::vector<std::vector<long long>> adj)
    : n_(n_vertices), adj_(std::move(adj)) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw std::invalid_argument("vertex count must be between 1 and 20, got " +
                                std::to_string(n_));
  }
  if (static_cast<int>(adj_.size()) != n_) {
    throw std::invalid_argument("adjacency matrix row count mismatch");
  }
  for (const auto& row : adj_) {
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument("adjacency matrix column count mismatch");
    }
    for (long long m : row) {
      if (m < 0 || m > std::numeric_limits<std::int32_t>::max()) {
        throw std::invalid_argument("edge multiplicities must lie in 0..2^31-1");
      }
    }
  }
}

Graph Graph::from_edges(int n_vertices,
                        const std::vector<std::tuple<int, int, long long>>& edges) {
  std::vector<std::vector<long long>> adj(n_vertices, std::vector<long long>(n_vertices, 0));
  for (auto [u, v, m] : edges) {
    if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices) {
      throw IndexError("edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                       ") out of range for " + std::to_string(n_vertices) + " vertices");
    }
    adj[u][v] += m;
  }
  return Graph(n_vertices, std::move(adj));
}

bool Graph::is_regular(int v) const {
  for (int w = 0; w < n_; ++w) {
    if (adj_[v][w] > 0) return true;
  }
  return false;
}

VertexSet saturated_hereditary_closure(const Graph& g, VertexSet s) {
  const int n = g.vertices();
  VertexSet cur = s;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (!((cur >> v) & 1u)) continue;
      for (int w = 0; w < n; ++w) {
        if (g.edge_count(v, w) > 0 && !((cur >> w) & 1u)) {
          cur |= 1u << w;
          grew = true;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (((cur >> v) & 1u) || !g.is_regular(v)) continue;
      bool all_inside = true;
      for (int w = 0; w < n && all_inside; ++w) {
        if (g.edge_count(v, w) > 0 && !((cur >> w) & 1u)) all_inside = false;
      }
      if (all_inside) {
        cur |= 1u << v;
        grew = true;
      }
    }
  }
  return cur;
}

namespace {

// Simple cycles based at `base`, counted with edge multiplicity, capped.
long long count_cycles_at(const Graph& g, int base, long long cap,
                          int current, VertexSet visited, long long path_mult) {
  long long count = 0;
  if (g.edge_count(current, base) > 0) {
    count += path_mult * g.edge_count(current, base);
    if (count >= cap) return count;
  }
  for (int w = 0; w < g.vertices(); ++w) {
    if (w == base || ((visited >> w) & 1u) || g.edge_count(current, w) == 0) continue;
    count += count_cycles_at(g, base, cap - count, w, visited | (1u << w),
                             path_mult * g.edge_count(current, w));
    if (count >= cap) return count;
  }
  return count;
}

}  // namespace

ConditionK condition_K(const Graph& g) {
  for (int v = 0; v < g.vertices(); ++v) {
    long long cycles = count_cycles_at(g, v, 2, v, VertexSet(1) << v, 1);
    if (cycles == 1) return {false, v};
  }
  return {true, std::nullopt};
}

bool IdealLattice::contains(VertexSet h) const {
  return std::binary_search(elements.begin(), elements.end(), h,
                            [](VertexSet a, VertexSet b) {
                              int ca = std::popcount(a), cb = std::popcount(b);
                              return ca != cb ? ca < cb : a < b;
                            });
}

namespace {

void require_condition_K(const Graph& g) {
  ConditionK ck = condition_K(g);
  if (!ck.holds) {
    throw ConditionKError("graph fails Condition (K): vertex " +
                          std::to_string(*ck.witness + 1) +
                          " is the base of exactly one simple cycle");
  }
}

std::vector<VertexSet> lattice_elements(const Graph& g) {
  const int n = g.vertices();
  std::vector<VertexSet> atoms;
  for (int v = 0; v < n; ++v) {
    atoms.push_back(saturated_hereditary_closure(g, VertexSet(1) << v));
  }
  std::vector<VertexSet> elems = {0};
  std::vector<VertexSet> frontier = {0};
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (VertexSet h : frontier) {
      for (VertexSet atom : atoms) {
        VertexSet joined = saturated_hereditary_closure(g, h | atom);
        if (std::find(elems.begin(), elems.end(), joined) == elems.end()) {
          elems.push_back(joined);
          next.push_back(joined);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end(), [](VertexSet a, VertexSet b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return elems;
}

bool cycle_dfs(const Graph& g, VertexSet stratum, int v, std::vector<int>& colour) {
  colour[v] = 1;
  for (int w = 0; w < g.vertices(); ++w) {
    if (!((stratum >> w) & 1u) || g.edge_count(v, w) == 0) continue;
    if (colour[w] == 1) return true;
    if (colour[w] == 0 && cycle_dfs(g, stratum, w, colour)) return true;
  }
  colour[v] = 2;
  return false;
}

bool stratum_has_cycle(const Graph& g, VertexSet stratum) {
  std::vector<int> colour(g.vertices(), 0);  // 0 new, 1 on path, 2 done
  for (int v = 0; v < g.vertices(); ++v) {
    if (!((stratum >> v) & 1u) || colour[v] != 0) continue;
    if (cycle_dfs(g, stratum, v, colour)) return true;
  }
  return false;
}

}  // namespace

IdealLattice ideal_lattice(const Graph& g) {
  require_condition_K(g);
  return {lattice_elements(g)};
}

PrimSpace prim_space(const Graph& g) {
  IdealLattice lat = ideal_lattice(g);
  const auto& elems = lat.elements;

  // Join-irreducibles: exactly one lower cover.
  std::vector<PrimPoint> points;
  for (VertexSet h : elems) {
    if (h == 0) continue;
    std::vector<VertexSet> below;
    for (VertexSet k : elems) {
      if (k != h && (k & ~h) == 0) below.push_back(k);
    }
    std::vector<VertexSet> covers;
    for (VertexSet k : below) {
      bool maximal = true;
      for (VertexSet l : below) {
        if (l != k && (k & ~l) == 0) {
          maximal = false;
          break;
        }
      }
      if (maximal) covers.push_back(k);
    }
    if (covers.size() == 1) {
      PrimPoint pt;
      pt.min_open = h;
      pt.stratum = h & ~covers.front();
      pt.temperature = stratum_has_cycle(g, pt.stratum) ? 1 : 0;
      points.push_back(pt);
    }
  }

  const int m = static_cast<int>(points.size());
  std::vector<std::uint16_t> up(m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      // x below y when every ideal containing x's class contains y's:
      // j_y subset of j_x.
      if ((points[y].min_open & ~points[x].min_open) == 0) {
        up[x] |= static_cast<std::uint16_t>(1u << y);
      }
    }
  }
  Poset poset = Poset::from_up_sets(m, std::move(up));
  std::vector<int> temp(m);
  for (int x = 0; x < m; ++x) temp[x] = points[x].temperature;
  return PrimSpace{TemperedPoset(std::move(poset), std::move(temp)),
                   std::move(points), std::move(lat)};
}

VertexSet PrimSpace::open_vertices(const Graph& g, PointSet prim_open) const {
  VertexSet acc = 0;
  for (std::size_t x = 0; x < points.size(); ++x) {
    if ((prim_open >> x) & 1u) acc |= points[x].min_open;
  }
  return saturated_hereditary_closure(g, acc);
}

namespace {

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < Graph::kMaxVertices; ++v) {
    if ((s >> v) & 1u) out.push_back(v);
  }
  return out;
}

// Presentation matrix A_W^T - I over the given vertex order, with columns
// restricted to the regular vertices.
IntMatrix presentation_matrix(const Graph& g, const std::vector<int>& verts,
                              const std::vector<int>& regular) {
  IntMatrix m(static_cast<int>(verts.size()), static_cast<int>(regular.size()));
  for (std::size_t j = 0; j < regular.size(); ++j) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      long edges = static_cast<long>(g.edge_count(regular[j], verts[i]));
      m.at(static_cast<int>(i), static_cast<int>(j)) = Int(edges);
      if (verts[i] == regular[j]) m.at(static_cast<int>(i), static_cast<int>(j)) -= 1;
    }
  }
  return m;
}

KPair k_pair_ordered(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> regular;
  for (int v : verts) {
    if (g.is_regular(v)) regular.push_back(v);
  }
  KPair kp;
  kp.stratum_vertices = verts;
  kp.regular_vertices = regular;
  kp.presentation = presentation_matrix(g, verts, regular);
  kp.k0 = cokernel(kp.presentation);
  kp.k1 = kernel_presentation(kp.presentation);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::vector<Int> e(verts.size());
    e[i] = 1;
    kp.k0.group.generator_images.push_back(kp.k0.project(e));
  }
  return kp;
}

bool is_difference_of_lattice_elements(const Graph& g, VertexSet w) {
  VertexSet upper = saturated_hereditary_closure(g, w);
  VertexSet lower = upper & ~w;
  return saturated_hereditary_closure(g, lower) == lower;
}

}  // namespace

KPair k_pair(const Graph& g, VertexSet w) {
  if ((w & ~g.all_vertices()) != 0) {
    throw IndexError("stratum references vertices beyond the graph");
  }
  if (!is_difference_of_lattice_elements(g, w)) {
    throw NotLocallyClosedError("vertex set is not a difference of hereditary "
                                "saturated sets");
  }
  return k_pair_ordered(g, set_to_vertices(w));
}

namespace {

// e_v coordinates of `from` placed into `to`; vertices absent from `to` map
// to zero, which realises both block inclusions and quotient projections.
IntMatrix coordinate_map(const std::vector<int>& from, const std::vector<int>& to) {
  IntMatrix m(static_cast<int>(to.size()), static_cast<int>(from.size()));
  for (std::size_t j = 0; j < from.size(); ++j) {
    auto it = std::find(to.begin(), to.end(), from[j]);
    if (it != to.end()) {
      m.at(static_cast<int>(it - to.begin()), static_cast<int>(j)) = 1;
    }
  }
  return m;
}

// Shares stratum presentations across the triples of one graph so every map
// over a given subset lands in identical coordinates.
class SixTermBuilder {
 public:
  explicit SixTermBuilder(const Graph& g) : g_(g) {}

  const KPair& pair_for(VertexSet s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) {
      it = cache_.emplace(s, k_pair_ordered(g_, set_to_vertices(s))).first;
    }
    return it->second;
  }

  SixTerm build(VertexSet u, VertexSet v, VertexSet w) {
    const KPair& k1 = pair_for(v & ~u);
    const KPair& k2 = pair_for(w & ~u);
    const KPair& k3 = pair_for(w & ~v);

    IntMatrix iota_rows = coordinate_map(k1.stratum_vertices, k2.stratum_vertices);
    IntMatrix iota_cols = coordinate_map(k1.regular_vertices, k2.regular_vertices);
    IntMatrix pi_rows = coordinate_map(k3.stratum_vertices, k2.stratum_vertices).transpose();
    IntMatrix pi_cols = coordinate_map(k3.regular_vertices, k2.regular_vertices).transpose();

    if (!(iota_rows * k1.presentation == k2.presentation * iota_cols) ||
        !(pi_rows * k2.presentation == k3.presentation * pi_cols)) {
      throw NonCommutingError("stratum presentations fail to assemble");
    }

    SixTerm st;
    st.iota0 = induced_on_cokernels(iota_rows, k1.k0, k2.k0);
    st.pi0 = induced_on_cokernels(pi_rows, k2.k0, k3.k0);
    st.iota1 = induced_on_kernels(iota_cols, k1.k1, k2.k1);
    st.pi1 = induced_on_kernels(pi_cols, k2.k1, k3.k1);
    ComplexTriple triple{k1.presentation, k2.presentation, k3.presentation,
                         iota_rows, iota_cols, pi_rows, pi_cols};
    st.delta1 = snake_connecting(triple, k3.k1, k1.k0);
    st.delta0 = zero_hom(k3.k0.group, k1.k1.group);

    st.exact = exact_at(st.delta1, st.iota0) && exact_at(st.iota0, st.pi0) &&
               exact_at(st.pi0, st.delta0) && exact_at(st.delta0, st.iota1) &&
               exact_at(st.iota1, st.pi1) && exact_at(st.pi1, st.delta1);
    return st;
  }

 private:
  const Graph& g_;
  std::map<VertexSet, KPair> cache_;
};

void require_lattice_triple(const Graph& g, VertexSet u, VertexSet v, VertexSet w) {
  if ((u & ~v) != 0 || (v & ~w) != 0) {
    throw NotNestedError("six-term triple must satisfy U subset V subset W");
  }
  for (VertexSet h : {u, v, w}) {
    if (saturated_hereditary_closure(g, h) != h) {
      throw NotNestedError("six-term endpoints must be hereditary saturated sets");
    }
  }
}

}  // namespace

SixTerm six_term(const Graph& g, VertexSet u, VertexSet v, VertexSet w) {
  require_lattice_triple(g, u, v, w);
  SixTermBuilder builder(g);
  return builder.build(u, v, w);
}

const FilteredK::Entry& FilteredK::entry(PointSet prim_difference) const {
  for (const auto& e : entries) {
    if (e.prim_subset.difference == prim_difference) return e;
  }
  throw NotLocallyClosedError("no stored entry for the requested Prim subset");
}

namespace {

// Comparison isomorphisms between two vertex models of one subquotient. The
// canonical model embeds as a coordinate block (heredity stops edges from
// leaving it inside the larger model), and the induced maps are invertible.
struct ModelComparison {
  bool trivial = false;      // same vertex model, nothing to translate
  GroupHom c0, c0_inv;       // canonical K0 -> larger K0 and back
  GroupHom c1, c1_inv;
};

ModelComparison compare_models(const KPair& canonical, const KPair& larger) {
  ModelComparison cmp;
  if (canonical.stratum_vertices == larger.stratum_vertices) {
    cmp.trivial = true;
    return cmp;
  }
  IntMatrix rows = coordinate_map(canonical.stratum_vertices, larger.stratum_vertices);
  IntMatrix cols = coordinate_map(canonical.regular_vertices, larger.regular_vertices);
  if (!(rows * canonical.presentation == larger.presentation * cols)) {
    throw NonCommutingError("stratum models fail to embed");
  }
  cmp.c0 = induced_on_cokernels(rows, canonical.k0, larger.k0);
  cmp.c1 = induced_on_kernels(cols, canonical.k1, larger.k1);
  if (!is_isomorphism(cmp.c0) || !is_isomorphism(cmp.c1)) {
    throw NotExactError("stratum model comparison failed to be an isomorphism");
  }
  cmp.c0_inv = invert_isomorphism(cmp.c0);
  cmp.c1_inv = invert_isomorphism(cmp.c1);
  return cmp;
}

enum class KDegree { K0, K1 };

GroupHom rebase(const GroupHom& f, const ModelComparison& src, KDegree src_deg,
                const ModelComparison& dst, KDegree dst_deg) {
  GroupHom out = f;
  if (!src.trivial) {
    out = compose(out, src_deg == KDegree::K0 ? src.c0 : src.c1);
  }
  if (!dst.trivial) {
    out = compose(dst_deg == KDegree::K0 ? dst.c0_inv : dst.c1_inv, out);
  }
  return out;
}

}  // namespace

FilteredK filtered_k(const Graph& g) {
  FilteredK fk{prim_space(g), {}, {}};
  const Poset& prim = fk.prim.tempered.poset;
  SixTermBuilder builder(g);

  for (const LocallyClosed& lc : locally_closed_sets(prim)) {
    FilteredK::Entry entry;
    entry.prim_subset = lc;
    entry.vertex_set = fk.prim.open_vertices(g, lc.open_u) &
                       ~fk.prim.open_vertices(g, lc.open_v);
    entry.k = builder.pair_for(entry.vertex_set);
    fk.entries.push_back(std::move(entry));
  }

  std::map<std::pair<VertexSet, VertexSet>, ModelComparison> comparisons;
  auto comparison = [&](PointSet prim_diff, VertexSet triple_set) -> const ModelComparison& {
    VertexSet canonical_set = fk.entry(prim_diff).vertex_set;
    auto key = std::make_pair(canonical_set, triple_set);
    auto it = comparisons.find(key);
    if (it == comparisons.end()) {
      it = comparisons
               .emplace(key, compare_models(builder.pair_for(canonical_set),
                                            builder.pair_for(triple_set)))
               .first;
    }
    return it->second;
  };

  std::vector<PointSet> opens = open_sets(prim);
  for (PointSet u : opens) {
    for (PointSet v : opens) {
      if ((u & ~v) != 0) continue;
      for (PointSet w : opens) {
        if ((v & ~w) != 0) continue;
        VertexSet hu = fk.prim.open_vertices(g, u);
        VertexSet hv = fk.prim.open_vertices(g, v);
        VertexSet hw = fk.prim.open_vertices(g, w);
        FilteredK::Triple t;
        t.open_u = u;
        t.open_v = v;
        t.open_w = w;
        t.maps = builder.build(hu, hv, hw);

        // Express the maps in the canonical coordinates of the entries; the
        // triple's strata may be larger vertex models of the same
        // subquotients.
        const ModelComparison& c1 = comparison(v & ~u, hv & ~hu);
        const ModelComparison& c2 = comparison(w & ~u, hw & ~hu);
        const ModelComparison& c3 = comparison(w & ~v, hw & ~hv);
        t.maps.iota0 = rebase(t.maps.iota0, c1, KDegree::K0, c2, KDegree::K0);
        t.maps.pi0 = rebase(t.maps.pi0, c2, KDegree::K0, c3, KDegree::K0);
        t.maps.delta0 = rebase(t.maps.delta0, c3, KDegree::K0, c1, KDegree::K1);
        t.maps.iota1 = rebase(t.maps.iota1, c1, KDegree::K1, c2, KDegree::K1);
        t.maps.pi1 = rebase(t.maps.pi1, c2, KDegree::K1, c3, KDegree::K1);
        t.maps.delta1 = rebase(t.maps.delta1, c3, KDegree::K1, c1, KDegree::K0);
        fk.triples.push_back(std::move(t));
      }
    }
  }
  return fk;
}

std::vector<Signature> tempered_signature(const Graph& g) {
  PrimSpace space = prim_space(g);
  std::vector<Signature> out;
  for (PointSet comp : connected_components(space.tempered.poset)) {
    Poset sub = induced_subposet(space.tempered.poset, comp);
    std::vector<int> temp;
    for (int x = 0; x < space.tempered.poset.size(); ++x) {
      if ((comp >> x) & 1u) temp.push_back(space.tempered.temp[x]);
    }
    out.push_back(canonical_signature(TemperedPoset(std::move(sub), std::move(temp))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Membership of `value` in the semigroup generated by `gens` inside Z.
bool in_nonnegative_span(const Int& value, const std::vector<Int>& gens) {
  if (value == 0) return true;
  bool has_pos = false, has_neg = false;
  Int g = 0;
  for (const Int& x : gens) {
    if (x > 0) has_pos = true;
    if (x < 0) has_neg = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) return false;
  if (value % g != 0) return false;
  if (has_pos && has_neg) return true;  // the span is the full subgroup gZ
  if (has_pos) return value > 0;
  return value < 0;
}

}  // namespace

CertVerdict iso_certificate_check(const FilteredK& fk1, const FilteredK& fk2,
                                  const CertCandidate& candidate) {
  {
    // Same tempered Prim space, matched by canonical signature per component.
    auto sig_of = [](const FilteredK& fk) {
      std::vector<Signature> sigs;
      for (PointSet comp : connected_components(fk.prim.tempered.poset)) {
        Poset sub = induced_subposet(fk.prim.tempered.poset, comp);
        std::vector<int> temp;
        for (int x = 0; x < fk.prim.tempered.poset.size(); ++x) {
          if ((comp >> x) & 1u) temp.push_back(fk.prim.tempered.temp[x]);
        }
        sigs.push_back(canonical_signature(TemperedPoset(std::move(sub), std::move(temp))));
      }
      std::sort(sigs.begin(), sigs.end());
      return sigs;
    };
    if (sig_of(fk1) != sig_of(fk2)) {
      throw ShapeMismatchError("candidate relates non-homeomorphic tempered spaces");
    }
    if (!(fk1.prim.tempered.poset == fk2.prim.tempered.poset) ||
        fk1.prim.tempered.temp != fk2.prim.tempered.temp) {
      throw ShapeMismatchError("tempered spaces agree only up to relabelling; "
                               "relabel one input so the Prim points align");
    }
  }

  // Assemble the candidate homs per locally closed subset.
  std::map<PointSet, std::pair<GroupHom, GroupHom>> alpha;
  for (const auto& e1 : fk1.entries) {
    const auto& e2 = fk2.entry(e1.prim_subset.difference);
    auto it = candidate.maps.find(e1.prim_subset.difference);
    if (it == candidate.maps.end()) return CertVerdict::Fail;
    GroupHom a0{e1.k.k0.group, e2.k.k0.group, it->second.first};
    GroupHom a1{e1.k.k1.group, e2.k.k1.group, it->second.second};
    if (a0.matrix.rows() != a0.target.dim() || a0.matrix.cols() != a0.source.dim() ||
        a1.matrix.rows() != a1.target.dim() || a1.matrix.cols() != a1.source.dim()) {
      return CertVerdict::Fail;
    }
    if (!is_well_defined(a0) || !is_isomorphism(a0) || !is_isomorphism(a1)) {
      return CertVerdict::Fail;
    }
    alpha.emplace(e1.prim_subset.difference, std::make_pair(std::move(a0), std::move(a1)));
  }

  // Naturality against every stored six-term transform.
  for (std::size_t idx = 0; idx < fk1.triples.size(); ++idx) {
    const auto& t1 = fk1.triples[idx];
    const auto& t2 = fk2.triples[idx];
    PointSet y1 = t1.open_v & ~t1.open_u;
    PointSet y2 = t1.open_w & ~t1.open_u;
    PointSet y3 = t1.open_w & ~t1.open_v;
    const auto& a1 = alpha.at(y1);
    const auto& a2 = alpha.at(y2);
    const auto& a3 = alpha.at(y3);
    auto commutes = [](const GroupHom& left, const GroupHom& f1, const GroupHom& f2,
                       const GroupHom& right) {
      return hom_equal(compose(left, f1), compose(f2, right));
    };
    if (!commutes(a2.first, t1.maps.iota0, t2.maps.iota0, a1.first)) return CertVerdict::Fail;
    if (!commutes(a3.first, t1.maps.pi0, t2.maps.pi0, a2.first)) return CertVerdict::Fail;
    if (!commutes(a1.second, t1.maps.delta0, t2.maps.delta0, a3.first)) return CertVerdict::Fail;
    if (!commutes(a2.second, t1.maps.iota1, t2.maps.iota1, a1.second)) return CertVerdict::Fail;
    if (!commutes(a3.second, t1.maps.pi1, t2.maps.pi1, a2.second)) return CertVerdict::Fail;
    if (!commutes(a1.first, t1.maps.delta1, t2.maps.delta1, a3.second)) return CertVerdict::Fail;
  }

  // Positivity on singleton strata.
  bool indeterminate = false;
  for (std::size_t x = 0; x < fk1.prim.points.size(); ++x) {
    if (fk1.prim.tempered.temp[x] == 1) continue;  // cone is the whole group
    PointSet singleton = PointSet(1) << x;
    const auto& e1 = fk1.entry(singleton);
    const auto& e2 = fk2.entry(singleton);
    const GroupHom& a0 = alpha.at(singleton).first;
    if (e1.k.k0.group.dim() != 1) {
      indeterminate = true;
      continue;
    }
    std::vector<Int> target_gens;
    for (const auto& img : e2.k.k0.group.generator_images) target_gens.push_back(img[0]);
    for (const auto& img : e1.k.k0.group.generator_images) {
      std::vector<Int> mapped = a0.apply(img);
      if (!in_nonnegative_span(mapped[0], target_gens)) return CertVerdict::Fail;
    }
  }
  return indeterminate ? CertVerdict::Indeterminate : CertVerdict::Pass;
}

}  // namespace tempered
