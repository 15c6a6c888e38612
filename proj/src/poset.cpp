#include "temperedkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace tempered {

namespace {

void check_point_count(int n) {
  if (n < 1 || n > Poset::kMaxPoints) {
    throw std::invalid_argument("point count must be between 1 and 16, got " +
                                std::to_string(n));
  }
}

}  // namespace

Poset Poset::from_cover_relations(int n,
                                  const std::vector<std::pair<int, int>>& covers) {
  check_point_count(n);
  std::vector<std::uint16_t> up(n);
  for (int i = 0; i < n; ++i) up[i] = static_cast<std::uint16_t>(1u << i);
  for (auto [i, j] : covers) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw IndexError("cover pair (" + std::to_string(i + 1) + ", " +
                       std::to_string(j + 1) + ") out of range for n=" +
                       std::to_string(n));
    }
    up[i] |= static_cast<std::uint16_t>(1u << j);
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((up[i] >> k) & 1u) up[i] |= up[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (((up[i] >> j) & 1u) && ((up[j] >> i) & 1u)) {
        throw CycleError("relation closure relates " + std::to_string(i + 1) +
                         " and " + std::to_string(j + 1) + " both ways");
      }
    }
  }
  return Poset(n, std::move(up));
}

Poset Poset::from_up_sets(int n, std::vector<std::uint16_t> up) {
  check_point_count(n);
  if (static_cast<int>(up.size()) != n) {
    throw std::invalid_argument("relation matrix size does not match n");
  }
  for (int i = 0; i < n; ++i) {
    if (!((up[i] >> i) & 1u)) throw CycleError("relation is not reflexive");
    if (up[i] >= (1u << n)) throw IndexError("relation references points beyond n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !((up[i] >> j) & 1u)) continue;
      if ((up[j] >> i) & 1u) throw CycleError("relation is not antisymmetric");
      if ((up[j] & ~up[i]) != 0) throw CycleError("relation is not transitive");
    }
  }
  return Poset(n, std::move(up));
}

std::uint16_t Poset::down_set(int i) const {
  std::uint16_t d = 0;
  for (int j = 0; j < n_; ++j) {
    if (leq(j, i)) d |= static_cast<std::uint16_t>(1u << j);
  }
  return d;
}

std::uint16_t Poset::up_closure(PointSet s) const {
  std::uint16_t r = 0;
  for (int i = 0; i < n_; ++i) {
    if ((s >> i) & 1u) r |= up_[i];
  }
  return r;
}

std::uint16_t Poset::down_closure(PointSet s) const {
  std::uint16_t r = 0;
  for (int i = 0; i < n_; ++i) {
    if ((s >> i) & 1u) r |= down_set(i);
  }
  return r;
}

TemperedPoset::TemperedPoset(Poset p, std::vector<int> t)
    : poset(std::move(p)), temp(std::move(t)) {
  if (static_cast<int>(temp.size()) != poset.size()) {
    throw std::invalid_argument("temperature vector length does not match point count");
  }
  for (int v : temp) {
    if (v != 0 && v != 1) throw std::invalid_argument("temperatures must be 0 or 1");
  }
}

std::vector<std::pair<int, int>> transitive_reduction(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool composite = false;
      for (int k = 0; k < n && !composite; ++k) {
        if (k != i && k != j && p.less(i, k) && p.less(k, j)) composite = true;
      }
      if (!composite) covers.emplace_back(i, j);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

bool is_connected(const Poset& p) {
  return connected_components(p).size() == 1;
}

std::vector<PointSet> connected_components(const Poset& p) {
  const int n = p.size();
  std::vector<PointSet> comps;
  std::uint32_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1u) continue;
    std::uint32_t comp = 1u << s;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < n; ++i) {
        if (!((comp >> i) & 1u)) continue;
        std::uint32_t adj = p.up_set(i) | p.down_set(i);
        if ((adj & ~comp) != 0) {
          comp |= adj;
          grew = true;
        }
      }
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

std::vector<PointSet> open_sets(const Poset& p) {
  const int n = p.size();
  std::vector<PointSet> opens;
  for (PointSet s = 0; s < (1u << n); ++s) {
    if (p.up_closure(s) == s) opens.push_back(s);
  }
  std::sort(opens.begin(), opens.end(), [](PointSet a, PointSet b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return opens;
}

std::vector<LocallyClosed> locally_closed_sets(const Poset& p) {
  const int n = p.size();
  std::vector<LocallyClosed> out;
  for (PointSet d = 0; d < (1u << n); ++d) {
    PointSet u = p.up_closure(d);
    PointSet v = u & ~d;
    if (p.up_closure(v) == v) out.push_back({u, v, d});
  }
  std::sort(out.begin(), out.end(), [](const LocallyClosed& a, const LocallyClosed& b) {
    int ca = std::popcount(a.difference), cb = std::popcount(b.difference);
    if (ca != cb) return ca < cb;
    return a.difference < b.difference;
  });
  return out;
}

namespace {

void extend(const Poset& p, std::uint32_t used, std::vector<int>& prefix,
            std::vector<std::vector<int>>& out) {
  const int n = p.size();
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if ((used >> v) & 1u) continue;
    // v may come next only if everything below it is already placed.
    std::uint32_t below = p.down_set(v) & ~(1u << v);
    if ((below & ~used) != 0) continue;
    prefix.push_back(v);
    extend(p, used | (1u << v), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  prefix.reserve(p.size());
  extend(p, 0, prefix, out);
  return out;
}

Poset induced_subposet(const Poset& p, PointSet points) {
  std::vector<int> verts;
  for (int i = 0; i < p.size(); ++i) {
    if ((points >> i) & 1u) verts.push_back(i);
  }
  if (verts.empty()) throw std::invalid_argument("induced subposet needs at least one point");
  const int m = static_cast<int>(verts.size());
  std::vector<std::uint16_t> up(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (p.leq(verts[a], verts[b])) up[a] |= static_cast<std::uint16_t>(1u << b);
    }
  }
  return Poset::from_up_sets(m, std::move(up));
}

}  // namespace tempered
