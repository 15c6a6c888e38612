#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "temperedkit/errors.hpp"

namespace tempered {

// Subset of points as a bitmask; bit k stands for point k (0-based).
using PointSet = std::uint32_t;

// Finite T0 space on up to 16 points, stored as its specialisation order.
// Point i lies in the closure of point j exactly when i <= j here; opens are
// the up-sets and closed sets the down-sets, so opens correspond to ideals.
// Points are 0-based throughout the API; file formats print them 1-based.
class Poset {
 public:
  static constexpr int kMaxPoints = 16;

  // Builds the reflexive-transitive closure of the given cover pairs.
  // Pairs are 0-based (i, j) meaning i < j. Throws CycleError if the closure
  // would violate antisymmetry, IndexError for out-of-range points.
  static Poset from_cover_relations(int n,
                                    const std::vector<std::pair<int, int>>& covers);

  // Validates an explicit relation matrix: up[i] has bit j set iff i <= j.
  // Must already be reflexive, antisymmetric and transitive.
  static Poset from_up_sets(int n, std::vector<std::uint16_t> up);

  int size() const { return n_; }
  bool leq(int i, int j) const { return (up_[i] >> j) & 1u; }
  bool less(int i, int j) const { return i != j && leq(i, j); }

  // {j : i <= j}, including i itself.
  std::uint16_t up_set(int i) const { return up_[i]; }
  std::uint16_t down_set(int i) const;
  std::uint16_t up_closure(PointSet s) const;
  std::uint16_t down_closure(PointSet s) const;

  PointSet all_points() const {
    return static_cast<PointSet>((1u << n_) - 1u);
  }

  bool operator==(const Poset&) const = default;

 private:
  Poset(int n, std::vector<std::uint16_t> up) : n_(n), up_(std::move(up)) {}

  int n_ = 0;
  std::vector<std::uint16_t> up_;  // up_[i] bit j: i <= j
};

// A T0 space with a {0,1} temperature per point (0 = AF, 1 = purely infinite).
struct TemperedPoset {
  Poset poset;
  std::vector<int> temp;

  TemperedPoset(Poset p, std::vector<int> t);
};

// Unique minimal cover-pair set whose closure is the strict order.
std::vector<std::pair<int, int>> transitive_reduction(const Poset& p);

// Connectivity of the undirected comparability graph.
bool is_connected(const Poset& p);

// All open sets (up-sets) of the Alexandrov topology, sorted by size then
// numeric mask, so containment never runs against the listing order.
std::vector<PointSet> open_sets(const Poset& p);

// One canonical (U, V) pair per distinct locally closed difference U \ V.
// The representative has U = up-closure of the difference.
struct LocallyClosed {
  PointSet open_u = 0;
  PointSet open_v = 0;
  PointSet difference = 0;
};
std::vector<LocallyClosed> locally_closed_sets(const Poset& p);

// All orderings compatible with the strict order (i < j implies i earlier).
std::vector<std::vector<int>> linear_extensions(const Poset& p);

// Connected components of the comparability graph, as point masks.
std::vector<PointSet> connected_components(const Poset& p);

// The subposet induced on the given points, renumbered in ascending order.
Poset induced_subposet(const Poset& p, PointSet points);

}  // namespace tempered
