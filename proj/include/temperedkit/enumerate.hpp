#pragma once

#include <cstdint>
#include <vector>

#include "temperedkit/poset.hpp"
#include "temperedkit/signature.hpp"

namespace tempered {

// Counts of homeomorphism classes for one point count.
struct CensusRow {
  int n = 0;
  std::int64_t spaces = 0;
  std::int64_t connected_spaces = 0;
  std::int64_t tempered = 0;
  std::int64_t connected_tempered = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// One representative per homeomorphism class, sorted by signature. The
// representative carries the canonical labelling (its own order matrix is the
// minimal upper-triangular one).
std::vector<Poset> enumerate_posets(int n, bool connected_only);

// One canonical signature per homeomorphism-and-temperature class, sorted.
std::vector<Signature> enumerate_tempered(int n, bool connected_only);

// Full census for one n. `census` runs the OpenMP kernel when available;
// `census_serial` is the plain reference kept for testing and benchmarks.
CensusRow census(int n);
CensusRow census_serial(int n);

// Euler transform between connected counts and total (multiset) counts:
// 1 + sum a_n x^n = prod (1 - x^k)^(-c_k), via b_n = sum_{d|n} d c_d and
// n a_n = b_n + sum_{k<n} b_k a_{n-k}. Sequences are indexed from n = 1.
std::vector<std::int64_t> euler_transform(const std::vector<std::int64_t>& connected);
std::vector<std::int64_t> inverse_euler_transform(const std::vector<std::int64_t>& totals);

// The intermediate sequence b_n = sum_{d|n} d c_d by itself.
std::vector<std::int64_t> divisor_sum_transform(const std::vector<std::int64_t>& connected);

}  // namespace tempered
