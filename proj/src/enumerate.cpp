#include "temperedkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tempered {

namespace {

void check_census_range(int n) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("census supports 1..6 points, got " + std::to_string(n));
  }
}

inline int pair_bit_index(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Naturally labelled poset from a strict upper-triangular bit pattern
// (row-major, most significant first). Empty optional when not transitive.
bool up_sets_from_mask(int n, OrderBits mask, std::vector<std::uint16_t>& up) {
  const int total = n * (n - 1) / 2;
  up.assign(n, 0);
  for (int i = 0; i < n; ++i) up[i] = static_cast<std::uint16_t>(1u << i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((mask >> (total - 1 - pair_bit_index(n, i, j))) & 1) {
        up[i] |= static_cast<std::uint16_t>(1u << j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!((up[i] >> j) & 1u)) continue;
      if ((up[j] & ~up[i]) != 0) return false;
    }
  }
  return true;
}

struct Representative {
  OrderBits a = 0;
  bool connected = false;
  std::vector<std::uint32_t> temp_classes;  // sorted canonical t values
};

// Canonicalises one candidate; fills `rep` and returns true only when the
// candidate is its own canonical labelling, so each class is kept once.
bool process_candidate(int n, OrderBits mask, Representative& rep) {
  std::vector<std::uint16_t> up;
  if (!up_sets_from_mask(n, mask, up)) return false;
  Poset p = Poset::from_up_sets(n, std::move(up));
  OrderBits a = canonical_order_bits(p);
  if (a != mask) return false;

  rep.a = a;
  rep.connected = is_connected(p);
  std::set<std::uint32_t> ts;
  std::vector<int> temp(n, 0);
  for (std::uint32_t tau = 0; tau < (1u << n); ++tau) {
    for (int i = 0; i < n; ++i) temp[i] = (tau >> i) & 1u;
    ts.insert(minimal_temp_bits(p, temp, a));
  }
  rep.temp_classes.assign(ts.begin(), ts.end());
  return true;
}

std::vector<Representative> representatives_serial(int n) {
  const int total = n * (n - 1) / 2;
  std::vector<Representative> reps;
  for (OrderBits mask = 0; mask < (OrderBits(1) << total); ++mask) {
    Representative rep;
    if (process_candidate(n, mask, rep)) reps.push_back(std::move(rep));
  }
  return reps;
}

std::vector<Representative> representatives_parallel(int n) {
#ifdef _OPENMP
  const int total = n * (n - 1) / 2;
  const long long limit = 1LL << total;
  std::vector<std::vector<Representative>> buckets;
#pragma omp parallel
  {
#pragma omp single
    buckets.resize(omp_get_num_threads());
    auto& local = buckets[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 256)
    for (long long mask = 0; mask < limit; ++mask) {
      Representative rep;
      if (process_candidate(n, static_cast<OrderBits>(mask), rep)) {
        local.push_back(std::move(rep));
      }
    }
  }
  std::vector<Representative> reps;
  for (auto& bucket : buckets) {
    reps.insert(reps.end(), std::make_move_iterator(bucket.begin()),
                std::make_move_iterator(bucket.end()));
  }
  std::sort(reps.begin(), reps.end(),
            [](const Representative& x, const Representative& y) { return x.a < y.a; });
  return reps;
#else
  return representatives_serial(n);
#endif
}

CensusRow row_from(int n, const std::vector<Representative>& reps) {
  CensusRow row;
  row.n = n;
  for (const auto& rep : reps) {
    ++row.spaces;
    row.tempered += static_cast<std::int64_t>(rep.temp_classes.size());
    if (rep.connected) {
      ++row.connected_spaces;
      row.connected_tempered += static_cast<std::int64_t>(rep.temp_classes.size());
    }
  }
  return row;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n, bool connected_only) {
  check_census_range(n);
  std::vector<Poset> out;
  for (const auto& rep : representatives_parallel(n)) {
    if (connected_only && !rep.connected) continue;
    std::vector<std::uint16_t> up;
    up_sets_from_mask(n, rep.a, up);
    out.push_back(Poset::from_up_sets(n, std::move(up)));
  }
  return out;
}

std::vector<Signature> enumerate_tempered(int n, bool connected_only) {
  check_census_range(n);
  std::vector<Signature> out;
  for (const auto& rep : representatives_parallel(n)) {
    if (connected_only && !rep.connected) continue;
    for (std::uint32_t t : rep.temp_classes) out.push_back({n, rep.a, t});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CensusRow census(int n) {
  check_census_range(n);
  return row_from(n, representatives_parallel(n));
}

CensusRow census_serial(int n) {
  check_census_range(n);
  return row_from(n, representatives_serial(n));
}

namespace {

std::vector<std::int64_t> intermediate_from_connected(const std::vector<std::int64_t>& c) {
  const int m = static_cast<int>(c.size());
  std::vector<std::int64_t> b(m, 0);
  for (int k = 1; k <= m; ++k) {
    for (int d = 1; d <= k; ++d) {
      if (k % d == 0) b[k - 1] += static_cast<std::int64_t>(d) * c[d - 1];
    }
  }
  return b;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::vector<std::int64_t> divisor_sum_transform(const std::vector<std::int64_t>& connected) {
  return intermediate_from_connected(connected);
}

std::vector<std::int64_t> euler_transform(const std::vector<std::int64_t>& connected) {
  const int m = static_cast<int>(connected.size());
  std::vector<std::int64_t> b = intermediate_from_connected(connected);
  std::vector<std::int64_t> a(m, 0);
  for (int k = 1; k <= m; ++k) {
    std::int64_t acc = b[k - 1];
    for (int j = 1; j < k; ++j) acc += b[j - 1] * a[k - j - 1];
    if (acc % k != 0) {
      throw NonIntegralError("euler transform produced a non-integer at n=" +
                             std::to_string(k));
    }
    a[k - 1] = acc / k;
  }
  return a;
}

std::vector<std::int64_t> inverse_euler_transform(const std::vector<std::int64_t>& totals) {
  const int m = static_cast<int>(totals.size());
  std::vector<std::int64_t> b(m, 0);
  for (int k = 1; k <= m; ++k) {
    std::int64_t acc = static_cast<std::int64_t>(k) * totals[k - 1];
    for (int j = 1; j < k; ++j) acc -= b[j - 1] * totals[k - j - 1];
    b[k - 1] = acc;
  }
  std::vector<std::int64_t> c(m, 0);
  for (int k = 1; k <= m; ++k) {
    std::int64_t acc = 0;
    for (int d = 1; d <= k; ++d) {
      if (k % d == 0) acc += static_cast<std::int64_t>(moebius(k / d)) * b[d - 1];
    }
    if (acc % k != 0) {
      throw NonIntegralError("inverse euler transform produced a non-integer at n=" +
                             std::to_string(k));
    }
    c[k - 1] = acc / k;
  }
  return c;
}

}  // namespace tempered
