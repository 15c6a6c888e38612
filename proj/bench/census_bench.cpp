// Wall-clock comparison of the serial census against the OpenMP kernel.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "temperedkit/enumerate.hpp"

using namespace tempered;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%3s %12s %12s %9s %10s\n", "n", "serial[ms]", "parallel[ms]",
              "speedup", "classes");
  for (int n = 3; n <= 6; ++n) {
    CensusRow serial_row{}, parallel_row{};
    double serial_ms = time_ms([&] { serial_row = census_serial(n); });
    double parallel_ms = time_ms([&] { parallel_row = census(n); });
    if (!(serial_row == parallel_row)) {
      std::printf("MISMATCH between serial and parallel census at n=%d\n", n);
      return 1;
    }
    std::printf("%3d %12.2f %12.2f %8.2fx %10lld\n", n, serial_ms, parallel_ms,
                serial_ms / (parallel_ms > 0 ? parallel_ms : 1),
                static_cast<long long>(serial_row.tempered));
  }
  return 0;
}
