#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "temperedkit/cli.hpp"

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (const char* threads = std::getenv("TEMPERED_KIT_THREADS")) {
    int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
  std::vector<std::string> args(argv + 1, argv + argc);
  return tempered::run_cli(args, std::cout, std::cerr);
}
