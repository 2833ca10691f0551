// Compares the serial and OpenMP parameter-sweep paths; they must produce
// identical rows, so the interesting number is the wall-clock ratio.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flatgrid/sweep.hpp"

using namespace flatgrid;

namespace {

double run_ms(int max_m, int max_n, bool parallel) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult r = sweep_rows(max_m, max_n, parallel);
  auto t1 = std::chrono::steady_clock::now();
  if (!r.consistent) std::fprintf(stderr, "warning: %s\n", r.detail.c_str());
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_mn = 14;
  int repeats = 3;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--max" && i + 1 < argc)
      max_mn = std::atoi(argv[++i]);
    else if (a == "--repeat" && i + 1 < argc)
      repeats = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: flatgrid_bench [--max N] [--repeat R]\n");
      return 2;
    }
  }
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; parallel path runs serially\n");
#endif
  std::printf("%-8s %12s %12s %8s\n", "sweep", "serial ms", "parallel ms", "speedup");
  for (int r = 0; r < repeats; ++r) {
    double serial = run_ms(max_mn, max_mn, false);
    double parallel = run_ms(max_mn, max_mn, true);
    std::printf("%dx%-6d %12.1f %12.1f %7.2fx\n", max_mn, max_mn, serial, parallel,
                serial / parallel);
  }
  bool equal = sweep_rows(max_mn, max_mn, false).rows == sweep_rows(max_mn, max_mn, true).rows;
  std::printf("rows identical: %s\n", equal ? "yes" : "NO");
  return equal ? 0 : 1;
}
