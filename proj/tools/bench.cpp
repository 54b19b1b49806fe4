// Benchmark: the naive serial reference enumerator against the engine at one
// and at all hardware threads. The reference has no symmetry breaking and
// deduplicates by scanning relabelings, so it is only run at small sizes.
#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "reference.hpp"
#include "ybdb/enumerate.hpp"

using namespace ybdb;

namespace {

double bench_engine(SearchKind kind, int n, int jobs, size_t* classes) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.jobs = jobs;
  double t0 = omp_get_wtime();
  size_t found = 0;
  if (kind == SearchKind::cycle_set)
    found = enumerate_cycle_sets(cfg).classes.size();
  else
    found = enumerate_racks(cfg).classes.size();
  if (classes) *classes = found;
  return omp_get_wtime() - t0;
}

double bench_reference(SearchKind kind, int n, size_t* classes) {
  double t0 = omp_get_wtime();
  size_t found = kind == SearchKind::cycle_set ? ref::cycle_set_classes(n).size()
                                               : ref::rack_classes(n).size();
  if (classes) *classes = found;
  return omp_get_wtime() - t0;
}

void run_row(const char* name, SearchKind kind, int n, bool with_reference) {
  int threads = omp_get_max_threads();
  size_t c1 = 0, cp = 0, cr = 0;
  double t1 = bench_engine(kind, n, 1, &c1);
  double tp = bench_engine(kind, n, threads, &cp);
  if (c1 != cp) std::printf("!! thread count changed the class count: %zu vs %zu\n", c1, cp);
  if (with_reference) {
    double tr = bench_reference(kind, n, &cr);
    if (cr != c1) std::printf("!! reference disagrees: %zu vs %zu\n", cr, c1);
    std::printf("%-16s n=%d  classes=%-6zu  reference %8.3fs  engine(1) %8.3fs  engine(%d) %8.3fs  ref/engine %6.1fx  parallel %4.2fx\n",
                name, n, c1, tr, t1, threads, tp, tr / t1, t1 / tp);
  } else {
    std::printf("%-16s n=%d  classes=%-6zu  engine(1) %8.3fs  engine(%d) %8.3fs  parallel %4.2fx\n",
                name, n, c1, t1, threads, tp, t1 / tp);
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  run_row("cycle sets", SearchKind::cycle_set, 4, true);
  run_row("racks", SearchKind::rack, 4, true);
  if (!quick) {
    run_row("cycle sets", SearchKind::cycle_set, 6, false);
    run_row("cycle sets", SearchKind::cycle_set, 7, false);
    run_row("racks", SearchKind::rack, 6, false);
  }
  return 0;
}
