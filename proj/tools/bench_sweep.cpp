// Benchmark of the verification sweep: serial reference loop vs the OpenMP
// kernel, on the same sample set, with an equality check of the records.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ratexp/report.hpp"
#include "ratexp/verify.hpp"

int main(int argc, char** argv) {
  long samples = argc > 1 ? std::strtol(argv[1], nullptr, 10) : 120;
  ratexp::RationalExponent arg(1, 1);
  ratexp::SweepParams params;
  params.logN_lo = 5;
  params.logN_hi = 60;
  params.samples = samples;
  params.seed = 42;
  params.precision = 1024;

  using clock = std::chrono::steady_clock;

  params.parallel = false;
  auto t0 = clock::now();
  auto serial = ratexp::sweep(arg, params);
  auto t1 = clock::now();

  params.parallel = true;
  auto t2 = clock::now();
  auto parallel = ratexp::sweep(arg, params);
  auto t3 = clock::now();

  double serial_s = std::chrono::duration<double>(t1 - t0).count();
  double parallel_s = std::chrono::duration<double>(t3 - t2).count();

  bool identical = serial.size() == parallel.size();
  for (size_t i = 0; identical && i < serial.size(); ++i)
    identical = ratexp::verify_records_equal(serial[i], parallel[i]);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("records:   %zu\n", serial.size());
  std::printf("threads:   %d\n", threads);
  std::printf("serial:    %.3f s\n", serial_s);
  std::printf("parallel:  %.3f s\n", parallel_s);
  std::printf("speedup:   %.2fx\n", parallel_s > 0 ? serial_s / parallel_s : 0.0);
  std::printf("identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
