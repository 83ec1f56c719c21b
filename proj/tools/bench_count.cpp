// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Benchmark: OpenMP counting kernel vs the serial reference. Usage:
//   bench_count [n_max] [curve-spec]
// Defaults: n_max = 18, the reference curve C. Exits nonzero if the two
// implementations ever disagree, so this doubles as a stress check.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aszeta/counting.hpp"
#include "aszeta/curve.hpp"
#include "aszeta/reference.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int n_max = argc > 1 ? std::stoi(argv[1]) : 18;
  std::string spec = argc > 2 ? argv[2] : aszeta::kCurveCSpec;

  aszeta::ASCurve curve = aszeta::make_curve(spec);
  std::cout << "curve: y^2 - y = " << aszeta::to_string(curve.f_given)
            << "  (genus " << curve.genus << ")\n";
#ifdef _OPENMP
  std::cout << "openmp: enabled, max threads " << omp_get_max_threads()
            << "\n";
#else
  std::cout << "openmp: disabled at build time (parallel == serial path)\n";
#endif
  std::cout << "  n      serial        openmp     speedup   N_n\n";

  bool all_equal = true;
  for (int n = 1; n <= n_max; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    std::int64_t serial = aszeta::count_points_serial(curve, n);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::int64_t parallel = aszeta::count_points(curve, n);
    double tp = seconds_since(t0);

    std::printf("%3d  %9.4fs  %9.4fs  %8.2fx   %lld\n", n, ts, tp,
                tp > 0 ? ts / tp : 0.0, static_cast<long long>(serial));
    if (serial != parallel) {
      all_equal = false;
      std::cout << "MISMATCH at n = " << n << ": serial " << serial
                << " vs parallel " << parallel << "\n";
    }
  }
  if (!all_equal) {
    std::cout << "FAIL: kernels disagree\n";
    return 1;
  }
  std::cout << "kernels agree on every n\n";
  return 0;
}
