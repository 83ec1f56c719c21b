// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aszeta/curve.hpp"

namespace aszeta {

// Exact point counts over F_2^n keyed by n. q is fixed at 2.
struct PointCounts {
  std::string curve_id;
  int q = 2;
  std::map<int, std::int64_t> counts;
};

// Content hash (FNV-1a 64) of the canonical printed reduced data.
std::string curve_id(const ASCurve& c);
std::string curve_id(const FiberProduct& x);

// N_n of the smooth projective model: ramified places of degree 1 contribute
// 1; a regular x contributes 2 or 0 by Tr(f_reduced(x)); infinity follows the
// same rule through the Laurent constant term. Precondition 1 <= n <= 24.
//
// count_points partitions the x-range across OpenMP workers (bit-identical to
// the serial reference: partial sums are exact integers); count_points_serial
// is the plain loop kept as the reference implementation.
std::int64_t count_points(const ASCurve& c, int n);
std::int64_t count_points_serial(const ASCurve& c, int n);

// Fiber products: the fiber over x is the product of the factor fibers.
std::int64_t count_fiber_product(const FiberProduct& x, int n);
std::int64_t count_fiber_product_serial(const FiberProduct& x, int n);

// One JSON document per curve_id under a cache directory; corrupt documents
// are recomputed and overwritten with a warning on stderr. Writes are
// tmp-file + atomic rename.
class CountCache {
 public:
  explicit CountCache(std::string dir) : dir_(std::move(dir)) {}
  const std::string& dir() const { return dir_; }

  // Cached counts for this id; empty map when absent or invalid.
  std::map<int, std::int64_t> load(const std::string& id) const;
  void store(const std::string& id,
             const std::map<int, std::int64_t>& counts) const;

 private:
  std::string dir_;
};

// All N_n for 1 <= n <= n_max, consulting/updating the cache when given.
PointCounts count_series(const ASCurve& c, int n_max,
                         const CountCache* cache = nullptr);
PointCounts count_series(const FiberProduct& x, int n_max,
                         const CountCache* cache = nullptr);

// Structural checks on recorded counts: the fiber-size cap (2 or 4 points
// per place), the Weil bound |N_n - 2^n - 1| <= 2g 2^(n/2) (compared via
// squares, no floats), and monotonicity N_m <= N_n for m | n. Returns
// human-readable violations (empty = pass).
std::vector<std::string> check_count_invariants(const PointCounts& pc, int g,
                                                bool product);

}  // namespace aszeta
