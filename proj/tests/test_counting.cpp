// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "aszeta/counting.hpp"
#include "aszeta/curve.hpp"

using namespace aszeta;

namespace {

constexpr const char* kSpecC = "(1+x^2+x^8+x^14+x^18)/x^21";
constexpr const char* kSpecD = "1/(x+1)";

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("aszeta-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("reference curve counts over small fields") {
  ASCurve c = make_curve(kSpecC);
  // x = 0 ramified (1 point), x = 1 has trace 1 (0 points), infinity is a
  // zero of f so contributes 2.
  CHECK(count_points(c, 1) == 3);
  CHECK(count_points(c, 10) == 705);

  ASCurve d = make_curve(kSpecD);
  CHECK(count_points(d, 1) == 3);  // rational curve: q + 1

  // Frozen oracle series for C, n = 1..10.
  const std::int64_t expected[11] = {0,  3,  5,   9,   17,  33,
                                     65, 129, 257, 513, 705};
  PointCounts pc = count_series(c, 10);
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(pc.counts.at(n) == expected[n]);
  }
  CHECK(check_count_invariants(pc, c.genus, false).empty());
}

TEST_CASE("sum cover counts") {
  ASCurve c = make_curve(kSpecC);
  ASCurve d = make_curve(kSpecD);
  ASCurve y = sum_cover(c, d);
  // Frozen oracle series for Y, n = 1..11 (n = 1, 2 also by hand: x = 0, 1
  // ramified; over F_4 the two non-rational x give trace-0 values).
  const std::int64_t expected[12] = {0,  4,   8,    16,  16,  24,
                                     80, 144, 256,  520, 1168, 2072};
  PointCounts pc = count_series(y, 11);
  for (int n = 1; n <= 11; ++n) {
    CAPTURE(n);
    CHECK(pc.counts.at(n) == expected[n]);
  }
  CHECK(check_count_invariants(pc, y.genus, false).empty());
}

TEST_CASE("counting uses the reduced model") {
  // f = 1/x^2 is the genus-0 curve of 1/x: N_n = 2^n + 1.
  ASCurve c = make_curve("1/x^2");
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(count_points(c, n) == (std::int64_t{1} << n) + 1);
  }
}

TEST_CASE("fiber product counts match the frozen series") {
  ASCurve c = make_curve(kSpecC);
  ASCurve d = make_curve(kSpecD);
  FiberProduct x = fiber_product(c, d);
  // n = 1 by hand: x = 0 gives 1 * 0, x = 1 gives 0 * 1, infinity 2 * 2.
  CHECK(count_fiber_product(x, 1) == 4);
  const std::int64_t expected[13] = {0,  4,   8,    16,   16,  24,  80,
                                     144, 256, 520, 848, 2072, 4192};
  PointCounts pc = count_series(x, 12);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(pc.counts.at(n) == expected[n]);
  }
  CHECK(check_count_invariants(pc, x.genus, true).empty());
}

TEST_CASE("product of two disjoint genus-0 covers is a genus-1 curve") {
  FiberProduct x = fiber_product(make_curve("1/x"), make_curve("1/(x+1)"));
  REQUIRE(x.genus == 1);
  // Frozen oracle counts; note N_1 = 4 != 2^1 + 1, as befits genus 1.
  const std::int64_t expected[7] = {0, 4, 8, 4, 16, 44, 56};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(count_fiber_product(x, n) == expected[n]);
  }
}

TEST_CASE("parallel and serial kernels agree exactly") {
  ASCurve c = make_curve(kSpecC);
  ASCurve d = make_curve(kSpecD);
  ASCurve y = sum_cover(c, d);
  FiberProduct x = fiber_product(c, d);
  for (int n = 1; n <= 14; ++n) {
    CAPTURE(n);
    REQUIRE(count_points(c, n) == count_points_serial(c, n));
    REQUIRE(count_points(y, n) == count_points_serial(y, n));
    REQUIRE(count_fiber_product(x, n) == count_fiber_product_serial(x, n));
  }
}

TEST_CASE("count bounds") {
  ASCurve c = make_curve(kSpecC);
  CHECK_THROWS_AS(count_points(c, 0), std::out_of_range);
  CHECK_THROWS_AS(count_points(c, 25), std::out_of_range);
}

TEST_CASE("curve ids are content hashes of the reduced data") {
  ASCurve c = make_curve(kSpecC);
  ASCurve c2 = make_curve("(1+x^2+x^8+x^14+x^18)/x^21");
  CHECK(curve_id(c) == curve_id(c2));
  CHECK(curve_id(c) != curve_id(make_curve(kSpecD)));
  CHECK(curve_id(c).size() == 16);
  // Reduction-equivalent inputs share an id.
  CHECK(curve_id(make_curve("1/x^2")) == curve_id(make_curve("1/x")));
  // Product ids depend on both factors.
  FiberProduct x = fiber_product(c, make_curve(kSpecD));
  CHECK(curve_id(x) != curve_id(c));
}

TEST_CASE("cache: second call replays stored counts") {
  TempDir tmp;
  CountCache cache(tmp.path.string());
  ASCurve d = make_curve(kSpecD);
  PointCounts first = count_series(d, 6, &cache);
  // The cache document now exists and validates.
  auto loaded = cache.load(curve_id(d));
  REQUIRE(loaded.size() == 6);
  CHECK(loaded == first.counts);
  PointCounts second = count_series(d, 6, &cache);
  CHECK(second.counts == first.counts);
  // A shorter request is served fully from cache.
  PointCounts third = count_series(d, 3, &cache);
  CHECK(third.counts.size() == 3);
  CHECK(third.counts.at(3) == first.counts.at(3));
}

TEST_CASE("cache: corrupt documents are recomputed and overwritten") {
  TempDir tmp;
  CountCache cache(tmp.path.string());
  ASCurve d = make_curve(kSpecD);
  PointCounts first = count_series(d, 4, &cache);
  // Clobber the document.
  std::filesystem::path doc;
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
    doc = entry.path();
  }
  REQUIRE_FALSE(doc.empty());
  {
    std::ofstream out(doc);
    out << "{ not json";
  }
  PointCounts again = count_series(d, 4, &cache);
  CHECK(again.counts == first.counts);
  // And the rewritten document is valid again.
  CHECK(cache.load(curve_id(d)).size() == 4);
}

TEST_CASE("cache: wrong-count documents fail validation") {
  TempDir tmp;
  CountCache cache(tmp.path.string());
  ASCurve d = make_curve(kSpecD);
  count_series(d, 3, &cache);
  std::filesystem::path doc;
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
    doc = entry.path();
  }
  // Tamper: claim a different curve_id inside the document.
  {
    std::ofstream out(doc);
    out << R"({"curve_id":"0000000000000000","q":2,"field_moduli":{"1":"0x3"},)"
        << R"("counts":{"1":99}})";
  }
  CHECK(cache.load(curve_id(d)).empty());
  PointCounts again = count_series(d, 3, &cache);
  CHECK(again.counts.at(1) == 3);
}

}  // TEST_SUITE
