// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/reference.hpp"

#include <sstream>

namespace aszeta {

ReferencePair build_reference() {
  ReferencePair r;
  r.c = make_curve(kCurveCSpec);
  r.d = make_curve(kCurveDSpec);
  r.x = fiber_product(r.c, r.d);
  return r;
}

ZetaPoly reference_p_c() {
  ZetaPoly p;
  p.g = kGenusC;
  p.a.assign(2 * kGenusC + 1, 0);
  p.a[0] = 1;
  p.a[10] = -32;
  p.a[20] = 1024;
  return p;
}

ZetaPoly reference_p_y() {
  ZetaPoly p;
  p.g = kGenusY;
  p.a = {1,   1,   2,   4,    4,    4,    8,    8,
         8,   16,  32,  32,   64,   64,   64,   128,
         256, 256, 512, 1024, 1024, 1024, 2048};
  return p;
}

SlopeProfile reference_profile_c() {
  SlopeProfile p;
  p.g = kGenusC;
  p.mult = {{make_rat(1, 2), 20}};
  return p;
}

SlopeProfile reference_profile_y() {
  SlopeProfile p;
  p.g = kGenusY;
  p.mult = {{make_rat(0, 1), 1},
            {make_rat(3, 7), 7},
            {make_rat(1, 2), 6},
            {make_rat(4, 7), 7},
            {make_rat(1, 1), 1}};
  return p;
}

SlopeProfile reference_profile_x() {
  SlopeProfile p;
  p.g = kGenusX;
  p.mult = {{make_rat(0, 1), 1},
            {make_rat(3, 7), 7},
            {make_rat(1, 2), 26},
            {make_rat(4, 7), 7},
            {make_rat(1, 1), 1}};
  return p;
}

namespace {

std::string profile_or_empty(const SlopeProfile& p) {
  std::string k = profile_key(p);
  return k.empty() ? "(empty)" : k;
}

void compare_poly(const char* name, const ZetaPoly& expected,
                  const ZetaPoly& got, std::vector<std::string>* mismatches) {
  if (expected == got) return;
  for (size_t i = 0; i < expected.a.size() || i < got.a.size(); ++i) {
    int128 e = i < expected.a.size() ? expected.a[i] : 0;
    int128 g = i < got.a.size() ? got.a[i] : 0;
    if (e != g) {
      mismatches->push_back(std::string(name) + " coefficient a_" +
                            std::to_string(i) + ": expected " +
                            int128_to_string(e) + ", computed " +
                            int128_to_string(g));
    }
  }
}

void compare_profile(const char* name, const SlopeProfile& expected,
                     const SlopeProfile& got,
                     std::vector<std::string>* mismatches) {
  if (profile_key(expected) != profile_key(got)) {
    mismatches->push_back(std::string(name) + " slope profile: expected {" +
                          profile_or_empty(expected) + "}, computed {" +
                          profile_or_empty(got) + "}");
  }
}

}  // namespace

ReproduceResult reproduce(const ReproduceOptions& opt) {
  ReproduceResult res;
  std::ostringstream rep;
  auto& bad = res.mismatches;

  ReferencePair ref = build_reference();
  const ASCurve& y = ref.x.sum;

  rep << "curves\n";
  rep << "  C: u^2 - u = " << to_string(ref.c.f_given) << "  genus "
      << ref.c.genus << "\n";
  rep << "  D: v^2 - v = " << to_string(ref.d.f_given) << "  genus "
      << ref.d.genus << "\n";
  rep << "  Y = C + D (w = u + v): genus " << y.genus << "\n";
  rep << "  X = C x_line D: genus " << ref.x.genus << " (etale degree 2 over Y)\n";

  auto check_genus = [&](const char* name, int got, int expected) {
    if (got != expected) {
      bad.push_back(std::string("genus of ") + name + ": expected " +
                    std::to_string(expected) + ", computed " +
                    std::to_string(got));
    }
  };
  check_genus("C", ref.c.genus, kGenusC);
  check_genus("D", ref.d.genus, kGenusD);
  check_genus("Y", y.genus, kGenusY);
  check_genus("X", ref.x.genus, kGenusX);

  // Factor numerators from counts. D has genus 0, so P_D = 1 with no
  // counting; C and Y need N_1..N_g.
  PointCounts counts_c = count_series(ref.c, ref.c.genus, opt.cache);
  ZetaPoly p_c = zeta_from_counts(counts_c, ref.c.genus);
  PointCounts counts_y = count_series(y, y.genus, opt.cache);
  ZetaPoly p_y = zeta_from_counts(counts_y, y.genus);
  ZetaPoly p_d = zeta_one();

  compare_poly("P_C", reference_p_c(), p_c, &bad);
  compare_poly("P_Y", reference_p_y(), p_y, &bad);
  rep << "zeta numerators\n";
  rep << "  P_C = " << zeta_pretty(p_c) << "\n";
  rep << "  P_D = " << zeta_pretty(p_d) << "\n";
  rep << "  P_Y = " << zeta_pretty(p_y) << "\n";

  ZetaPoly p_x = poly_multiply(p_c, p_y);
  rep << "  P_X = P_C * P_Y (genus " << p_x.g << ")\n";

  // Direct counts of the fiber product against the product polynomial.
  int verified_to = 0;
  if (opt.verify_product_to > 0) {
    PointCounts counts_x =
        count_series(ref.x, opt.verify_product_to, opt.cache);
    for (int n = 1; n <= opt.verify_product_to; ++n) {
      std::int64_t direct = counts_x.counts.at(n);
      std::int64_t predicted = predicted_count(p_x, n);
      if (direct != predicted) {
        bad.push_back("N_" + std::to_string(n) +
                      "(X): direct count " + std::to_string(direct) +
                      ", product polynomial predicts " +
                      std::to_string(predicted));
      }
    }
    verified_to = opt.verify_product_to;
    rep << "  direct N_n(X) match P_X for n <= " << verified_to << "\n";
  } else {
    rep << "  (direct product verification skipped)\n";
  }

  SlopeProfile prof_c = profile_of(p_c);
  SlopeProfile prof_y = profile_of(p_y);
  SlopeProfile prof_x = profile_of(p_x);
  compare_profile("C", reference_profile_c(), prof_c, &bad);
  compare_profile("Y", reference_profile_y(), prof_y, &bad);
  compare_profile("X", reference_profile_x(), prof_x, &bad);
  rep << "newton slopes (slope:multiplicity)\n";
  rep << "  C: {" << profile_or_empty(prof_c) << "}"
      << (profile_key(prof_c) == "1/2:20" ? "  supersingular" : "") << "\n";
  rep << "  Y: {" << profile_or_empty(prof_y) << "}\n";
  rep << "  X: {" << profile_or_empty(prof_x) << "}\n";

  res.crew = crew_compare(prof_x, prof_y, 2);
  rep << crew_table(res.crew);
  if (!res.crew.euler_ok) {
    bad.push_back("Euler characteristic inconsistency in slope comparison");
  }

  // The expected shape of the comparison: equality exactly at 0 and 1.
  std::vector<std::string> violations;
  for (const auto& row : res.crew.rows) {
    bool boundary = row.lambda == Rat{0, 1} || row.lambda == Rat{1, 1};
    if (boundary && !row.equal) {
      bad.push_back("slope-" + to_string(row.lambda) +
                    " equality expected but chi_X = " +
                    std::to_string(row.chi_x) + " vs " +
                    std::to_string(row.deg_chi_y));
    }
    if (!boundary && !row.equal) violations.push_back(to_string(row.lambda));
  }
  std::string expected_violations = "3/7, 1/2, 4/7";
  std::string got_violations;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) got_violations += ", ";
    got_violations += violations[i];
  }
  if (got_violations != expected_violations) {
    bad.push_back("nonzero-slope violations: expected at " +
                  expected_violations + ", found " +
                  (got_violations.empty() ? "none" : got_violations));
  }

  for (const std::string& m : bad) rep << "MISMATCH: " << m << "\n";
  res.ok = bad.empty();
  if (res.ok) {
    rep << "violations at " << got_violations
        << "; Crew slope-0 equality holds\n";
  }
  res.report = rep.str();

  res.json = {{"ok", res.ok},
              {"genera", {{"C", ref.c.genus},
                          {"D", ref.d.genus},
                          {"Y", y.genus},
                          {"X", ref.x.genus}}},
              {"P_C", zeta_to_json(p_c)},
              {"P_D", zeta_to_json(p_d)},
              {"P_Y", zeta_to_json(p_y)},
              {"P_X", zeta_to_json(p_x)},
              {"verified_product_to", verified_to},
              {"profiles", {{"C", profile_to_json(prof_c)},
                            {"D", profile_to_json(profile_of(p_d))},
                            {"Y", profile_to_json(prof_y)},
                            {"X", profile_to_json(prof_x)}}},
              {"crew", crew_to_json(res.crew)},
              {"mismatches", res.mismatches}};
  return res;
}

}  // namespace aszeta
