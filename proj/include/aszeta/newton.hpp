// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aszeta/zeta.hpp"

namespace aszeta {

// Exact rational in lowest terms, den > 0. Slopes live in [0, 1]; exactness
// is non-negotiable (3/7 is not 0.428571...), so comparisons cross-multiply
// and no floating point appears anywhere.
struct Rat {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num * b.den < b.num * a.den;
  }
};

Rat make_rat(long long num, long long den);  // reduces; throws on den = 0
std::string to_string(const Rat& r);         // "0", "1", "3/7"
Rat rat_from_string(const std::string& s);

// Newton polygon of P with respect to v_2: the 2-adic valuations of the
// nonzero coefficients and their lower convex hull (monotone chain, collinear
// points merged into single segments).
struct NewtonPolygon {
  std::vector<std::pair<int, int>> points;    // (i, v_2(a_i)), a_i != 0
  std::vector<std::pair<int, int>> vertices;  // hull, (0,0) ... (2g, g)
};
NewtonPolygon newton_polygon(const ZetaPoly& p);

// Slope multiplicities: each hull segment of slope lambda and horizontal
// length l contributes h_lambda = l. Sorted by slope.
struct SlopeProfile {
  std::vector<std::pair<Rat, long long>> mult;
  int g = 0;
};
SlopeProfile slope_profile(const NewtonPolygon& np);
SlopeProfile profile_of(const ZetaPoly& p);  // convenience composition

long long profile_multiplicity(const SlopeProfile& p, const Rat& lambda);

// chi_lambda = [lambda = 0] - h_lambda^1 + [lambda = 1] (the curve case of
// the alternating sum over cohomological degrees). Throws std::domain_error
// for lambda outside [0, 1].
long long chi_lambda(const SlopeProfile& p, const Rat& lambda);

// Per-slope comparison chi_lambda(X) vs degree * chi_lambda(Y) over the union
// of slope supports plus {0, 1}.
struct CrewRow {
  Rat lambda;
  long long chi_x = 0;
  long long deg_chi_y = 0;
  bool equal = false;
};
struct CrewReport {
  int degree = 2;
  std::vector<CrewRow> rows;
  long long euler_x = 0;  // sum over lambda of chi_lambda(X) = 2 - 2g(X)
  long long euler_y = 0;
  bool euler_ok = false;
};
CrewReport crew_compare(const SlopeProfile& x, const SlopeProfile& y,
                        int degree);

// Profile invariants: sum h = 2g, sum lambda h = g, h_lambda = h_{1-lambda},
// the denominator of lambda divides h_lambda, every multiplicity positive,
// and hull endpoints (0,0) -> (2g, g). Returns violations (empty = pass).
std::vector<std::string> check_profile_invariants(const SlopeProfile& p);

// "0:1 3/7:7 1/2:6 4/7:7 1:1" — canonical histogram key, slopes ascending.
std::string profile_key(const SlopeProfile& p);

// Renderers.
std::string crew_table(const CrewReport& r);
nlohmann::json crew_to_json(const CrewReport& r);
nlohmann::json profile_to_json(const SlopeProfile& p);

}  // namespace aszeta
