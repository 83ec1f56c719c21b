// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aszeta/gf2.hpp"
#include "aszeta/poly2.hpp"

namespace aszeta {

// f(x) in F_2(x) as a coprime pair. Over F_2 every nonzero polynomial is
// monic, so the coprime representation is canonical outright.
struct RatFunc {
  Poly2 num = kPolyZero;
  Poly2 den = kPolyOne;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;
  }
  bool is_zero() const { return num.is_zero(); }
};

// Canonicalizing constructor; throws zero_denominator_error.
RatFunc make_ratfunc(Poly2 num, Poly2 den);
RatFunc rf_add(const RatFunc& a, const RatFunc& b);  // == subtraction over F_2
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);

// Closed point of the projective line over F_2.
struct Place {
  bool at_infinity = false;
  Poly2 poly = kPolyZero;  // monic irreducible; unused when at_infinity

  int degree() const { return at_infinity ? 1 : deg(poly); }

  friend bool operator==(const Place& a, const Place& b) {
    return a.at_infinity == b.at_infinity &&
           (a.at_infinity || a.poly == b.poly);
  }
  // Finite places in integer-encoding order, then infinity.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.at_infinity != b.at_infinity) return !a.at_infinity;
    if (a.at_infinity) return false;
    return a.poly < b.poly;
  }
};

Place place_infinity();
Place place_finite(Poly2 irreducible);
std::string to_string(const Place& p);  // "x", "x + 1", "inf"

// Poles with orders, sorted by place; infinity included when
// deg(num) > deg(den).
std::vector<std::pair<Place, int>> pole_orders(const RatFunc& f);

// Evaluation at x in F_2^n; pole when den(x) = 0 (num(x) != 0 then, by
// coprimality).
struct EvalResult {
  bool is_pole = false;
  Elt value = 0;
};
EvalResult eval_ratfunc(const RatFunc& f, const BinaryField& field, Elt x);

// Laurent expansion of f at a degree-1 place (x, x + 1, or infinity) in the
// local parameter (x - a resp. 1/x): coefficients are in F_2. start_exp is
// the valuation of f at the place — the most negative exponent when f has a
// pole there. coeffs[i] is the coefficient of t^(start_exp + i).
struct LaurentSeries {
  int start_exp = 0;
  std::vector<int> coeffs;
};
LaurentSeries laurent_series(const RatFunc& f, const Place& place, int count);
// Spec-shaped convenience: just the first `count` coefficients starting at
// the most negative exponent. Throws unsupported_place_error for places of
// degree > 1.
std::vector<int> laurent_coefficients(const RatFunc& f, const Place& place,
                                      int count);

// Rational-function mini-language.
//
//   expr     := quot (('+'|'-') quot)*        # '-' == '+' over F_2
//   quot     := term ('/' term)*
//   term     := '(' expr ')' | monomial
//   monomial := coeff? ('x' ('^' nat)?)?      # at least one part present;
//                                             # coeff reduced mod 2
//   whitespace ignored.
//
// This is a superset of a plain "term / term" quotient grammar: it accepts
// sums of quotients so that sum-cover right-hand sides parse as printed.
RatFunc parse_ratfunc(const std::string& text);  // throws parse_error

// Pretty form: "num", "num/den", parenthesizing multi-term operands, terms in
// increasing exponent order. parse(to_string(f)) == f.
std::string to_string(const RatFunc& f);

}  // namespace aszeta
