// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aszeta/gf2.hpp"
#include "aszeta/util.hpp"

namespace aszeta {

// Univariate polynomial over F_2, bit i = coefficient of x^i, packed into a
// 128-bit word (degree <= 127, far above anything this library constructs).
// The packed representation is canonical by construction: equality of values
// is equality of polynomials.
struct Poly2 {
  uint128 bits = 0;

  constexpr Poly2() = default;
  constexpr explicit Poly2(uint128 b) : bits(b) {}

  friend constexpr bool operator==(Poly2 a, Poly2 b) { return a.bits == b.bits; }
  // Integer-encoding order: grades by degree, then by coefficient bits. Used
  // only to make factor lists and place maps deterministic.
  friend constexpr bool operator<(Poly2 a, Poly2 b) { return a.bits < b.bits; }

  constexpr bool is_zero() const { return bits == 0; }
  constexpr bool is_one() const { return bits == 1; }
};

inline constexpr Poly2 kPolyZero{0};
inline constexpr Poly2 kPolyOne{1};
inline constexpr Poly2 kPolyX{2};

// Degree; -1 stands in for the zero polynomial's "-infinity".
int deg(Poly2 p);

constexpr Poly2 poly_add(Poly2 a, Poly2 b) { return Poly2{a.bits ^ b.bits}; }
Poly2 poly_mul(Poly2 a, Poly2 b);              // asserts deg a + deg b <= 127
std::pair<Poly2, Poly2> poly_divmod(Poly2 a, Poly2 b);
Poly2 poly_mod(Poly2 a, Poly2 b);
Poly2 poly_div(Poly2 a, Poly2 b);
Poly2 poly_gcd(Poly2 a, Poly2 b);
Poly2 poly_pow(Poly2 p, int k);
Poly2 poly_derivative(Poly2 p);
Poly2 monomial(int e);                          // x^e

// p(x + 1) (the only nontrivial F_2-rational substitution).
Poly2 poly_shift1(Poly2 p);
// x^deg(p) * p(1/x): coefficient reversal within the degree.
Poly2 poly_reverse(Poly2 p);
// Largest e with x^e | p (p != 0).
int poly_val_x(Poly2 p);

// Evaluation at an element of F_2^n (coefficients lift canonically).
Elt poly_eval(Poly2 p, const BinaryField& f, Elt x);

// True iff p is irreducible over F_2 (degree >= 1).
bool poly_irreducible(Poly2 p);

// Complete factorization over F_2: squarefree decomposition (characteristic-2
// derivative/square detection), then distinct-degree, then Cantor-Zassenhaus
// equal-degree splitting driven by a deterministic seeded element source.
// Factors are sorted in increasing integer-encoding order. Throws
// std::domain_error on the zero polynomial.
std::vector<std::pair<Poly2, int>> factor_f2(Poly2 p);

// Pretty form with terms in increasing exponent order: "0", "1", "x",
// "1 + x^2 + x^21". Round-trips through the rational-function parser.
std::string to_string(Poly2 p);

}  // namespace aszeta
