// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/poly2.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace aszeta {

int deg(Poly2 p) {
  if (p.bits == 0) return -1;
  std::uint64_t hi = static_cast<std::uint64_t>(p.bits >> 64);
  if (hi != 0) return 127 - __builtin_clzll(hi);
  return 63 - __builtin_clzll(static_cast<std::uint64_t>(p.bits));
}

Poly2 poly_mul(Poly2 a, Poly2 b) {
  if (a.bits == 0 || b.bits == 0) return kPolyZero;
  assert(deg(a) + deg(b) <= 127 && "product exceeds 128-bit packing");
  if (deg(a) < deg(b)) std::swap(a, b);  // iterate over the sparser operand
  uint128 acc = 0;
  uint128 x = a.bits;
  for (uint128 bb = b.bits; bb != 0; bb >>= 1, x <<= 1) {
    if (bb & 1) acc ^= x;
  }
  return Poly2{acc};
}

std::pair<Poly2, Poly2> poly_divmod(Poly2 a, Poly2 b) {
  if (b.bits == 0) throw std::domain_error("polynomial division by zero");
  int db = deg(b);
  uint128 q = 0;
  uint128 r = a.bits;
  for (int i = deg(a); i >= db; i = deg(Poly2{r})) {
    int sh = i - db;
    q |= uint128{1} << sh;
    r ^= b.bits << sh;
  }
  return {Poly2{q}, Poly2{r}};
}

Poly2 poly_mod(Poly2 a, Poly2 b) { return poly_divmod(a, b).second; }
Poly2 poly_div(Poly2 a, Poly2 b) { return poly_divmod(a, b).first; }

Poly2 poly_gcd(Poly2 a, Poly2 b) {
  while (b.bits != 0) {
    Poly2 t = poly_mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

Poly2 poly_pow(Poly2 p, int k) {
  Poly2 r = kPolyOne;
  for (int i = 0; i < k; ++i) r = poly_mul(r, p);
  return r;
}

Poly2 poly_derivative(Poly2 p) {
  // d/dx x^i = i x^(i-1); over F_2 only odd i survive.
  uint128 r = 0;
  for (int i = 1; i <= deg(p); i += 2) {
    if ((p.bits >> i) & 1) r |= uint128{1} << (i - 1);
  }
  return Poly2{r};
}

Poly2 monomial(int e) {
  assert(e >= 0 && e <= 127);
  return Poly2{uint128{1} << e};
}

Poly2 poly_shift1(Poly2 p) {
  // Horner in (x + 1): fold from the top coefficient down.
  Poly2 r = kPolyZero;
  for (int i = deg(p); i >= 0; --i) {
    r = Poly2{(r.bits << 1) ^ r.bits ^ ((p.bits >> i) & 1)};
  }
  return r;
}

Poly2 poly_reverse(Poly2 p) {
  int d = deg(p);
  uint128 r = 0;
  for (int i = 0; i <= d; ++i) {
    if ((p.bits >> i) & 1) r |= uint128{1} << (d - i);
  }
  return Poly2{r};
}

int poly_val_x(Poly2 p) {
  assert(p.bits != 0);
  std::uint64_t lo = static_cast<std::uint64_t>(p.bits);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(p.bits >> 64));
}

Elt poly_eval(Poly2 p, const BinaryField& f, Elt x) {
  Elt r = 0;
  for (int i = deg(p); i >= 0; --i) {
    r = f.mul(r, x) ^ static_cast<Elt>((p.bits >> i) & 1);
  }
  return r;
}

namespace {

Poly2 poly_mulmod(Poly2 a, Poly2 b, Poly2 m) {
  return poly_mod(poly_mul(a, b), m);
}

// Inverse image of the Frobenius square: p must have even exponents only.
Poly2 poly_sqrt_of_square(Poly2 p) {
  uint128 r = 0;
  for (int i = 0; i <= deg(p); i += 2) {
    assert(i + 1 > deg(p) || ((p.bits >> (i + 1)) & 1) == 0);
    if ((p.bits >> i) & 1) r |= uint128{1} << (i / 2);
  }
  return Poly2{r};
}

// Characteristic-2 squarefree decomposition. Appends pairwise-coprime
// squarefree components (q, m) with p = prod q^m.
//
// With e_i = v_{p_i}(p): c = gcd(p, p') holds odd-e_i factors to e_i - 1 and
// even-e_i factors to e_i, so w = p/c is the radical of the odd-multiplicity
// part. The inner loop peels w against c, exposing multiplicity-m factors at
// step m; what remains of c afterwards is exactly the even-multiplicity part,
// a perfect square handled by recursion.
void squarefree(Poly2 p, int mult, std::vector<std::pair<Poly2, int>>& out) {
  if (deg(p) <= 0) return;
  Poly2 d = poly_derivative(p);
  if (d.is_zero()) {
    squarefree(poly_sqrt_of_square(p), 2 * mult, out);
    return;
  }
  Poly2 c = poly_gcd(p, d);
  Poly2 w = poly_div(p, c);
  for (int i = 1; deg(w) > 0; ++i) {
    Poly2 y = poly_gcd(w, c);
    Poly2 z = poly_div(w, y);
    if (deg(z) > 0) out.emplace_back(z, mult * i);
    w = y;
    c = poly_div(c, y);
  }
  if (deg(c) > 0) squarefree(poly_sqrt_of_square(c), 2 * mult, out);
}

// Deterministic element source for equal-degree splitting; the counter is
// shared across one factor_f2 call.
constexpr std::uint64_t kFactorSeed = 0xa52e7a57ee01ull;

// Equal-degree splitting (Cantor-Zassenhaus, char 2): p is squarefree, every
// irreducible factor has degree d. Appends the factors.
void equal_degree(Poly2 p, int d, std::uint64_t& ctr,
                  std::vector<Poly2>& out) {
  if (deg(p) == d) {
    out.push_back(p);
    return;
  }
  for (int attempt = 0; attempt < 4096; ++attempt) {
    // Random element of F_2[x]/(p) from the seeded stream.
    uint128 bits = 0;
    int nbits = deg(p);
    for (int w = 0; w * 64 < nbits; ++w) {
      bits |= uint128{splitmix64_at(kFactorSeed, ctr++)} << (w * 64);
    }
    bits &= (uint128{1} << nbits) - 1;
    Poly2 a{bits};
    if (deg(a) < 1) continue;
    // Trace map T(a) = a + a^2 + ... + a^(2^(d-1)) lands in F_2 on each
    // residue field, so gcd(T(a), p) collects the factors where it hits 0.
    Poly2 t = a;
    Poly2 acc = a;
    for (int i = 1; i < d; ++i) {
      t = poly_mulmod(t, t, p);
      acc = poly_add(acc, t);
    }
    acc = poly_mod(acc, p);
    Poly2 g = poly_gcd(acc, p);
    if (deg(g) > 0 && deg(g) < deg(p)) {
      equal_degree(g, d, ctr, out);
      equal_degree(poly_div(p, g), d, ctr, out);
      return;
    }
    Poly2 g2 = poly_gcd(poly_add(acc, kPolyOne), p);
    if (deg(g2) > 0 && deg(g2) < deg(p)) {
      equal_degree(g2, d, ctr, out);
      equal_degree(poly_div(p, g2), d, ctr, out);
      return;
    }
  }
  throw std::logic_error("equal-degree splitting failed to converge");
}

// Distinct-degree factorization of a squarefree p, then equal-degree
// splitting of each block.
void distinct_degree(Poly2 p, std::uint64_t& ctr, std::vector<Poly2>& out) {
  Poly2 h = poly_mod(kPolyX, p);  // x^(2^d) mod p, advanced by squaring
  for (int d = 1; deg(p) >= 2 * d; ++d) {
    h = poly_mulmod(h, h, p);
    Poly2 g = poly_gcd(poly_add(h, kPolyX), p);
    if (deg(g) > 0) {
      equal_degree(g, d, ctr, out);
      p = poly_div(p, g);
      h = poly_mod(h, p);
    }
  }
  if (deg(p) > 0) out.push_back(p);  // leftover is irreducible
}

}  // namespace

bool poly_irreducible(Poly2 p) {
  int n = deg(p);
  if (n < 1) return false;
  Poly2 h = poly_mod(kPolyX, p);
  for (int d = 1; d <= n / 2; ++d) {
    h = poly_mulmod(h, h, p);
    if (poly_gcd(poly_add(h, kPolyX), p) != kPolyOne) return false;
  }
  return true;
}

std::vector<std::pair<Poly2, int>> factor_f2(Poly2 p) {
  if (p.bits == 0) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<Poly2, int>> components;
  squarefree(p, 1, components);
  std::uint64_t ctr = 0;
  std::vector<std::pair<Poly2, int>> out;
  for (const auto& [q, m] : components) {
    std::vector<Poly2> irr;
    distinct_degree(q, ctr, irr);
    for (Poly2 f : irr) out.emplace_back(f, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Poly2 p) {
  if (p.bits == 0) return "0";
  std::string s;
  for (int i = 0; i <= deg(p); ++i) {
    if (((p.bits >> i) & 1) == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += "1";
    } else if (i == 1) {
      s += "x";
    } else {
      s += "x^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace aszeta
