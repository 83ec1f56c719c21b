// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/ratfunc.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace aszeta {

RatFunc make_ratfunc(Poly2 num, Poly2 den) {
  if (den.is_zero()) throw zero_denominator_error("zero denominator");
  if (num.is_zero()) return RatFunc{kPolyZero, kPolyOne};
  Poly2 g = poly_gcd(num, den);
  return RatFunc{poly_div(num, g), poly_div(den, g)};
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  return make_ratfunc(
      poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
      poly_mul(a.den, b.den));
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return make_ratfunc(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

Place place_infinity() { return Place{true, kPolyZero}; }

Place place_finite(Poly2 irreducible) {
  assert(poly_irreducible(irreducible));
  return Place{false, irreducible};
}

std::string to_string(const Place& p) {
  return p.at_infinity ? "inf" : to_string(p.poly);
}

std::vector<std::pair<Place, int>> pole_orders(const RatFunc& f) {
  std::vector<std::pair<Place, int>> out;
  if (f.is_zero()) return out;
  if (!f.den.is_one()) {
    for (const auto& [q, m] : factor_f2(f.den)) {
      out.emplace_back(place_finite(q), m);
    }
  }
  if (deg(f.num) > deg(f.den)) {
    out.emplace_back(place_infinity(), deg(f.num) - deg(f.den));
  }
  return out;  // factor_f2 is sorted; infinity sorts last by construction
}

EvalResult eval_ratfunc(const RatFunc& f, const BinaryField& field, Elt x) {
  Elt dv = poly_eval(f.den, field, x);
  if (dv == 0) return EvalResult{true, 0};
  Elt nv = poly_eval(f.num, field, x);
  return EvalResult{false, field.mul(nv, field.inv(dv))};
}

namespace {

// Coefficients c[0..count-1] of the power series (n/d) mod t^count for d with
// d(0) = 1, polynomials given as bit masks in t.
std::vector<int> series_divide(Poly2 n, Poly2 d, int count) {
  assert((d.bits & 1) == 1);
  std::vector<int> c(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i) {
    // c_i = n_i - sum_{j<i} c_j d_{i-j}  (mod 2)
    int v = i <= deg(n) ? static_cast<int>((n.bits >> i) & 1) : 0;
    for (int j = 0; j < i; ++j) {
      int k = i - j;
      if (k <= deg(d)) v ^= c[static_cast<std::size_t>(j)] &
                            static_cast<int>((d.bits >> k) & 1);
    }
    c[static_cast<std::size_t>(i)] = v;
  }
  return c;
}

}  // namespace

LaurentSeries laurent_series(const RatFunc& f, const Place& place, int count) {
  if (place.degree() != 1) {
    throw unsupported_place_error(
        "Laurent expansion only at degree-1 places, got " + to_string(place));
  }
  if (count <= 0) return LaurentSeries{0, {}};
  if (f.is_zero()) {
    return LaurentSeries{0, std::vector<int>(static_cast<std::size_t>(count), 0)};
  }
  Poly2 n = f.num;
  Poly2 d = f.den;
  int val;
  if (place.at_infinity) {
    // x = 1/t: f = t^(deg d - deg n) * rev(n)/rev(d), both units at t = 0.
    val = deg(d) - deg(n);
    n = poly_reverse(n);
    d = poly_reverse(d);
  } else {
    // Shift the place's root to 0: t = x - a. Over F_2, a is 0 or 1.
    if (place.poly == Poly2{3}) {  // x + 1
      n = poly_shift1(n);
      d = poly_shift1(d);
    } else {
      assert(place.poly == kPolyX);
    }
    int vn = n.is_zero() ? 0 : poly_val_x(n);
    int vd = poly_val_x(d);
    assert(vn == 0 || vd == 0);  // coprimality
    val = vn - vd;
    n = Poly2{n.bits >> vn};
    d = Poly2{d.bits >> vd};
  }
  return LaurentSeries{val, series_divide(n, d, count)};
}

std::vector<int> laurent_coefficients(const RatFunc& f, const Place& place,
                                      int count) {
  return laurent_series(f, place, count).coeffs;
}

// --- parser ------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RatFunc run() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw parse_error("unexpected character", pos_);
    return v;
  }

 private:
  RatFunc expr() {
    RatFunc v = quot();
    while (true) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        ++pos_;
        v = rf_add(v, quot());
      } else {
        return v;
      }
    }
  }

  RatFunc quot() {
    RatFunc v = term();
    while (true) {
      skip_ws();
      if (peek() != '/') return v;
      std::size_t slash = pos_++;
      RatFunc d = term();
      if (d.is_zero()) throw parse_error("division by zero", slash);
      v = rf_mul(v, make_ratfunc(d.den, d.num));
    }
  }

  RatFunc term() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      RatFunc v = expr();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return v;
    }
    return monomial();
  }

  RatFunc monomial() {
    skip_ws();
    std::size_t start = pos_;
    bool have_any = false;
    int coeff = 1;
    if (std::isdigit(peek_raw())) {
      have_any = true;
      unsigned long long c = 0;
      while (std::isdigit(peek_raw())) {
        c = c * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
        if (c > 1'000'000'000ull) c = (c % 2) + 2;  // only parity matters
        ++pos_;
      }
      coeff = static_cast<int>(c % 2);
    }
    Poly2 p = coeff ? kPolyOne : kPolyZero;
    skip_ws();
    if (peek() == 'x') {
      have_any = true;
      ++pos_;
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(peek_raw())) {
          throw parse_error("expected exponent after '^'", pos_);
        }
        unsigned long long ee = 0;
        while (std::isdigit(peek_raw())) {
          ee = ee * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
          if (ee > 127) throw parse_error("exponent too large (max 127)", pos_);
          ++pos_;
        }
        e = static_cast<int>(ee);
      }
      p = coeff ? monomial_poly(e) : kPolyZero;
    }
    if (!have_any) throw parse_error("expected a term", start);
    return RatFunc{p, kPolyOne};
  }

  static Poly2 monomial_poly(int e) { return aszeta::monomial(e); }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).run(); }

std::string to_string(const RatFunc& f) {
  // Number of terms decides parenthesization.
  auto popcount = [](uint128 b) {
    return __builtin_popcountll(static_cast<std::uint64_t>(b)) +
           __builtin_popcountll(static_cast<std::uint64_t>(b >> 64));
  };
  if (f.den.is_one()) return to_string(f.num);
  std::string n = to_string(f.num);
  std::string d = to_string(f.den);
  if (popcount(f.num.bits) > 1) n = "(" + n + ")";
  if (popcount(f.den.bits) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace aszeta
