// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/curve.hpp"

#include <cassert>
#include <stdexcept>

namespace aszeta {

namespace {

// 1/t^m at a finite place (t = x - a), or x^m at infinity.
RatFunc reduction_shift(const Place& place, int m) {
  if (place.at_infinity) return RatFunc{monomial(m), kPolyOne};
  return make_ratfunc(kPolyOne, poly_pow(place.poly, m));
}

}  // namespace

ReduceResult as_reduce(const RatFunc& f_in) {
  RatFunc f = make_ratfunc(f_in.num, f_in.den);
  RatFunc shift{kPolyZero, kPolyOne};
  for (;;) {
    auto poles = pole_orders(f);
    if (poles.empty()) {
      throw split_cover_error(
          "reduction of " + to_string(f_in) +
          " is pole-free (constant " + to_string(f) +
          "): y^2 - y = f is a split cover, not a curve");
    }
    const std::pair<Place, int>* even = nullptr;
    for (const auto& pm : poles) {
      if (pm.second % 2 == 0) {
        even = &pm;
        break;
      }
    }
    if (even == nullptr) {
      return ReduceResult{f, shift, std::move(poles)};
    }
    if (even->first.degree() > 1) {
      throw unsupported_reduction_error(
          "even pole order " + std::to_string(even->second) + " at place " +
          to_string(even->first) + " of degree " +
          std::to_string(even->first.degree()) +
          ": reduction implemented at rational places only");
    }
    int m = even->second / 2;
    // Leading Laurent coefficient c of f at the place; over F_2 it can only
    // be 1, and sqrt(1) = 1, so the correction is exactly 1/t^m.
    LaurentSeries lead = laurent_series(f, even->first, 1);
    assert(lead.start_exp == -even->second);
    assert(lead.coeffs.at(0) == 1);
    RatFunc g = reduction_shift(even->first, m);
    f = rf_add(f, rf_add(rf_mul(g, g), g));
    shift = rf_add(shift, g);
  }
}

int genus_from_ram(const std::vector<std::pair<Place, int>>& ram) {
  long long s = 0;
  for (const auto& [place, d] : ram) {
    assert(d > 0 && d % 2 == 1);
    s += static_cast<long long>(d + 1) * place.degree();
  }
  long long two_g_minus_2 = -4 + s;
  if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2) {
    throw std::logic_error("Riemann-Hurwitz gave a non-integral genus");
  }
  return static_cast<int>((two_g_minus_2 + 2) / 2);
}

ASCurve make_curve(const RatFunc& f) {
  ReduceResult r = as_reduce(f);
  ASCurve c;
  c.f_given = make_ratfunc(f.num, f.den);
  c.f_reduced = r.f_reduced;
  c.shift = r.shift;
  c.ram = std::move(r.ram);
  c.genus = genus_from_ram(c.ram);
  // f_reduced - f_given = shift^2 + shift, as exact rational functions.
  RatFunc delta = rf_add(c.f_reduced, c.f_given);
  RatFunc wp = rf_add(rf_mul(c.shift, c.shift), c.shift);
  if (!(delta == wp)) {
    throw std::logic_error("reduction shift identity violated");
  }
  return c;
}

ASCurve make_curve(const std::string& spec) {
  return make_curve(parse_ratfunc(spec));
}

ASCurve sum_cover(const ASCurve& c, const ASCurve& d) {
  return make_curve(rf_add(c.f_given, d.f_given));
}

bool check_etale(const ASCurve& c, const ASCurve& d) {
  for (const auto& [pc, oc] : c.ram) {
    for (const auto& [pd, od] : d.ram) {
      if (pc == pd) return false;
    }
  }
  return true;
}

FiberProduct fiber_product(const ASCurve& c, const ASCurve& d) {
  if (!check_etale(c, d)) {
    throw not_etale_error(
        "fiber product rejected: branch loci of the factors intersect "
        "(only the disjoint, certified-etale case is supported)");
  }
  FiberProduct x;
  x.left = c;
  x.right = d;
  x.sum = sum_cover(c, d);
  x.genus = c.genus + d.genus + x.sum.genus;
  return x;
}

}  // namespace aszeta
