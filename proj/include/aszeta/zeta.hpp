// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "aszeta/counting.hpp"
#include "aszeta/util.hpp"

namespace aszeta {

// Zeta-function numerator P(t) = prod (1 - alpha_i t): exact integer
// coefficients a_0..a_2g, a_0 = 1, a_2g = q^g, functional equation
// a_{2g-i} = q^(g-i) a_i. q = 2 throughout; degree cap 2g <= 64 keeps every
// intermediate product inside 128 bits with ample headroom.
struct ZetaPoly {
  int g = 0;
  int q = 2;
  std::vector<int128> a;  // size 2g + 1

  friend bool operator==(const ZetaPoly& p, const ZetaPoly& r) {
    return p.g == r.g && p.q == r.q && p.a == r.a;
  }
};

constexpr int kMaxGenus = 32;  // 2g <= 64

// P = 1 (genus 0).
ZetaPoly zeta_one();

// Newton's identities on power sums s_n = q^n + 1 - N_n give a_1..a_g (the
// recurrence k a_k = -sum_{i<=k} s_i a_{k-i} must divide exactly); the
// functional equation fills a_{g+1}..a_{2g}. Counts beyond g, when supplied,
// are validated against the result. Throws invalid_counts_error on inexact
// division, missing N_1..N_g, or validation failure.
ZetaPoly zeta_from_counts(const PointCounts& counts, int g);

// N_n implied by P: run the recurrence forward (a_k = 0 past 2g).
std::int64_t predicted_count(const ZetaPoly& p, int n);

// Coefficient convolution; genera add; the product's functional equation is
// re-verified. Throws std::overflow_error if the combined genus exceeds
// kMaxGenus and invalid_counts_error if the product violates the functional
// equation (cannot happen for genuine Weil polynomials).
ZetaPoly poly_multiply(const ZetaPoly& p, const ZetaPoly& r);

// Weil consistency report: a_0 = 1, a_2g = q^g, functional equation, Weil
// bound on every supplied count, agreement of predicted_count with every
// supplied N_n, and P(1) > 0. Empty result = all checks pass.
std::vector<std::string> validate_weil(const ZetaPoly& p,
                                       const PointCounts& counts);

// "1 - 32t^10 + 1024t^20" (increasing powers, zero terms omitted).
std::string zeta_pretty(const ZetaPoly& p);

// {"q":2, "g":g, "coeffs":["1","-32",...]} — decimal strings, so consumers
// never face integer-width ambiguity.
nlohmann::json zeta_to_json(const ZetaPoly& p);
ZetaPoly zeta_from_json(const nlohmann::json& j);

}  // namespace aszeta
