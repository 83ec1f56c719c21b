// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/zeta.hpp"

#include <stdexcept>

namespace aszeta {

namespace {

int128 pow2_128(int e) { return static_cast<int128>(1) << e; }

void check_genus_cap(int g) {
  if (g < 0 || g > kMaxGenus) {
    throw std::overflow_error("genus " + std::to_string(g) +
                              " outside supported range [0, 32]");
  }
}

// s_1..s_upto implied by P via k a_k = -sum s_i a_{k-i}, a_k = 0 past 2g.
std::vector<int128> power_sums(const ZetaPoly& p, int upto) {
  std::vector<int128> s(static_cast<std::size_t>(upto) + 1, 0);
  auto coeff = [&](int k) -> int128 {
    return k <= 2 * p.g ? p.a[static_cast<std::size_t>(k)] : 0;
  };
  for (int m = 1; m <= upto; ++m) {
    int128 acc = 0;
    for (int i = 1; i < m; ++i) acc += s[static_cast<std::size_t>(i)] * coeff(m - i);
    s[static_cast<std::size_t>(m)] = -static_cast<int128>(m) * coeff(m) - acc;
  }
  return s;
}

}  // namespace

ZetaPoly zeta_one() { return ZetaPoly{0, 2, {1}}; }

ZetaPoly zeta_from_counts(const PointCounts& counts, int g) {
  check_genus_cap(g);
  ZetaPoly p;
  p.g = g;
  p.a.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  p.a[0] = 1;

  std::vector<int128> s(static_cast<std::size_t>(g) + 1, 0);
  for (int n = 1; n <= g; ++n) {
    auto it = counts.counts.find(n);
    if (it == counts.counts.end()) {
      throw invalid_counts_error("reconstruction needs N_1..N_" +
                                 std::to_string(g) + "; N_" +
                                 std::to_string(n) + " is missing");
    }
    s[static_cast<std::size_t>(n)] =
        pow2_128(n) + 1 - static_cast<int128>(it->second);
  }
  for (int k = 1; k <= g; ++k) {
    int128 acc = 0;
    for (int i = 1; i <= k; ++i) {
      acc += s[static_cast<std::size_t>(i)] * p.a[static_cast<std::size_t>(k - i)];
    }
    if (acc % k != 0) {
      throw invalid_counts_error(
          "Newton recurrence does not divide at k = " + std::to_string(k) +
          ": counts are not the point counts of a genus-" + std::to_string(g) +
          " curve over F_2");
    }
    p.a[static_cast<std::size_t>(k)] = -acc / k;
  }
  for (int i = 0; i < g; ++i) {
    p.a[static_cast<std::size_t>(2 * g - i)] =
        pow2_128(g - i) * p.a[static_cast<std::size_t>(i)];
  }

  // Counts past g are validation data, not inputs.
  for (const auto& [n, nn] : counts.counts) {
    if (n <= g) continue;
    std::int64_t want = predicted_count(p, n);
    if (want != nn) {
      throw invalid_counts_error(
          "supplied N_" + std::to_string(n) + " = " + std::to_string(nn) +
          " contradicts the reconstructed polynomial (functional equation "
          "predicts " + std::to_string(want) + ")");
    }
  }
  return p;
}

std::int64_t predicted_count(const ZetaPoly& p, int n) {
  if (n < 1 || n > 62) throw std::out_of_range("predicted_count degree");
  std::vector<int128> s = power_sums(p, n);
  int128 nn = pow2_128(n) + 1 - s[static_cast<std::size_t>(n)];
  return static_cast<std::int64_t>(nn);
}

ZetaPoly poly_multiply(const ZetaPoly& p, const ZetaPoly& r) {
  if (p.q != r.q) throw std::invalid_argument("zeta polynomials with different q");
  check_genus_cap(p.g + r.g);
  ZetaPoly out;
  out.g = p.g + r.g;
  out.q = p.q;
  out.a.assign(static_cast<std::size_t>(2 * out.g) + 1, 0);
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    for (std::size_t j = 0; j < r.a.size(); ++j) {
      out.a[i + j] += p.a[i] * r.a[j];
    }
  }
  for (int i = 0; i <= out.g; ++i) {
    if (out.a[static_cast<std::size_t>(2 * out.g - i)] !=
        pow2_128(out.g - i) * out.a[static_cast<std::size_t>(i)]) {
      throw invalid_counts_error("product violates the functional equation");
    }
  }
  return out;
}

std::vector<std::string> validate_weil(const ZetaPoly& p,
                                       const PointCounts& counts) {
  std::vector<std::string> bad;
  int g = p.g;
  if (p.a.size() != static_cast<std::size_t>(2 * g) + 1) {
    bad.push_back("coefficient vector size != 2g + 1");
    return bad;
  }
  if (p.a[0] != 1) bad.push_back("a_0 != 1");
  if (p.a[static_cast<std::size_t>(2 * g)] != pow2_128(g)) {
    bad.push_back("a_2g != 2^g");
  }
  for (int i = 0; i <= g; ++i) {
    if (p.a[static_cast<std::size_t>(2 * g - i)] !=
        pow2_128(g - i) * p.a[static_cast<std::size_t>(i)]) {
      bad.push_back("functional equation fails at i = " + std::to_string(i));
    }
  }
  int128 at_one = 0;
  for (int128 c : p.a) at_one += c;
  if (at_one <= 0) bad.push_back("P(1) <= 0");

  // Supplied counts must be reproduced exactly, and satisfy the Weil bound.
  int upto = 0;
  for (const auto& [n, nn] : counts.counts) {
    (void)nn;
    if (n > upto) upto = n;
  }
  if (upto > 0) {
    std::vector<int128> s = power_sums(p, upto);
    for (const auto& [n, nn] : counts.counts) {
      int128 predicted = pow2_128(n) + 1 - s[static_cast<std::size_t>(n)];
      if (predicted != nn) {
        bad.push_back("recurrence mismatch at n = " + std::to_string(n) +
                      ": supplied " + std::to_string(nn) +
                      ", polynomial gives " + int128_to_string(predicted));
      }
      int128 d = static_cast<int128>(nn) - (pow2_128(n) + 1);
      if (d * d > static_cast<int128>(4) * g * g * pow2_128(n)) {
        bad.push_back("Weil bound fails at n = " + std::to_string(n));
      }
    }
  }
  return bad;
}

std::string zeta_pretty(const ZetaPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    int128 c = p.a[i];
    if (c == 0) continue;
    if (out.empty()) {
      out += (c < 0 ? "-" : "");
    } else {
      out += c < 0 ? " - " : " + ";
    }
    int128 mag = c < 0 ? -c : c;
    bool unit = mag == 1;
    if (!unit || i == 0) out += int128_to_string(mag);
    if (i >= 1) {
      out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json zeta_to_json(const ZetaPoly& p) {
  nlohmann::json j;
  j["q"] = p.q;
  j["g"] = p.g;
  nlohmann::json coeffs = nlohmann::json::array();
  for (int128 c : p.a) coeffs.push_back(int128_to_string(c));
  j["coeffs"] = coeffs;
  return j;
}

ZetaPoly zeta_from_json(const nlohmann::json& j) {
  ZetaPoly p;
  p.q = j.at("q").get<int>();
  p.g = j.at("g").get<int>();
  check_genus_cap(p.g);
  for (const auto& c : j.at("coeffs")) {
    p.a.push_back(int128_from_string(c.get<std::string>()));
  }
  if (p.a.size() != static_cast<std::size_t>(2 * p.g) + 1) {
    throw std::invalid_argument("zeta JSON: coeffs size != 2g + 1");
  }
  return p;
}

}  // namespace aszeta
