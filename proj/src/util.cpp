// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/util.hpp"

#include <algorithm>

namespace aszeta {

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  uint128 u = neg ? static_cast<uint128>(-(v + 1)) + 1 : static_cast<uint128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

int128 int128_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer string");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("sign without digits: " + s);
  constexpr uint128 kMax = ~uint128{0} >> 1;        // 2^127 - 1
  const uint128 limit = neg ? kMax + 1 : kMax;      // |value| bound
  uint128 u = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("bad digit in integer string: " + s);
    }
    auto d = static_cast<uint128>(s[i] - '0');
    if (u > (limit - d) / 10) {
      throw std::out_of_range("integer string overflows 128 bits: " + s);
    }
    u = u * 10 + d;
  }
  if (neg) {
    return u == kMax + 1 ? -static_cast<int128>(kMax) - 1
                         : -static_cast<int128>(u);
  }
  return static_cast<int128>(u);
}

std::string to_hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace aszeta
