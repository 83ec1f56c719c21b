// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace aszeta {

using int128 = __int128;
using uint128 = unsigned __int128;

// --- error taxonomy ---------------------------------------------------------

// Syntax error in the rational-function mini-language; `pos` is the 0-based
// offset of the offending character in the input string.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t pos() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class field_mismatch_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class zero_inversion_error : public std::domain_error {
  using std::domain_error::domain_error;
};

class zero_denominator_error : public std::domain_error {
  using std::domain_error::domain_error;
};

// Laurent expansion requested at a place of degree > 1.
class unsupported_place_error : public std::domain_error {
  using std::domain_error::domain_error;
};

// Artin-Schreier reduction ended pole-free: y^2 - y = f is a split cover.
class split_cover_error : public std::domain_error {
  using std::domain_error::domain_error;
};

// Even pole order at a place of degree > 1: reduction not implemented there.
class unsupported_reduction_error : public std::domain_error {
  using std::domain_error::domain_error;
};

// Fiber product rejected: branch loci are not disjoint.
class not_etale_error : public std::domain_error {
  using std::domain_error::domain_error;
};

// Point counts inconsistent with any genus-g Weil polynomial.
class invalid_counts_error : public std::domain_error {
  using std::domain_error::domain_error;
};

// --- 128-bit integer decimal (de)serialization ------------------------------

std::string int128_to_string(int128 v);
int128 int128_from_string(const std::string& s);

// --- FNV-1a 64-bit hash (cache keys) -----------------------------------------

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex16(std::uint64_t v);

// --- splitmix64 in counter mode ----------------------------------------------
// Stateless: word i of the stream for a given seed. Used for every seeded
// random choice in the library so results are identical across platforms,
// thread counts, and invocation orders.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace aszeta
