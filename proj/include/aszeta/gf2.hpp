// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "aszeta/util.hpp"

namespace aszeta {

// Element of F_2^n, little-endian coefficient bits in the power basis of the
// field modulus. The encodings 0 and 1 are the field's zero and one in every
// degree, so F_2-rational constants lift for free.
using Elt = std::uint32_t;

constexpr int kMaxFieldDegree = 24;

// Arithmetic context for F_2^n, 1 <= n <= 24. Immutable after construction;
// safe to share across threads. All operations are pure.
class BinaryField {
 public:
  // Builds F_2^n with the canonical modulus (see canonical_modulus) and a
  // precomputed trace mask. Throws std::out_of_range unless 1 <= n <= 24.
  explicit BinaryField(int n);

  int degree() const noexcept { return n_; }
  // Modulus encoded with bit i = coefficient of t^i (degree-n bit set).
  std::uint32_t modulus() const noexcept { return modulus_; }
  // Bit i = Tr(t^i) for 0 <= i < n, so Tr(a) = parity(a & trace_mask).
  std::uint32_t trace_mask() const noexcept { return trace_mask_; }
  std::uint64_t order() const noexcept { return std::uint64_t{1} << n_; }

  Elt add(Elt a, Elt b) const noexcept { return a ^ b; }

  // Carry-less product reduced modulo the field modulus.
  Elt mul(Elt a, Elt b) const noexcept {
    std::uint64_t acc = 0;
    std::uint64_t x = a;
    for (std::uint32_t bb = b; bb != 0; bb >>= 1, x <<= 1) {
      acc ^= x & (0 - static_cast<std::uint64_t>(bb & 1));
    }
    return reduce(acc);
  }

  // Multiplicative inverse via a^(2^n - 2). Throws zero_inversion_error on 0.
  Elt inv(Elt a) const;

  // The unique square root, a^(2^(n-1)) (Frobenius is bijective).
  Elt sqrt(Elt a) const noexcept;

  // Absolute trace to F_2 as mask parity; O(1) per element.
  int trace(Elt a) const noexcept {
    return __builtin_parity(a & trace_mask_);
  }

  // Trace by the defining sum a + a^2 + ... + a^(2^(n-1)); for cross-checks.
  int trace_slow(Elt a) const noexcept;

  // Smallest-integer-encoding irreducible of degree n with nonzero constant
  // term (bit i = coefficient of t^i). The constant-term restriction only
  // matters for n = 1, where it selects t + 1 so that the power basis
  // generator is the field's one.
  static std::uint32_t canonical_modulus(int n);

  // Irreducibility over F_2 via gcd(x^(2^d) - x mod p, p) = 1 for all
  // 1 <= d <= deg(p)/2.
  static bool is_irreducible(std::uint64_t p);

 private:
  Elt reduce(std::uint64_t acc) const noexcept {
    for (int i = 2 * n_ - 2; i >= n_; --i) {
      if ((acc >> i) & 1) acc ^= static_cast<std::uint64_t>(modulus_) << (i - n_);
    }
    return static_cast<Elt>(acc);
  }

  int n_;
  std::uint32_t modulus_;
  std::uint32_t trace_mask_;
};

// Checked element-with-context wrapper. The bulk kernels use the raw
// (BinaryField, Elt) interface above; this type carries its field and
// diagnoses cross-field mixing for the operation-level API.
struct FieldElement {
  Elt bits = 0;
  const BinaryField* field = nullptr;
};

BinaryField field_create(int n);
FieldElement make_element(const BinaryField& f, Elt bits);
FieldElement gf_mul(const FieldElement& a, const FieldElement& b);
FieldElement gf_inv(const FieldElement& a);
FieldElement gf_sqrt(const FieldElement& a);
int trace(const FieldElement& a);

}  // namespace aszeta
