// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/gf2.hpp"

#include <cassert>
#include <stdexcept>

namespace aszeta {

namespace {

// Minimal F_2[x] helpers on 64-bit masks, enough for modulus search. The full
// polynomial module has its own wide-word versions; these stay local so the
// field layer has no dependencies.
int deg64(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t mod64(std::uint64_t a, std::uint64_t m) {
  int dm = deg64(m);
  for (int i = deg64(a); i >= dm; i = deg64(a)) {
    a ^= m << (i - dm);
  }
  return a;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // deg(m) <= 24, so the unreduced product fits in 64 bits only if we reduce
  // as we go; interleave shift and reduction.
  std::uint64_t r = 0;
  a = mod64(a, m);
  int dm = deg64(m);
  for (int i = deg64(b); i >= 0; --i) {
    r <<= 1;
    if (deg64(r) == dm) r ^= m;
    if ((b >> i) & 1) r ^= a;
  }
  return r;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = mod64(a, b);
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

bool BinaryField::is_irreducible(std::uint64_t p) {
  int n = deg64(p);
  if (n <= 0) return false;
  // x^(2^d) mod p, built by repeated squaring of the residue.
  std::uint64_t xq = 2;  // x
  for (int d = 1; d <= n / 2; ++d) {
    xq = mulmod64(xq, xq, p);
    if (gcd64(xq ^ 2u, p) != 1) return false;
  }
  return true;
}

std::uint32_t BinaryField::canonical_modulus(int n) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw std::out_of_range("field degree must be in [1, 24], got " +
                            std::to_string(n));
  }
  std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t c = top | 1; c < top << 1; c += 2) {
    if (is_irreducible(c)) return static_cast<std::uint32_t>(c);
  }
  throw std::logic_error("no irreducible of degree " + std::to_string(n));
}

BinaryField::BinaryField(int n) : n_(n), modulus_(canonical_modulus(n)) {
  trace_mask_ = 0;
  for (int i = 0; i < n_; ++i) {
    Elt t = Elt{1} << i;  // beta^i
    Elt acc = t;
    for (int k = 1; k < n_; ++k) {
      t = mul(t, t);
      acc ^= t;
    }
    assert(acc == 0 || acc == 1);  // trace lands in F_2
    trace_mask_ |= acc << i;
  }
  assert(trace_mask_ != 0);  // trace is surjective
}

Elt BinaryField::inv(Elt a) const {
  if (a == 0) throw zero_inversion_error("inverse of zero in F_2^" +
                                         std::to_string(n_));
  // 2^n - 2 = 2 + 4 + ... + 2^(n-1).
  Elt result = 1;
  Elt s = a;
  for (int k = 1; k < n_; ++k) {
    s = mul(s, s);
    result = mul(result, s);
  }
  return result;
}

Elt BinaryField::sqrt(Elt a) const noexcept {
  Elt r = a;
  for (int k = 1; k < n_; ++k) r = mul(r, r);
  return r;
}

int BinaryField::trace_slow(Elt a) const noexcept {
  Elt t = a;
  Elt acc = a;
  for (int k = 1; k < n_; ++k) {
    t = mul(t, t);
    acc ^= t;
  }
  return static_cast<int>(acc & 1);
}

BinaryField field_create(int n) { return BinaryField(n); }

FieldElement make_element(const BinaryField& f, Elt bits) {
  if (f.degree() < 32 && (bits >> f.degree()) != 0) {
    throw std::out_of_range("element bits exceed field degree");
  }
  return FieldElement{bits, &f};
}

namespace {
const BinaryField& same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field == nullptr || b.field == nullptr) {
    throw field_mismatch_error("element without field context");
  }
  if (a.field->degree() != b.field->degree() ||
      a.field->modulus() != b.field->modulus()) {
    throw field_mismatch_error("elements of distinct fields F_2^" +
                               std::to_string(a.field->degree()) + " and F_2^" +
                               std::to_string(b.field->degree()));
  }
  return *a.field;
}
}  // namespace

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) {
  const BinaryField& f = same_field(a, b);
  return FieldElement{f.mul(a.bits, b.bits), a.field};
}

FieldElement gf_inv(const FieldElement& a) {
  if (a.field == nullptr) throw field_mismatch_error("element without field context");
  return FieldElement{a.field->inv(a.bits), a.field};
}

FieldElement gf_sqrt(const FieldElement& a) {
  if (a.field == nullptr) throw field_mismatch_error("element without field context");
  return FieldElement{a.field->sqrt(a.bits), a.field};
}

int trace(const FieldElement& a) {
  if (a.field == nullptr) throw field_mismatch_error("element without field context");
  return a.field->trace(a.bits);
}

}  // namespace aszeta
