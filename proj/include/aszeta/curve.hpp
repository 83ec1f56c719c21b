// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aszeta/ratfunc.hpp"

namespace aszeta {

// The double cover y^2 - y = f(x) of the projective line over F_2, stored
// with its Artin-Schreier-reduced right-hand side. Immutable once built.
struct ASCurve {
  RatFunc f_given;
  RatFunc f_reduced;
  RatFunc shift;  // f_reduced = f_given + shift^2 + shift
  // Reduced (odd) pole orders d_P by place; nonempty, sorted by place.
  std::vector<std::pair<Place, int>> ram;
  int genus = 0;
};

struct ReduceResult {
  RatFunc f_reduced;
  RatFunc shift;
  std::vector<std::pair<Place, int>> ram;
};

// Repeatedly removes even pole orders 2m at degree-1 places by adding
// (1/t^m)^2 + 1/t^m in the local parameter t, until every pole order is odd.
// Throws unsupported_reduction_error for an even order at a place of degree
// > 1 and split_cover_error when reduction ends pole-free (y^2 - y = f then
// has no geometrically irreducible cover attached).
ReduceResult as_reduce(const RatFunc& f);

// 2g - 2 = -4 + sum_P (d_P + 1) deg(P)  (wild Riemann-Hurwitz, p = 2).
int genus_from_ram(const std::vector<std::pair<Place, int>>& ram);

// as_reduce + genus + invariant checks.
ASCurve make_curve(const RatFunc& f);
ASCurve make_curve(const std::string& spec);  // parse + make

// The cover with f = f_C + f_D (the w = u + v curve). Propagates
// split_cover_error when the sum is in the image of g -> g^2 + g.
ASCurve sum_cover(const ASCurve& c, const ASCurve& d);

// True iff the branch loci are disjoint; the sufficient criterion for the
// fiber product's map onto the sum cover to be etale.
bool check_etale(const ASCurve& c, const ASCurve& d);

// Fiber product over the two maps to the line. genus = g(left) + g(right)
// + g(sum), valid in the disjoint-branch-locus case this library accepts.
struct FiberProduct {
  ASCurve left;
  ASCurve right;
  ASCurve sum;
  int genus = 0;
};
FiberProduct fiber_product(const ASCurve& c, const ASCurve& d);

}  // namespace aszeta
