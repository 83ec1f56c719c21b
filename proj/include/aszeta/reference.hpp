// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aszeta/counting.hpp"
#include "aszeta/curve.hpp"
#include "aszeta/newton.hpp"
#include "aszeta/zeta.hpp"

namespace aszeta {

// The reference pair: C: u^2 - u = (1 + x^2 + x^8 + x^14 + x^18)/x^21 and
// D: v^2 - v = 1/(x + 1), with Y the sum cover (w = u + v) and X the fiber
// product of C and D over the line. X -> Y is the etale degree-2 quotient
// whose slope data the crew-check interrogates.
inline constexpr const char* kCurveCSpec = "(1+x^2+x^8+x^14+x^18)/x^21";
inline constexpr const char* kCurveDSpec = "1/(x+1)";
inline constexpr const char* kCurveYSpec =
    "(1+x^2+x^8+x^14+x^18)/x^21 + 1/(x+1)";

inline constexpr int kGenusC = 10;
inline constexpr int kGenusD = 0;
inline constexpr int kGenusY = 11;
inline constexpr int kGenusX = 21;

struct ReferencePair {
  ASCurve c;
  ASCurve d;
  FiberProduct x;  // x.sum is Y
};
ReferencePair build_reference();

// Published values the pipeline must land on.
ZetaPoly reference_p_c();          // 1 - 32t^10 + 1024t^20
ZetaPoly reference_p_y();          // the 23-coefficient display
SlopeProfile reference_profile_c();  // {1/2:20}, supersingular
SlopeProfile reference_profile_y();  // {0:1, 3/7:7, 1/2:6, 4/7:7, 1:1}
SlopeProfile reference_profile_x();  // {0:1, 3/7:7, 1/2:26, 4/7:7, 1:1}

struct ReproduceOptions {
  // Direct fiber-product counts are cross-checked against the product
  // polynomial for n up to this bound; 0 skips direct verification.
  int verify_product_to = 16;
  const CountCache* cache = nullptr;
};

struct ReproduceResult {
  bool ok = false;
  std::vector<std::string> mismatches;  // empty iff ok
  std::string report;                   // human-readable transcript
  nlohmann::json json;
  CrewReport crew;
};

// End-to-end pipeline: build the four curves, check genera, reconstruct
// P_C and P_Y from counts, verify them against the published coefficients,
// form P_X = P_C * P_Y, cross-check direct counts of X, extract slope
// profiles, and emit the per-slope comparison. ok iff everything matches.
ReproduceResult reproduce(const ReproduceOptions& opt = {});

}  // namespace aszeta
