// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aszeta/poly2.hpp"

namespace aszeta {

// Random survey of the genus-10 family u^2 - u = A(x)/x^21 with A(0) = 1.
// Sampling: sample i draws 64 bits from splitmix64 in counter mode
// (splitmix64_at(seed, i)); bit j-1 becomes the coefficient of x^j for
// j = 1..degree_bound. The constant term is forced to 1 so the pole at
// x = 0 keeps order exactly 21 and the genus stays 10.
struct SurveyConfig {
  long long samples = 200;
  std::uint64_t seed = 1;
  int degree_bound = 18;  // at most 20, so the pole at infinity never forms
  std::vector<std::string> includes;  // numerator specs forced into the run
};

inline constexpr int kSurveyPoleOrder = 21;
inline constexpr int kSurveyGenus = 10;
inline constexpr const char* kSurveyGenerator = "splitmix64-counter";
inline constexpr const char* kGenericProfileKey = "3/7:7 1/2:6 4/7:7";
inline constexpr const char* kSupersingularProfileKey = "1/2:20";

// The numerator for sample `index` (0-based). Exposed so the sampling map
// itself is testable against fixed draws.
Poly2 survey_numerator(std::uint64_t seed, long long index, int degree_bound);

struct IncludedSample {
  std::string numerator;  // canonical polynomial print
  std::string profile;    // profile_key form
  bool supersingular = false;
};

struct SurveyReport {
  SurveyConfig config;
  std::string generator = kSurveyGenerator;
  // Descending by count, ties broken by key, so output is deterministic.
  std::vector<std::pair<std::string, long long>> histogram;
  long long generic_count = 0;
  long long supersingular_count = 0;
  // Forced inclusions are reported individually and kept out of the random
  // histogram, so the histogram depends only on (seed, samples, degree_bound).
  std::vector<IncludedSample> included;
};

// Runs the survey: every sampled profile passes the profile invariants and
// any genus other than 10 aborts (throws std::logic_error), since the family
// construction makes that impossible unless the pole bookkeeping is wrong.
SurveyReport run_survey(const SurveyConfig& config);

std::string survey_text(const SurveyReport& r);
nlohmann::json survey_to_json(const SurveyReport& r);

}  // namespace aszeta
