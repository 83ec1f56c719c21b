// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/survey.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "aszeta/counting.hpp"
#include "aszeta/curve.hpp"
#include "aszeta/newton.hpp"
#include "aszeta/util.hpp"
#include "aszeta/zeta.hpp"

namespace aszeta {

Poly2 survey_numerator(std::uint64_t seed, long long index, int degree_bound) {
  if (degree_bound < 0 || degree_bound > 20)
    throw std::domain_error("degree bound must lie in [0, 20]");
  std::uint64_t bits =
      splitmix64_at(seed, static_cast<std::uint64_t>(index));
  uint128 a = 1;  // constant term forced on
  for (int j = 1; j <= degree_bound; ++j) {
    if ((bits >> (j - 1)) & 1) a |= static_cast<uint128>(1) << j;
  }
  return Poly2{a};
}

namespace {

// Profile key of u^2 - u = A/x^21, asserting genus 10 and the profile
// invariants. Used for random samples and forced inclusions alike.
std::string family_profile(const Poly2& numerator) {
  RatFunc f = make_ratfunc(numerator, monomial(kSurveyPoleOrder));
  ASCurve curve = make_curve(f);
  if (curve.genus != kSurveyGenus) {
    throw std::logic_error(
        "survey sample has genus " + std::to_string(curve.genus) +
        ", not 10: pole-order bookkeeping is broken for numerator " +
        to_string(numerator));
  }
  PointCounts counts = count_series(curve, kSurveyGenus);
  ZetaPoly p = zeta_from_counts(counts, kSurveyGenus);
  SlopeProfile profile = profile_of(p);
  std::vector<std::string> bad = check_profile_invariants(profile);
  if (!bad.empty()) {
    throw std::logic_error("survey profile invariant violated: " + bad[0]);
  }
  return profile_key(profile);
}

}  // namespace

SurveyReport run_survey(const SurveyConfig& config) {
  if (config.samples < 0)
    throw std::domain_error("sample count must be nonnegative");
  SurveyReport report;
  report.config = config;

  // Samples are independent; keys land in per-sample slots so aggregation
  // order never depends on scheduling. The counting kernels underneath are
  // serial inside this loop (nested parallel regions do not spawn).
  std::vector<std::string> keys(static_cast<size_t>(config.samples));
  std::string failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < config.samples; ++i) {
    try {
      keys[static_cast<size_t>(i)] =
          family_profile(survey_numerator(config.seed, i, config.degree_bound));
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw std::logic_error(failure);

  std::map<std::string, long long> hist;
  for (const std::string& k : keys) ++hist[k];
  report.histogram.assign(hist.begin(), hist.end());
  std::stable_sort(report.histogram.begin(), report.histogram.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  auto it = hist.find(kGenericProfileKey);
  report.generic_count = it == hist.end() ? 0 : it->second;
  it = hist.find(kSupersingularProfileKey);
  report.supersingular_count = it == hist.end() ? 0 : it->second;

  for (const std::string& spec : config.includes) {
    RatFunc parsed = parse_ratfunc(spec);
    if (deg(parsed.den) != 0)
      throw std::domain_error("include must be a polynomial numerator: " +
                              spec);
    const Poly2& a = parsed.num;
    if ((a.bits & 1) == 0)
      throw std::domain_error("include numerator must have constant term 1: " +
                              spec);
    if (deg(a) > 20)
      throw std::domain_error("include numerator degree exceeds 20: " + spec);
    IncludedSample inc;
    inc.numerator = to_string(a);
    inc.profile = family_profile(a);
    inc.supersingular = inc.profile == kSupersingularProfileKey;
    report.included.push_back(inc);
  }
  return report;
}

std::string survey_text(const SurveyReport& r) {
  std::ostringstream os;
  os << "survey of u^2 - u = A(x)/x^21, A(0) = 1, deg A <= "
     << r.config.degree_bound << "\n";
  os << "generator " << r.generator << ", seed " << r.config.seed << ", "
     << r.config.samples << " samples\n";
  os << "profile histogram (slope:multiplicity):\n";
  for (const auto& [key, count] : r.histogram) {
    os << "  " << count << "  {" << key << "}";
    if (key == kGenericProfileKey) os << "  <- generic";
    if (key == kSupersingularProfileKey) os << "  <- supersingular";
    os << "\n";
  }
  if (r.histogram.empty()) os << "  (empty)\n";
  os << "profile {" << kGenericProfileKey << "}: " << r.generic_count
     << " of " << r.config.samples << "\n";
  os << "supersingular {" << kSupersingularProfileKey
     << "}: " << r.supersingular_count << " of " << r.config.samples << "\n";
  for (const auto& inc : r.included) {
    os << "included " << inc.numerator << " -> {" << inc.profile << "}"
       << (inc.supersingular ? "  supersingular" : "") << "\n";
  }
  return os.str();
}

nlohmann::json survey_to_json(const SurveyReport& r) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [key, count] : r.histogram) {
    hist.push_back({{"profile", key}, {"count", count}});
  }
  nlohmann::json includes = nlohmann::json::array();
  for (const auto& inc : r.included) {
    includes.push_back({{"numerator", inc.numerator},
                        {"profile", inc.profile},
                        {"supersingular", inc.supersingular}});
  }
  return {{"generator", r.generator},
          {"seed", r.config.seed},
          {"samples", r.config.samples},
          {"degree_bound", r.config.degree_bound},
          {"pole_order", kSurveyPoleOrder},
          {"genus", kSurveyGenus},
          {"histogram", hist},
          {"generic_profile", kGenericProfileKey},
          {"generic_count", r.generic_count},
          {"supersingular_profile", kSupersingularProfileKey},
          {"supersingular_count", r.supersingular_count},
          {"includes", includes}};
}

}  // namespace aszeta
