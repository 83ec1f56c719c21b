// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 = success (analysis completed, or
// reproduce-paper matched everything), 1 = reproduce-paper found a mismatch
// against the expected values, 2 = usage, parse, or domain errors.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aszeta/counting.hpp"
#include "aszeta/curve.hpp"
#include "aszeta/newton.hpp"
#include "aszeta/reference.hpp"
#include "aszeta/survey.hpp"
#include "aszeta/zeta.hpp"

namespace {

using namespace aszeta;

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// Shared pipeline pieces -----------------------------------------------------

ZetaPoly zeta_of(const ASCurve& c, const CountCache* cache) {
  if (c.genus == 0) return zeta_one();  // P = 1, no counting needed
  PointCounts counts = count_series(c, c.genus, cache);
  return zeta_from_counts(counts, c.genus);
}

// For an etale fiber product the Jacobian splits as J(C) x J(D) x J(Y), so
// the numerator factors as P_C * P_D * P_Y; no direct counting of X needed.
ZetaPoly zeta_of_product(const FiberProduct& x, const CountCache* cache) {
  ZetaPoly p = poly_multiply(zeta_of(x.left, cache), zeta_of(x.right, cache));
  return poly_multiply(p, zeta_of(x.sum, cache));
}

nlohmann::json counts_json(const PointCounts& pc) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [n, v] : pc.counts) counts[std::to_string(n)] = v;
  return {{"curve_id", pc.curve_id}, {"q", pc.q}, {"counts", counts}};
}

nlohmann::json ram_json(const ASCurve& c) {
  nlohmann::json ram = nlohmann::json::array();
  for (const auto& [place, order] : c.ram) {
    ram.push_back({{"place", to_string(place)}, {"pole_order", order}});
  }
  return ram;
}

// Subcommand bodies ----------------------------------------------------------

int cmd_genus(const std::string& spec, bool json) {
  ASCurve c = make_curve(spec);
  if (json) {
    emit({{"genus", c.genus},
          {"curve_id", curve_id(c)},
          {"f_given", to_string(c.f_given)},
          {"f_reduced", to_string(c.f_reduced)},
          {"shift", to_string(c.shift)},
          {"ramification", ram_json(c)}});
  } else {
    std::cout << c.genus << "\n";
  }
  return 0;
}

int cmd_count(const std::string& spec, int to, bool json,
              const CountCache* cache) {
  ASCurve c = make_curve(spec);
  if (to == 0) to = c.genus > 0 ? c.genus : 1;
  PointCounts pc = count_series(c, to, cache);
  if (json) {
    emit(counts_json(pc));
  } else {
    for (const auto& [n, v] : pc.counts) {
      std::cout << "N_" << n << " = " << v << "\n";
    }
  }
  return 0;
}

int cmd_zeta(const std::string& spec, bool json, const CountCache* cache) {
  ASCurve c = make_curve(spec);
  ZetaPoly p = zeta_of(c, cache);
  if (json) {
    emit(zeta_to_json(p));
  } else {
    std::cout << "P = " << zeta_pretty(p) << "\n";
  }
  return 0;
}

int cmd_slopes(const std::string& spec, bool json, const CountCache* cache) {
  ASCurve c = make_curve(spec);
  SlopeProfile prof = profile_of(zeta_of(c, cache));
  if (json) {
    emit(profile_to_json(prof));
  } else {
    std::cout << "{" << profile_key(prof) << "}\n";
  }
  return 0;
}

int cmd_crew(const std::string& spec_c, const std::string& spec_d, bool json,
             const CountCache* cache) {
  ASCurve c = make_curve(spec_c);
  ASCurve d = make_curve(spec_d);
  FiberProduct x = fiber_product(c, d);
  SlopeProfile prof_x = profile_of(zeta_of_product(x, cache));
  SlopeProfile prof_y = profile_of(zeta_of(x.sum, cache));
  CrewReport crew = crew_compare(prof_x, prof_y, 2);
  if (json) {
    emit(crew_to_json(crew));
  } else {
    std::cout << "X = fiber product (genus " << x.genus << "), Y = sum cover"
              << " (genus " << x.sum.genus << ")\n"
              << crew_table(crew);
  }
  return 0;
}

int cmd_reproduce(int verify_to, bool json, const CountCache* cache) {
  ReproduceOptions opt;
  opt.verify_product_to = verify_to;
  opt.cache = cache;
  ReproduceResult res = reproduce(opt);
  if (json) {
    emit(res.json);
  } else {
    std::cout << res.report;
  }
  return res.ok ? 0 : 1;
}

int cmd_survey_run(const SurveyConfig& config, bool json) {
  SurveyReport report = run_survey(config);
  if (json) {
    emit(survey_to_json(report));
  } else {
    std::cout << survey_text(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "aszeta: zeta functions, Newton slopes, and slope-wise Euler "
      "characteristics of Artin-Schreier double covers y^2 - y = f(x) "
      "over F_2"};
  app.require_subcommand(1);

  std::string cache_dir;
  bool json = false;
  bool slow = false;
  int threads = 0;
  app.add_option("--cache-dir", cache_dir,
                 "directory holding point-count cache documents");
  app.add_flag("--json", json, "emit machine-readable JSON");
  app.add_option("--threads", threads,
                 "worker thread count (0 = runtime default)");
  app.add_flag("--slow", slow,
               "enable the slow full-verification paths (reproduce-paper "
               "checks direct counts to n = 21)");

  std::string genus_spec;
  auto* genus_cmd =
      app.add_subcommand("genus", "genus of y^2 - y = f(x) after reduction");
  genus_cmd->add_option("curve", genus_spec, "rational function f(x)")
      ->required();

  std::string count_spec;
  int count_to = 0;
  auto* count_cmd =
      app.add_subcommand("count", "point counts N_n over F_2^n");
  count_cmd->add_option("curve", count_spec, "rational function f(x)")
      ->required();
  count_cmd->add_option("--to", count_to,
                        "count n = 1..N (default: the genus, at least 1)");

  std::string zeta_spec;
  auto* zeta_cmd =
      app.add_subcommand("zeta", "zeta-function numerator P(t) from counts");
  zeta_cmd->add_option("curve", zeta_spec, "rational function f(x)")
      ->required();

  std::string slopes_spec;
  auto* slopes_cmd =
      app.add_subcommand("slopes", "Newton-polygon slope multiplicities");
  slopes_cmd->add_option("curve", slopes_spec, "rational function f(x)")
      ->required();

  std::string crew_c = kCurveCSpec;
  std::string crew_d = kCurveDSpec;
  auto* crew_cmd = app.add_subcommand(
      "crew-check",
      "slope-wise Euler characteristics of X = C x D against the degree-2 "
      "quotient Y = C + D (defaults to the reference pair)");
  auto* crew_c_opt =
      crew_cmd->add_option("curveC", crew_c, "left cover f_C(x)");
  crew_cmd->add_option("curveD", crew_d, "right cover f_D(x)")
      ->needs(crew_c_opt);

  int verify_to = 16;
  auto* repro_cmd = app.add_subcommand(
      "reproduce-paper",
      "run the full reference pipeline and verify every expected value");
  auto* verify_opt = repro_cmd->add_option(
      "--verify-product-to", verify_to,
      "cross-check direct counts of X against P_C * P_Y for n up to this "
      "bound (0 = skip; default 16, --slow raises to 21)");

  SurveyConfig survey_config;
  auto* survey_cmd = app.add_subcommand(
      "survey",
      "slope-profile histogram of random members of the genus-10 family "
      "u^2 - u = A(x)/x^21, A(0) = 1");
  survey_cmd->add_option("--samples", survey_config.samples,
                         "number of random numerators (default 200)");
  survey_cmd->add_option("--seed", survey_config.seed,
                         "PRNG seed (default 1)");
  survey_cmd->add_option("--degree-bound", survey_config.degree_bound,
                         "max degree of sampled numerators (default 18)");
  survey_cmd->add_option("--include", survey_config.includes,
                         "numerator polynomial forced into the run "
                         "(repeatable; reported separately)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; real parse errors exit 2
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif

  std::optional<CountCache> cache;
  const CountCache* cache_ptr = nullptr;
  if (!cache_dir.empty()) {
    cache.emplace(cache_dir);
    cache_ptr = &*cache;
  }

  if (slow && !*verify_opt) verify_to = 21;

  try {
    if (*genus_cmd) return cmd_genus(genus_spec, json);
    if (*count_cmd) return cmd_count(count_spec, count_to, json, cache_ptr);
    if (*zeta_cmd) return cmd_zeta(zeta_spec, json, cache_ptr);
    if (*slopes_cmd) return cmd_slopes(slopes_spec, json, cache_ptr);
    if (*crew_cmd) return cmd_crew(crew_c, crew_d, json, cache_ptr);
    if (*repro_cmd) return cmd_reproduce(verify_to, json, cache_ptr);
    if (*survey_cmd) return cmd_survey_run(survey_config, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
