// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/counting.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "aszeta/util.hpp"

namespace aszeta {

namespace {

void require_degree(int n) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw std::out_of_range("extension degree must be in [1, 24], got " +
                            std::to_string(n));
  }
}

// Flattened evaluator for one curve's reduced right-hand side.
struct FiberEval {
  Poly2 num, den;

  explicit FiberEval(const ASCurve& c)
      : num(c.f_reduced.num), den(c.f_reduced.den) {}

  // |{y : y^2 - y = f(x)}| plus the ramified case, for one rational x.
  int at(const BinaryField& f, Elt x) const {
    Elt dv = poly_eval(den, f, x);
    if (dv == 0) return 1;
    Elt nv = poly_eval(num, f, x);
    return f.trace(f.mul(nv, f.inv(dv))) == 0 ? 2 : 0;
  }

  // The place at infinity: pole when deg num > deg den; otherwise the value
  // there is the Laurent constant term (0 when deg num < deg den, 1 for equal
  // degrees since both polynomials are monic).
  int at_infinity(const BinaryField& f) const {
    int dn = deg(num), dd = deg(den);
    if (dn > dd) return 1;
    if (dn < dd) return 2;
    return (f.degree() & 1) ? 0 : 2;
  }
};

}  // namespace

std::int64_t count_points_serial(const ASCurve& c, int n) {
  require_degree(n);
  BinaryField f(n);
  FiberEval ev(c);
  std::int64_t total = ev.at_infinity(f);
  const std::int64_t size = std::int64_t{1} << n;
  for (std::int64_t xb = 0; xb < size; ++xb) {
    total += ev.at(f, static_cast<Elt>(xb));
  }
  return total;
}

std::int64_t count_points(const ASCurve& c, int n) {
#ifdef _OPENMP
  require_degree(n);
  BinaryField f(n);
  FiberEval ev(c);
  const std::int64_t size = std::int64_t{1} << n;
  std::int64_t acc = 0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (std::int64_t xb = 0; xb < size; ++xb) {
    acc += ev.at(f, static_cast<Elt>(xb));
  }
  return acc + ev.at_infinity(f);
#else
  return count_points_serial(c, n);
#endif
}

std::int64_t count_fiber_product_serial(const FiberProduct& x, int n) {
  require_degree(n);
  BinaryField f(n);
  FiberEval left(x.left), right(x.right);
  std::int64_t total =
      static_cast<std::int64_t>(left.at_infinity(f)) * right.at_infinity(f);
  const std::int64_t size = std::int64_t{1} << n;
  for (std::int64_t xb = 0; xb < size; ++xb) {
    auto e = static_cast<Elt>(xb);
    total += static_cast<std::int64_t>(left.at(f, e)) * right.at(f, e);
  }
  return total;
}

std::int64_t count_fiber_product(const FiberProduct& x, int n) {
#ifdef _OPENMP
  require_degree(n);
  BinaryField f(n);
  FiberEval left(x.left), right(x.right);
  const std::int64_t size = std::int64_t{1} << n;
  std::int64_t acc = 0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (std::int64_t xb = 0; xb < size; ++xb) {
    auto e = static_cast<Elt>(xb);
    acc += static_cast<std::int64_t>(left.at(f, e)) * right.at(f, e);
  }
  return acc +
         static_cast<std::int64_t>(left.at_infinity(f)) * right.at_infinity(f);
#else
  return count_fiber_product_serial(x, n);
#endif
}

std::string curve_id(const ASCurve& c) {
  return to_hex16(fnv1a64("as|" + to_string(c.f_reduced)));
}

std::string curve_id(const FiberProduct& x) {
  return to_hex16(fnv1a64("fp|" + to_string(x.left.f_reduced) + "|" +
                          to_string(x.right.f_reduced)));
}

// --- cache -------------------------------------------------------------------

namespace {

std::string cache_path(const std::string& dir, const std::string& id) {
  return (std::filesystem::path(dir) / (id + ".json")).string();
}

std::string modulus_hex(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", BinaryField::canonical_modulus(n));
  return buf;
}

}  // namespace

std::map<int, std::int64_t> CountCache::load(const std::string& id) const {
  std::string path = cache_path(dir_, id);
  std::ifstream in(path);
  if (!in.good()) return {};
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("curve_id").get<std::string>() != id || j.at("q").get<int>() != 2) {
      throw std::runtime_error("identity fields do not match");
    }
    const auto& moduli = j.at("field_moduli");
    std::map<int, std::int64_t> counts;
    for (const auto& [key, value] : j.at("counts").items()) {
      int n = std::stoi(key);
      if (n < 1 || n > kMaxFieldDegree) throw std::runtime_error("bad degree");
      if (moduli.at(key).get<std::string>() != modulus_hex(n)) {
        throw std::runtime_error("modulus mismatch at n=" + key);
      }
      counts[n] = value.get<std::int64_t>();
    }
    return counts;
  } catch (const std::exception& e) {
    std::fprintf(stderr,
                 "warning: count cache %s is corrupt (%s); recomputing\n",
                 path.c_str(), e.what());
    return {};
  }
}

void CountCache::store(const std::string& id,
                       const std::map<int, std::int64_t>& counts) const {
  std::filesystem::create_directories(dir_);
  nlohmann::json j;
  j["curve_id"] = id;
  j["q"] = 2;
  nlohmann::json moduli = nlohmann::json::object();
  nlohmann::json cc = nlohmann::json::object();
  for (const auto& [n, v] : counts) {
    moduli[std::to_string(n)] = modulus_hex(n);
    cc[std::to_string(n)] = v;
  }
  j["field_moduli"] = moduli;
  j["counts"] = cc;
  std::string path = cache_path(dir_, id);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump(2) << '\n';
    if (!out.good()) {
      throw std::runtime_error("failed writing count cache " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

namespace {

template <typename Object, typename CountFn>
PointCounts count_series_impl(const Object& obj, const std::string& id,
                              int n_max, const CountCache* cache,
                              CountFn&& count_fn) {
  require_degree(n_max);
  std::map<int, std::int64_t> have;
  if (cache != nullptr) have = cache->load(id);
  bool dirty = false;
  PointCounts out;
  out.curve_id = id;
  for (int n = 1; n <= n_max; ++n) {
    auto it = have.find(n);
    if (it == have.end()) {
      it = have.emplace(n, count_fn(obj, n)).first;
      dirty = true;
    }
    out.counts[n] = it->second;
  }
  if (cache != nullptr && dirty) cache->store(id, have);
  return out;
}

}  // namespace

PointCounts count_series(const ASCurve& c, int n_max, const CountCache* cache) {
  return count_series_impl(c, curve_id(c), n_max, cache,
                           [](const ASCurve& cc, int n) {
                             return count_points(cc, n);
                           });
}

PointCounts count_series(const FiberProduct& x, int n_max,
                         const CountCache* cache) {
  return count_series_impl(x, curve_id(x), n_max, cache,
                           [](const FiberProduct& xx, int n) {
                             return count_fiber_product(xx, n);
                           });
}

std::vector<std::string> check_count_invariants(const PointCounts& pc, int g,
                                                bool product) {
  std::vector<std::string> bad;
  const std::int64_t per_place = product ? 4 : 2;
  for (const auto& [n, nn] : pc.counts) {
    std::int64_t size = (std::int64_t{1} << n) + 1;
    if (nn < 0 || nn > per_place * size) {
      bad.push_back("N_" + std::to_string(n) + " = " + std::to_string(nn) +
                    " outside [0, " + std::to_string(per_place * size) + "]");
    }
    std::int64_t d = nn - size;
    // |d| <= 2g 2^(n/2)  <=>  d^2 <= 4 g^2 2^n (exact in integers).
    int128 lhs = static_cast<int128>(d) * d;
    int128 rhs = static_cast<int128>(4) * g * g * (std::int64_t{1} << n);
    if (lhs > rhs) {
      bad.push_back("Weil bound violated at n = " + std::to_string(n) +
                    ": |" + std::to_string(nn) + " - 2^" + std::to_string(n) +
                    " - 1| > 2*" + std::to_string(g) + "*2^(n/2)");
    }
  }
  for (const auto& [m, nm] : pc.counts) {
    for (const auto& [n, nn] : pc.counts) {
      if (m < n && n % m == 0 && nm > nn) {
        bad.push_back("monotonicity violated: N_" + std::to_string(m) + " = " +
                      std::to_string(nm) + " > N_" + std::to_string(n) +
                      " = " + std::to_string(nn));
      }
    }
  }
  return bad;
}

}  // namespace aszeta
