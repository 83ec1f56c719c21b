// aszeta: Artin-Schreier curve zeta toolkit over F_2.
// Copyright 2026 The aszeta Authors.
// SPDX-License-Identifier: Apache-2.0
#include "aszeta/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "aszeta/util.hpp"

namespace aszeta {

Rat make_rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rat{num, den};
}

std::string to_string(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rat(std::stoll(s), 1);
    return make_rat(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::domain_error("malformed rational: " + s);
  }
}

namespace {

// v_2 of a nonzero integer.
int val2(uint128 u) {
  int v = 0;
  while ((u & 1) == 0) {
    u >>= 1;
    ++v;
  }
  return v;
}

long long cross(const std::pair<int, int>& o, const std::pair<int, int>& a,
                const std::pair<int, int>& b) {
  return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon newton_polygon(const ZetaPoly& p) {
  NewtonPolygon np;
  for (int i = 0; i <= 2 * p.g; ++i) {
    int128 c = p.a[static_cast<size_t>(i)];
    if (c == 0) continue;
    uint128 u = c < 0 ? static_cast<uint128>(-c) : static_cast<uint128>(c);
    np.points.emplace_back(i, val2(u));
  }
  // Lower hull by monotone chain; cross <= 0 also pops collinear middle
  // points, so each hull edge is a maximal segment of one slope.
  for (const auto& pt : np.points) {
    while (np.vertices.size() >= 2 &&
           cross(np.vertices[np.vertices.size() - 2], np.vertices.back(),
                 pt) <= 0) {
      np.vertices.pop_back();
    }
    np.vertices.push_back(pt);
  }
  return np;
}

SlopeProfile slope_profile(const NewtonPolygon& np) {
  SlopeProfile sp;
  if (np.vertices.empty()) return sp;
  sp.g = np.vertices.back().second;
  for (size_t k = 0; k + 1 < np.vertices.size(); ++k) {
    const auto& [x0, y0] = np.vertices[k];
    const auto& [x1, y1] = np.vertices[k + 1];
    sp.mult.emplace_back(make_rat(y1 - y0, x1 - x0),
                         static_cast<long long>(x1 - x0));
  }
  std::sort(sp.mult.begin(), sp.mult.end());
  return sp;
}

SlopeProfile profile_of(const ZetaPoly& p) {
  return slope_profile(newton_polygon(p));
}

long long profile_multiplicity(const SlopeProfile& p, const Rat& lambda) {
  for (const auto& [s, h] : p.mult) {
    if (s == lambda) return h;
  }
  return 0;
}

long long chi_lambda(const SlopeProfile& p, const Rat& lambda) {
  if (lambda.num < 0 || lambda.num > lambda.den) {
    throw std::domain_error("slope " + to_string(lambda) +
                            " outside [0, 1]: no curve carries it");
  }
  long long chi = -profile_multiplicity(p, lambda);
  if (lambda == Rat{0, 1}) chi += 1;  // h^0 contribution
  if (lambda == Rat{1, 1}) chi += 1;  // h^2 contribution
  return chi;
}

CrewReport crew_compare(const SlopeProfile& x, const SlopeProfile& y,
                        int degree) {
  CrewReport r;
  r.degree = degree;
  std::vector<Rat> support{Rat{0, 1}, Rat{1, 1}};
  for (const auto& [s, h] : x.mult) support.push_back(s);
  for (const auto& [s, h] : y.mult) support.push_back(s);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  for (const Rat& lambda : support) {
    CrewRow row;
    row.lambda = lambda;
    row.chi_x = chi_lambda(x, lambda);
    row.deg_chi_y = degree * chi_lambda(y, lambda);
    row.equal = row.chi_x == row.deg_chi_y;
    r.euler_x += row.chi_x;
    r.euler_y += row.deg_chi_y;
    r.rows.push_back(row);
  }
  // Sanity: per-slope chi sums to the global Euler characteristic.
  r.euler_ok = r.euler_x == 2 - 2 * static_cast<long long>(x.g) &&
               r.euler_y == degree * (2 - 2 * static_cast<long long>(y.g));
  return r;
}

std::vector<std::string> check_profile_invariants(const SlopeProfile& p) {
  std::vector<std::string> bad;
  long long total = 0;
  // sum lambda * h is g; accumulate exactly over a common denominator.
  long long weighted_num = 0, weighted_den = 1;
  for (const auto& [s, h] : p.mult) {
    if (h <= 0) bad.push_back("multiplicity " + std::to_string(h) +
                              " at slope " + to_string(s) + " not positive");
    if (s.num < 0 || s.num > s.den)
      bad.push_back("slope " + to_string(s) + " outside [0, 1]");
    if (h % s.den != 0)
      bad.push_back("denominator of " + to_string(s) + " does not divide h = " +
                    std::to_string(h));
    total += h;
    weighted_num = weighted_num * s.den + s.num * h * weighted_den;
    weighted_den *= s.den;
    long long g2 = std::gcd(weighted_num < 0 ? -weighted_num : weighted_num,
                            weighted_den);
    if (g2 > 1) {
      weighted_num /= g2;
      weighted_den /= g2;
    }
  }
  if (total != 2 * static_cast<long long>(p.g))
    bad.push_back("multiplicities sum to " + std::to_string(total) +
                  ", expected 2g = " + std::to_string(2 * p.g));
  if (weighted_den != 1 || weighted_num != p.g)
    bad.push_back("slope-weighted sum is " + std::to_string(weighted_num) +
                  "/" + std::to_string(weighted_den) + ", expected g = " +
                  std::to_string(p.g));
  for (const auto& [s, h] : p.mult) {
    Rat mirror = make_rat(s.den - s.num, s.den);
    if (profile_multiplicity(p, mirror) != h)
      bad.push_back("h(" + to_string(s) + ") = " + std::to_string(h) +
                    " but h(" + to_string(mirror) + ") = " +
                    std::to_string(profile_multiplicity(p, mirror)) +
                    " (functional-equation symmetry broken)");
  }
  return bad;
}

std::string profile_key(const SlopeProfile& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, h] : p.mult) {
    if (!first) os << ' ';
    first = false;
    os << to_string(s) << ':' << h;
  }
  return os.str();
}

std::string crew_table(const CrewReport& r) {
  std::ostringstream os;
  os << "lambda      chi_X   " << r.degree << "*chi_Y  equal\n";
  for (const auto& row : r.rows) {
    std::string l = to_string(row.lambda);
    os << l << std::string(l.size() < 12 ? 12 - l.size() : 1, ' ');
    std::string cx = std::to_string(row.chi_x);
    os << cx << std::string(cx.size() < 8 ? 8 - cx.size() : 1, ' ');
    std::string cy = std::to_string(row.deg_chi_y);
    os << cy << std::string(cy.size() < 8 ? 8 - cy.size() : 1, ' ');
    os << (row.equal ? "yes" : "NO") << '\n';
  }
  os << "euler characteristics: X = " << r.euler_x << ", " << r.degree
     << " * Y = " << r.euler_y << (r.euler_ok ? "" : " (INCONSISTENT)")
     << '\n';
  return os.str();
}

nlohmann::json crew_to_json(const CrewReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"lambda", to_string(row.lambda)},
                    {"chi_X", row.chi_x},
                    {"deg_chi_Y", row.deg_chi_y},
                    {"equal", row.equal}});
  }
  return {{"degree", r.degree},
          {"rows", rows},
          {"euler_X", r.euler_x},
          {"euler_Y_scaled", r.euler_y},
          {"euler_consistent", r.euler_ok}};
}

nlohmann::json profile_to_json(const SlopeProfile& p) {
  nlohmann::json mult = nlohmann::json::array();
  for (const auto& [s, h] : p.mult) {
    mult.push_back({{"slope", to_string(s)}, {"multiplicity", h}});
  }
  return {{"genus", p.g}, {"slopes", mult}};
}

}  // namespace aszeta
