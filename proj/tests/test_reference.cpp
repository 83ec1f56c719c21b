// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the reference pair pipeline: curve construction,
// zeta reconstruction, published values, and the reproduce() transcript.

#include <string>

#include "doctest.h"

#include "aszeta/newton.hpp"
#include "aszeta/reference.hpp"
#include "aszeta/zeta.hpp"

using namespace aszeta;

TEST_SUITE("reference") {
  TEST_CASE("reference pair builds with the published genera") {
    ReferencePair ref = build_reference();
    CHECK(ref.c.genus == 10);
    CHECK(ref.d.genus == 0);
    CHECK(ref.x.sum.genus == 11);
    CHECK(ref.x.genus == 21);
    // The sum cover recovers each factor from the other.
    ASCurve c2 = sum_cover(ref.x.sum, ref.d);
    CHECK(curve_id(c2) == curve_id(ref.c));
  }

  TEST_CASE("published polynomials and profiles are internally consistent") {
    ZetaPoly pc = reference_p_c();
    CHECK(pc.g == 10);
    CHECK(pc.a[0] == 1);
    CHECK(pc.a[10] == -32);
    CHECK(pc.a[20] == 1024);
    PointCounts no_counts;  // structural checks only
    CHECK(validate_weil(pc, no_counts).empty());
    CHECK(profile_key(profile_of(pc)) == profile_key(reference_profile_c()));

    ZetaPoly py = reference_p_y();
    CHECK(py.g == 11);
    CHECK(validate_weil(py, no_counts).empty());
    CHECK(profile_key(profile_of(py)) == profile_key(reference_profile_y()));
    CHECK(profile_key(reference_profile_y()) == "0:1 3/7:7 1/2:6 4/7:7 1:1");
    CHECK(profile_key(reference_profile_x()) == "0:1 3/7:7 1/2:26 4/7:7 1:1");

    // X's profile is the union of the factors' profiles.
    ZetaPoly px = poly_multiply(pc, py);
    CHECK(profile_key(profile_of(px)) == profile_key(reference_profile_x()));
  }

  TEST_CASE("reproduce lands on the published values") {
    ReproduceOptions opt;
    opt.verify_product_to = 8;  // keep the direct check quick here
    ReproduceResult res = reproduce(opt);

    CHECK(res.ok);
    CHECK(res.mismatches.empty());
    CHECK(res.report.find("MISMATCH") == std::string::npos);
    CHECK(res.report.find("supersingular") != std::string::npos);
    CHECK(res.report.find(
              "violations at 3/7, 1/2, 4/7; Crew slope-0 equality holds") !=
          std::string::npos);

    REQUIRE(res.crew.rows.size() == 5);
    CHECK(res.crew.rows[0].lambda == make_rat(0, 1));
    CHECK(res.crew.rows[0].equal);
    CHECK(res.crew.rows[1].lambda == make_rat(3, 7));
    CHECK(res.crew.rows[1].chi_x == -7);
    CHECK(res.crew.rows[1].deg_chi_y == -14);
    CHECK_FALSE(res.crew.rows[1].equal);
    CHECK(res.crew.rows[2].lambda == make_rat(1, 2));
    CHECK(res.crew.rows[2].chi_x == -26);
    CHECK(res.crew.rows[2].deg_chi_y == -12);
    CHECK_FALSE(res.crew.rows[2].equal);
    CHECK(res.crew.rows[3].lambda == make_rat(4, 7));
    CHECK_FALSE(res.crew.rows[3].equal);
    CHECK(res.crew.rows[4].lambda == make_rat(1, 1));
    CHECK(res.crew.rows[4].equal);
    CHECK(res.crew.euler_ok);

    CHECK(res.json["ok"] == true);
    CHECK(res.json["genera"]["C"] == 10);
    CHECK(res.json["genera"]["D"] == 0);
    CHECK(res.json["genera"]["Y"] == 11);
    CHECK(res.json["genera"]["X"] == 21);
    CHECK(res.json["verified_product_to"] == 8);
    CHECK(res.json["mismatches"].empty());
    CHECK(res.json["P_C"]["coeffs"][10] == "-32");
    CHECK(res.json["crew"]["rows"].size() == 5);
  }

  TEST_CASE("reproduce can skip the direct product verification") {
    ReproduceOptions opt;
    opt.verify_product_to = 0;
    ReproduceResult res = reproduce(opt);
    CHECK(res.ok);
    CHECK(res.report.find("skipped") != std::string::npos);
    CHECK(res.json["verified_product_to"] == 0);
  }
}
