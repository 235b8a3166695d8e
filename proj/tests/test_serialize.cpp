#include <doctest.h>

#include "mtc/error.hpp"
#include "mtc/serialize.hpp"

using namespace mtc;

TEST_CASE("rationals") {
  CHECK(rational_string(Rational(3)) == "3/1");
  CHECK(rational_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("10/-4") == Rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("field elements round-trip") {
  for (const CycloNum& x : {CycloNum(), CycloNum(Rational(-7, 3)), alpha(), beta() * zeta(240, 17), sqrt_rational(5)}) {
    const Json j = to_json(x);
    CHECK(j.size() == 64);
    CHECK(cyclo_from_json(j) == x);
    CHECK(cyclo_from_json(Json::parse(j.dump())) == x);
  }
  CHECK_THROWS_AS(cyclo_from_json(Json::array({"1/1"})), Error);
  Json bad = to_json(CycloNum(1));
  bad[3] = 4;
  CHECK_THROWS_AS(cyclo_from_json(bad), Error);
}

TEST_CASE("series round-trip") {
  const QSeries f = mock_theta("f0", QExponent(12));
  const QSeries g = shift_z(rogers_ramanujan('g', QExponent(1), QExponent(8)), QExponent(1));
  for (const QSeries& s : {f, g}) {
    const QSeries back = qseries_from_json(Json::parse(dump_json(to_json(s))));
    CHECK(back.terms() == s.terms());
    CHECK(back.bound() == s.bound());
  }
  const QSeries poly = QSeries::monomial(QExponent(3, 5), alpha());
  const Json j = to_json(poly);
  CHECK(j["bound"].is_null());
  CHECK(j["terms"][0]["exp"] == "3/5");
  CHECK(qseries_from_json(j).terms() == poly.terms());

  Json twice = j;
  twice["terms"].push_back(twice["terms"][0]);
  CHECK_THROWS_AS(qseries_from_json(twice), Error);
  CHECK_THROWS_AS(qseries_from_json(Json::object()), Error);
}

TEST_CASE("reports") {
  const Json ok = to_json(verify_identity("mtc1", QExponent(30)));
  CHECK(ok["status"] == "equal");
  CHECK(ok["bound"] == "30");
  CHECK_FALSE(ok.contains("first_mismatch_exp"));

  VerifyOptions fault;
  fault.inject_fault = true;
  const Json bad = to_json(verify_identity("mtc1", QExponent(30), fault));
  CHECK(bad["status"] == "mismatch");
  CHECK(bad["first_mismatch_exp"].is_string());
  CHECK(cyclo_from_json(bad["lhs_coef"]) != cyclo_from_json(bad["rhs_coef"]));

  const Json w = to_json(verify_intertwining());
  CHECK(w["cells_checked"] == 720);
  CHECK(w["t_violations"].empty());

  const Json r = to_json(check_T_transformation('F', Complex(0, 1)));
  CHECK(r["components"].size() == 6);
  for (const char* key : {"component", "z", "lhs", "rhs", "abs_residual", "error_budget"})
    CHECK(r["components"][0].contains(key));
}

TEST_CASE("dump is stable") {
  const Json j = {{"b", 1}, {"a", {1, 2}}};
  CHECK(dump_json(j) == "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}
