#include <doctest.h>

#include <numeric>

#include "mtc/specialforms.hpp"
#include "mtc/weilrep.hpp"

using namespace mtc;

TEST_CASE("discriminant form") {
  CHECK(DiscriminantForm::quadratic(1) == QExponent(239, 240));
  CHECK(DiscriminantForm::quadratic(0) == QExponent(0));
  CHECK(DiscriminantForm::quadratic(60) == QExponent(0));
  CHECK(DiscriminantForm::quadratic(-7) == DiscriminantForm::quadratic(7));
  CHECK(DiscriminantForm::bilinear(1, 1) == QExponent(119, 120));
  CHECK(DiscriminantForm::canonical(-1) == 119);
  CHECK(DiscriminantForm::canonical(241) == 1);
}

TEST_CASE("rho_T and rho_S entries") {
  const WeilMatrix t = rho_T();
  CHECK(t.entry(1, 1) == zeta(240, -1));
  CHECK(t.entry(11, 11) == zeta(240, -121));
  CHECK(t.entry(1, 2).is_zero());
  const WeilMatrix s = rho_S();
  CHECK(rho_S_scalar() == zeta(8) * sqrt_rational(Rational(120)).inverse());
  CHECK(s.entry(0, 0) == rho_S_scalar());
  CHECK(s.entry(3, 5) == rho_S_scalar() * zeta(120, 15));
}

TEST_CASE("assembly matrix") {
  const AssemblyMatrix A = assembly();
  CHECK(rank(A) == 6);
  CHECK(A.rows[0] == std::array<int, 6>{});
  CHECK(A.rows[60] == std::array<int, 6>{});
  CHECK(A.rows[1] == std::array<int, 6>{0, 0, 1, 0, 1, 0});
  CHECK(A.rows[2] == std::array<int, 6>{-1, 0, 0, 0, 0, 0});
  CHECK(A.rows[118] == std::array<int, 6>{1, 0, 0, 0, 0, 0});
  // rows with gcd(h, 60) ∉ {1, 2} are empty
  for (const int h : {3, 5, 6, 10, 12, 15, 20, 30, 45}) CHECK(A.rows[h] == std::array<int, 6>{});
  // odd: e_h and e_{-h} carry opposite coefficients
  for (int h = 1; h < 120; ++h)
    for (int j = 0; j < 6; ++j) CHECK(A.rows[h][j] == -A.rows[120 - h][j]);
}

TEST_CASE("M_T and M_S layout") {
  const std::vector<std::vector<std::string>> mt = {
      {"z60^-1", "0", "0", "0", "0", "0"},  {"0", "z60^11", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "z240^-1", "0"}, {"0", "0", "0", "0", "0", "z240^71"},
      {"0", "0", "z240^-1", "0", "0", "0"}, {"0", "0", "0", "z240^71", "0", "0"},
  };
  const std::vector<std::vector<std::string>> ms = {
      {"0", "0", "a", "b", "0", "0"},         {"0", "0", "b", "-a", "0", "0"},
      {"a/2", "b/2", "0", "0", "0", "0"},     {"b/2", "-a/2", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "b/r2", "a/r2"},   {"0", "0", "0", "0", "a/r2", "-b/r2"},
  };
  CHECK(symbolic_layout(M_T()) == mt);
  CHECK(symbolic_layout(M_S()) == ms);
  CHECK(S_factor() == zeta(8, -1) * sqrt_rational(Rational(2, 5)));
}

TEST_CASE("intertwining") {
  const IntertwiningReport r = verify_intertwining();
  CHECK(r.t_holds);
  CHECK(r.s_holds);
  CHECK(r.cells_checked == 720);
  CHECK(r.t_violations.empty());
  CHECK(r.s_violations.empty());
}

TEST_CASE("a perturbed multiplier is caught cell by cell") {
  Matrix6 mt = M_T();
  mt[0][0] = zeta(60, 1);
  Matrix6 ms = M_S();
  ms[2][0] = -ms[2][0];
  const IntertwiningReport r = verify_intertwining(assembly(), mt, ms);
  CHECK_FALSE(r.t_holds);
  CHECK_FALSE(r.s_holds);
  // column 0 is supported on the rows h ≡ ±2 (10) with gcd(h, 60) = 2
  for (const auto& c : r.t_violations) CHECK(c.j == 0);
  CHECK(r.t_violations.size() == 8);
  for (const auto& c : r.s_violations) CHECK(c.j == 0);
}

TEST_CASE("metaplectic relation") {
  CHECK(verify_metaplectic(false));
  CHECK(verify_metaplectic(true));
  const auto c = rho_S_square_scalar();
  REQUIRE(c.has_value());
  // ρ_S² e_h = i e_{-h}
  CHECK(*c == imag_unit());
  CHECK(exactly_equal(multiply(rho_T(), rho_S()), multiply(rho_T(), rho_S(), false)));
  CHECK_FALSE(exactly_equal(rho_S(), rho_T()));
}

TEST_CASE("F - G vanishes in every row") {
  const VanishingReport r = check_vanishing(QExponent(20));
  CHECK(r.vanishes);
  CHECK(r.nonzero_rows.empty());
}

TEST_CASE("a perturbed F3 component shows up in its rows only") {
  const QExponent b(20);
  const auto F = build_F(b + QExponent(1));
  const auto G = build_G(b + QExponent(1));
  std::array<QSeries, 6> H;
  for (int j = 0; j < 6; ++j) H[j] = F[j].holo - G[j].holo;
  H[0] += QSeries::monomial(QExponent(5), CycloNum(1));
  const VanishingReport r = check_vanishing(assemble_H(H), b);
  CHECK_FALSE(r.vanishes);
  CHECK(r.nonzero_rows.size() == 8);
  for (const int h : r.nonzero_rows) {
    CHECK((h % 10 == 2 || h % 10 == 8));
    CHECK(std::gcd(h, 60) == 2);
  }
}
