#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mtc/analytic.hpp"
#include "mtc/cyclofield.hpp"
#include "mtc/error.hpp"
#include "mtc/modgroup.hpp"
#include "mtc/specialforms.hpp"

using namespace mtc;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

QExponent Q(long n, long d = 1) { return QExponent(n, d); }

}  // namespace

TEST_CASE("sample points") {
  CHECK(parse_sample_point("0+1i").z == Complex(0, 1));
  CHECK(parse_sample_point("2i").z == Complex(0, 2));
  CHECK(parse_sample_point("i").z == Complex(0, 1));
  CHECK(parse_sample_point("0.25+1i").z == Complex(0.25, 1));
  const Complex w = parse_sample_point("-1/3+1.5i").z;
  CHECK(w.real() == doctest::Approx(-1.0 / 3).epsilon(1e-15));
  CHECK(w.imag() == 1.5);
  CHECK_THROWS_AS(parse_sample_point("1-1i"), Error);
  CHECK_THROWS_AS(parse_sample_point("banana"), Error);
  CHECK_THROWS_AS(SamplePoint::make(Complex(3, 0)), Error);
  CHECK(standard_sample_points().size() == 4);
}

TEST_CASE("options are validated") {
  EvalOptions o;
  CHECK_NOTHROW(o.validate());
  o.kronrod_points = 21;
  CHECK_THROWS_AS(o.validate(), Error);
  o = {};
  o.tolerance = 0;
  CHECK_THROWS_AS(o.validate(), Error);
}

TEST_CASE("series evaluation") {
  const Estimate one = eval_qseries(QSeries::constant(CycloNum(1)), I);
  CHECK(one.value == Complex(1, 0));
  CHECK(one.error == 0.0);

  // η(i) = Γ(1/4) / (2π^{3/4})
  const Estimate e = eval_qseries(eta(Q(1), Q(40)), I);
  const double expected = std::tgamma(0.25) / (2 * std::pow(kPi, 0.75));
  CHECK(std::abs(e.value - expected) < 1e-12);
  CHECK(std::abs(eval_eta(I).value - expected) < 1e-12);

  const Complex z(0.1, 0.5);
  const QSeries gh = mul(rogers_ramanujan('g', Q(1), Q(40)), rogers_ramanujan('h', Q(1), Q(40)));
  const EtaFactor q[] = {{Q(5), 1}, {Q(1), -1}};
  const QSeries quotient = eta_quotient(q, Q(40));
  CHECK(std::abs(eval_qseries(gh, z).value - eval_qseries(quotient, z).value) < 1e-8);
}

TEST_CASE("truncation at 40 against 60") {
  for (const Complex z : {Complex(0, 0.8), Complex(0.3, 1.0), Complex(-0.25, 1.2)}) {
    for (const char* name : {"f0", "F0", "psi1"}) {
      const Complex a = eval_qseries(mock_theta(name, Q(40)), z).value;
      const Complex b = eval_qseries(mock_theta(name, Q(60)), z).value;
      CHECK(std::abs(a - b) < 1e-9);
    }
  }
}

TEST_CASE("unary theta sums") {
  CHECK(std::abs(unary_theta(Q(0), Q(0), I).value) < 1e-15);

  // g_{a,0} − g_{a+1/2,0} = ½ e^{−2πia} g_{2a,1/2}(z/4)
  const QExponent a = Q(1, 30);
  const Complex z(0, 2);
  const Complex lhs = unary_theta(a, Q(0), z).value - unary_theta(a + Q(1, 2), Q(0), z).value;
  const Complex rhs = 0.5 * std::exp(-2 * kPi * I / 30.0) * unary_theta(2 * a, Q(1, 2), z / 4.0).value;
  CHECK(std::abs(lhs - rhs) < 1e-8);

  EvalOptions wide;
  wide.theta_terms = 80;
  const Complex k40 = unary_theta(a, Q(1, 2), I).value;
  const Complex k80 = unary_theta(a, Q(1, 2), I, wide).value;
  CHECK(std::abs(k40 - k80) < 1e-12);

  EvalOptions narrow;
  narrow.theta_terms = 1;
  CHECK_THROWS_AS(unary_theta(a, Q(0), Complex(0, 0.01), narrow), ConvergenceError);
}

TEST_CASE("R integral") {
  const Complex root = R_endpoint_root(Complex(0.3, 1.7));
  CHECK(root.real() == doctest::Approx(std::sqrt(3.4)).epsilon(1e-14));
  CHECK(std::abs(root.imag()) < 1e-15);

  const QExponent a = Q(1, 30), b = Q(1, 2);
  CHECK(std::abs(R_integral(a, b, Complex(0, 10)).value) < std::abs(R_integral(a, b, I).value));

  for (const Complex z : {I, Complex(0.25, 1.0), Complex(-0.4, 0.6)}) {
    EvalOptions closed;
    closed.method = RMethod::closed_form;
    EvalOptions fine;
    fine.kronrod_points = 61;
    const Estimate q = R_integral(a, b, z);
    CHECK(q.error < 1e-12);
    CHECK(std::abs(q.value - R_integral(a, b, z, closed).value) < 1e-11);
    CHECK(std::abs(q.value - R_integral(a, b, z, fine).value) < 1e-12);
  }

  EvalOptions strict;
  strict.tolerance = 1e-30;
  CHECK_THROWS_AS(R_integral(a, b, I, strict), ConvergenceError);
}

TEST_CASE("completed functions") {
  const Complex z(0.1, 1.0);
  const Estimate f = eval_completed(completed("f0", Q(40)), z);
  CHECK(std::isfinite(f.value.real()));
  CHECK(std::isfinite(f.value.imag()));
  const Estimate shifted = eval_completed(completed("f0", Q(40)), z + 1.0);
  CHECK(std::abs(shifted.value - embed(zeta(60, -1)) * f.value) < 1e-10);

  try {
    eval_completed(completed("N1", Q(20)), z);
    FAIL("expected an unsupported error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
}

TEST_CASE("S and T transformations of F and G") {
  for (const char v : {'F', 'G'})
    for (const auto& p : standard_sample_points()) {
      const ResidualReport s = check_S_transformation(v, p.z);
      CHECK(s.components.size() == 6);
      CHECK(s.max_residual < 1e-6);
      CHECK(s.max_error_budget < 1e-8);
      const ResidualReport t = check_T_transformation(v, p.z);
      CHECK(t.max_residual < 1e-10);
    }
  CHECK_THROWS_AS(check_S_transformation('H', I), Error);
}

TEST_CASE("eta functional equation and branch") {
  for (const Complex z : {I, Complex(0, 2), Complex(0.25, 1), Complex(-1.0 / 3, 1.5), Complex(0.5, 0.9)})
    CHECK(eta_S_residual(z) < 1e-9);
  // continuity of √(-iz) along the unit circle, which stays off the cut
  for (int k = 1; k < 40; ++k) {
    const double t = 0.35 + (kPi - 0.7) * k / 40.0;
    const Complex z = std::polar(1.0, t);
    CHECK(eta_S_residual(z) < 1e-9);
  }
}

TEST_CASE("eta multiplier agrees with numeric evaluation") {
  // η(γz)² = ε(γ)² (cz+d) η(z)² for γ = (1 0; 1 1)
  const GroupElement g = GroupElement::make(1, 0, 1, 1);
  const Complex z(0.1, 1.3);
  const Complex gz = z / (z + 1.0);
  const Complex lhs = std::pow(eval_eta(gz).value, 2);
  const Complex rhs = embed(eta_multiplier_sq(g)) * (z + 1.0) * std::pow(eval_eta(z).value, 2);
  CHECK(std::abs(lhs - rhs) < 1e-9);
}
