#include <doctest.h>

#include <vector>

#include "mtc/error.hpp"
#include "mtc/specialforms.hpp"

using namespace mtc;

namespace {

QExponent Q(long n, long d = 1) { return QExponent(n, d); }
CycloNum c(long n, long d = 1) { return CycloNum(Rational(n, d)); }

// integer coefficients at offset + n for n = 0..values.size()-1
void check_coefficients(const QSeries& f, const QExponent& offset, const std::vector<long>& values) {
  for (std::size_t n = 0; n < values.size(); ++n) {
    INFO("exponent offset + " << n);
    CHECK(f.coefficient(offset + Q(static_cast<long>(n))) == c(values[n]));
  }
}

}  // namespace

TEST_CASE("mock theta series against direct expansion") {
  check_coefficients(mock_theta("f0", Q(15)), Q(0), {1, 1, -1, 1, 0, 0, -1, 1, 0, 1, -2, 1, -1, 2, -2});
  check_coefficients(mock_theta("F0", Q(15)), Q(0), {1, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4});
  CHECK(mock_theta_names().size() == 10);
  for (const auto& n : mock_theta_names()) CHECK(mock_theta(n, Q(20)).bound() == Q(20));
  CHECK_THROWS_AS(mock_theta("f2", Q(5)), Error);
}

TEST_CASE("eta") {
  const QSeries e = eta(Q(1), Q(15));
  CHECK(e.leading_exponent() == Q(1, 24));
  CHECK(e.coefficient(Q(1, 24)) == c(1));
  check_coefficients(e, Q(1, 24), {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0});
  CHECK(eta(Q(5), Q(30)) == scale_z(eta(Q(1), Q(6)), Q(5)));
}

TEST_CASE("Rogers-Ramanujan products count restricted partitions") {
  check_coefficients(rogers_ramanujan_product('G', Q(15)), Q(0), {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12});
  check_coefficients(rogers_ramanujan_product('H', Q(15)), Q(0), {1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 8});
  const QSeries g = rogers_ramanujan('g', Q(1), Q(15));
  const QSeries h = rogers_ramanujan('h', Q(1), Q(15));
  CHECK(g.leading_exponent() == Q(-1, 60));
  CHECK(h.leading_exponent() == Q(11, 60));
  CHECK(rogers_ramanujan('g', Q(10), Q(30)).leading_exponent() == Q(-1, 6));
}

TEST_CASE("g h = eta(5z)/eta(z)") {
  const QSeries g = rogers_ramanujan('g', Q(1), Q(20));
  const QSeries h = rogers_ramanujan('h', Q(1), Q(20));
  const EtaFactor f[] = {{Q(5), 1}, {Q(1), -1}};
  CHECK(compare(g * h, eta_quotient(f, Q(20))).equal);
}

TEST_CASE("eta quotients") {
  const EtaFactor f[] = {{Q(5), 2}, {Q(10), -1}};
  const QSeries e = eta_quotient(f, Q(20));
  CHECK(e.leading_exponent() == Q(0));
  CHECK(e.bound() == Q(20));
  CHECK(compare(theta4(Q(30)), theta4_eta(Q(30))).equal);
  CHECK(compare(psi_theta(Q(30)), psi_theta_eta(Q(30))).equal);
  // θ4 = Σ (-1)^n q^{n²}
  check_coefficients(theta4(Q(10)), Q(0), {1, -2, 0, 0, 2, 0, 0, 0, 0, -2});
}

TEST_CASE("generalized eta") {
  // η_{5,1} = q^{1/60} ∏_{n ≡ ±1 (5)} (1 - qⁿ) = 1/g
  const QSeries e = generalized_eta(5, 1, Q(20));
  CHECK(e.leading_exponent() == Q(1, 60));
  CHECK(compare(e * rogers_ramanujan('g', Q(1), Q(20)), QSeries::constant(c(1))).equal);
  CHECK(compare(generalized_eta(5, 2, Q(20)) * rogers_ramanujan('h', Q(1), Q(20)), QSeries::constant(c(1))).equal);
}

TEST_CASE("completed functions") {
  CHECK(completed("f0", Q(10)).status() == CompletionStatus::explicit_terms);
  CHECK(completed("M2", Q(10)).status() == CompletionStatus::explicit_terms);
  CHECK(completed("N1", Q(10)).status() == CompletionStatus::theta_integral);
  CHECK(completed("psi0", Q(10)).status() == CompletionStatus::unspecified);
  CHECK(completed("phi1", Q(10)).status() == CompletionStatus::unspecified);
  CHECK(completed_names().size() == 12);
  CHECK_THROWS_AS(completed("M3", Q(10)), Error);

  const CompletedFunction f0 = completed("f0", Q(10));
  CHECK(f0.holo.leading_exponent() == Q(-1, 60));
  REQUIRE(f0.completion.size() == 2);
  for (const auto& t : f0.completion) {
    CHECK(t.arg_scale == Q(30));
    CHECK(t.arg_shift == Q(0));
    CHECK(t.b == Q(1, 2));
  }
  CHECK(f0.completion[0].a == Q(1, 30));
  CHECK(f0.completion[1].a == Q(11, 30));
}

TEST_CASE("compose_affine moves the completion argument") {
  const CompletedFunction F0 = completed("F0", Q(20));
  const CompletedFunction g = compose_affine(F0, Q(1, 2), Q(1, 2));
  REQUIRE(g.completion.size() == F0.completion.size());
  for (std::size_t i = 0; i < g.completion.size(); ++i) {
    CHECK(g.completion[i].arg_scale == F0.completion[i].arg_scale * Q(1, 2));
    CHECK(g.completion[i].arg_shift == F0.completion[i].arg_scale * Q(1, 2));
  }
  CHECK(g.holo == shift_z(scale_z(F0.holo, Q(1, 2)), Q(1)));
  CHECK(compose_affine(F0, Q(1)).holo == F0.holo);
}

TEST_CASE("canonicalize merges equal keys and drops zeros") {
  const CompletionTerm a{c(1), Q(1, 30), Q(1, 2), Q(30), Q(0)};
  const CompletionTerm b{c(2), Q(1, 30), Q(1, 2), Q(30), Q(0)};
  const CompletionTerm z{c(-3), Q(1, 30), Q(1, 2), Q(30), Q(0)};
  const CompletionTerm d{c(1), Q(7, 30), Q(1, 2), Q(30), Q(0)};
  const auto r = canonicalize({d, a, b});
  REQUIRE(r.size() == 2);
  CHECK(r[0].a == Q(1, 30));
  CHECK(r[0].prefactor == c(3));
  CHECK(canonicalize({a, b, z}).empty());
}

TEST_CASE("arithmetic on completed functions") {
  const CompletedFunction f = completed("f0", Q(10));
  const CompletedFunction zero = f - f;
  CHECK(zero.holo.empty());
  CHECK(zero.completion.empty());
  const CompletedFunction two = f + f;
  CHECK(two.holo == c(2) * f.holo);
  CHECK(two.completion == (c(2) * f).completion);
}

TEST_CASE("F and G completions cancel") {
  const CancellationReport r = verify_completion_cancellation();
  CHECK(r.equal);
  CHECK(r.mismatched.empty());
  for (int j = 0; j < 6; ++j) CHECK_FALSE(r.f_terms[j].empty());
}

TEST_CASE("identity table") {
  const auto ids = identity_ids();
  CHECK(ids.size() == 17);
  CHECK(identity_min_bound() == Q(15));
  for (const auto& id : ids) {
    CAPTURE(id);
    const IdentityReport r = verify_identity(id, Q(30));
    CHECK(r.equal);
    CHECK(r.bound == Q(30));
  }
}

TEST_CASE("Sturm guard and fault injection") {
  CHECK_THROWS_AS(verify_identity("mtc1", Q(10)), Error);
  try {
    verify_identity("mtc1", Q(14));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::insufficient_precision);
  }
  CHECK(verify_identity("mtc1", Q(2), {true, false}).equal);
  const IdentityReport bad = verify_identity("mtc2", Q(20), {false, true});
  CHECK_FALSE(bad.equal);
  REQUIRE(bad.first_mismatch.has_value());
  CHECK(bad.lhs_coef != bad.rhs_coef);
  try {
    verify_identity("mtc9", Q(20));
    FAIL("unknown id accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_name);
  }
}

TEST_CASE("lemma 3 golden expansion") {
  const IdentitySides s = identity_sides("lemma3", Q(16));
  const QSeries g = lemma3_golden_expansion();
  CHECK(compare(s.lhs, g, Q(15)).equal);
  CHECK(compare(s.rhs, g, Q(15)).equal);
  CHECK(g.coefficient(Q(0)) == c(2) * sqrt_rational(Rational(5)).inverse() * beta());
}

TEST_CASE("Galois coherence") {
  const GaloisCoherenceReport r = verify_galois_coherence();
  CHECK(r.lhs_matches);
  CHECK(r.rhs_matches);
  CHECK(r.n_series_matches);
}
