#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mtc/qseries.hpp"

namespace mtc {

// Every constructor takes an exclusive bound b and returns a series whose
// bound is exactly b (possibly larger intermediate work is hidden).

/// f0 f1 F0 F1 psi0 psi1 phi0 phi1 chi0 chi1 as series in q.
QSeries mock_theta(const std::string& name, const QExponent& bound);
std::vector<std::string> mock_theta_names();

/// M(a/5) = Σ_{n≥1} q^{n(n-1)} / ((q^{a/5};q)_n (q^{1-a/5};q)_n), a in 1..4.
QSeries M_series(int a, const QExponent& bound);
/// N(a/5) = 1 + Σ_{n≥1} q^{n²} / ((ζ5^a q;q)_n (ζ5^{-a} q;q)_n), a in 1..4.
QSeries N_series(int a, const QExponent& bound);

/// η(sz) = q^{s/24} (q^s;q^s)_∞.
QSeries eta(const QExponent& scale, const QExponent& bound);

struct EtaFactor {
  QExponent scale;
  int power;
};
/// ∏ η(s_i z)^{p_i}.
QSeries eta_quotient(std::span<const EtaFactor> factors, const QExponent& bound);

/// θ4(0,q) = (q;q)²/(q²;q²) and ψ(q) = (q²;q²)²/(q;q), from the products.
QSeries theta4(const QExponent& bound);
QSeries psi_theta(const QExponent& bound);
/// The same two functions through η²(z)/η(2z) and q^{-1/8} η²(2z)/η(z).
QSeries theta4_eta(const QExponent& bound);
QSeries psi_theta_eta(const QExponent& bound);

/// η_{δ,g}(z) = q^{(δ/2)P2(g/δ)} ∏_{m>0, m ≡ ±g (δ)} (1 - q^m), P2(t) = t² - t + 1/6.
QSeries generalized_eta(int delta, int g, const QExponent& bound);
/// η_{δ,g}(sz).
QSeries generalized_eta(int delta, int g, const QExponent& scale, const QExponent& bound);

/// G(q) = 1/((q;q^5)(q^4;q^5)), H(q) = 1/((q^2;q^5)(q^3;q^5)).
QSeries rogers_ramanujan_product(char which, const QExponent& bound);
/// g(sz) = (q^{-1/60} G)(sz) and h(sz) = (q^{11/60} H)(sz); which is 'g' or 'h'.
QSeries rogers_ramanujan(char which, const QExponent& scale, const QExponent& bound);

/// prefactor · R_{a,b}(arg_scale·z + arg_shift).
struct CompletionTerm {
  CycloNum prefactor;
  QExponent a;
  QExponent b;
  QExponent arg_scale;
  QExponent arg_shift{0};

  friend bool operator==(const CompletionTerm&, const CompletionTerm&) = default;
};

/// prefactor · (i/√3) ∫ Θ1(a/5, τ)/√(-i(τ + w)) dτ with w = arg_scale·z + arg_shift.
/// Kept formal: only compared against itself and its Galois images.
struct ThetaIntegralTerm {
  CycloNum prefactor;
  int a;
  QExponent arg_scale;
  QExponent arg_shift{0};

  friend bool operator==(const ThetaIntegralTerm&, const ThetaIntegralTerm&) = default;
};

enum class CompletionStatus { explicit_terms, theta_integral, unspecified };
const char* to_string(CompletionStatus s);

struct CompletedFunction {
  std::string name;
  QSeries holo;
  std::vector<CompletionTerm> completion;         // canonical order
  std::vector<ThetaIntegralTerm> theta_integrals;  // canonical order
  bool completion_unspecified = false;

  CompletionStatus status() const;
};

/// Merges equal (a, b, arg_scale, arg_shift) keys, drops zero prefactors,
/// sorts by (a, b, arg_scale, arg_shift).
std::vector<CompletionTerm> canonicalize(std::vector<CompletionTerm> terms);

CompletedFunction operator+(const CompletedFunction& f, const CompletedFunction& g);
CompletedFunction operator-(const CompletedFunction& f);
CompletedFunction operator-(const CompletedFunction& f, const CompletedFunction& g);
CompletedFunction operator*(const CycloNum& s, const CompletedFunction& f);
/// Holomorphic-only summand (an eta quotient etc.).
CompletedFunction holomorphic(const std::string& name, QSeries f);

/// F(z) = f(s z + c), s > 0.
CompletedFunction compose_affine(const CompletedFunction& f, const QExponent& s, const QExponent& c = QExponent(0));

/// Names: f0 f1 F0 F1 (the completed mock theta functions), M1 M2 (M~(a/5)),
/// N1 N2 (N~(a/5)), psi0 psi1 phi0 phi1.
CompletedFunction completed(const std::string& name, const QExponent& bound);
std::vector<std::string> completed_names();

/// The vectors F and G whose equality is the four mock theta conjectures.
std::array<CompletedFunction, 6> build_F(const QExponent& bound);
std::array<CompletedFunction, 6> build_G(const QExponent& bound);

struct VerifyOptions {
  bool force = false;         // skip the Sturm-type guard
  bool inject_fault = false;  // negate one right-hand constant (self-test)
};

struct IdentitySides {
  QSeries lhs;
  QSeries rhs;
};

/// Holomorphic parts of both sides, valid below `bound`. lemma3 and lemma4
/// include the factor η(z).
IdentitySides identity_sides(const std::string& id, const QExponent& bound, bool inject_fault = false);

struct IdentityReport {
  std::string id;
  QExponent bound;  // exponents <= bound were compared
  bool equal = true;
  std::optional<QExponent> first_mismatch;
  CycloNum lhs_coef;
  CycloNum rhs_coef;
};

/// Exact comparison of both sides through exponent `bound` (inclusive).
/// Throws Error(insufficient_precision) for bound below the Sturm-type
/// requirement unless forced, Error(unknown_name) for an unknown id.
IdentityReport verify_identity(const std::string& id, const QExponent& bound, const VerifyOptions& opts = {});

std::vector<std::string> identity_ids();
/// Smallest bound accepted without --force.
QExponent identity_min_bound();

/// (2/√5)(β - α²β q² - αβ² q³ + β³ q⁵ - α²β q⁷ + 2α²β q¹⁰ - α²β q¹² - αβ² q¹³ + 2αβ² q¹⁵) + O(q¹⁶).
QSeries lemma3_golden_expansion();

struct GaloisCoherenceReport {
  bool lhs_matches = true;    // τ(lemma3 lhs) = lemma4 lhs
  bool rhs_matches = true;    // τ(lemma3 rhs) = lemma4 rhs
  bool n_series_matches = true;  // σ(N(1/5)) = N(2/5)
  QExponent lemma_bound;
  QExponent n_bound;
};

/// Compares through q^lemma_bound and q^n_bound, both inclusive.
GaloisCoherenceReport verify_galois_coherence(const QExponent& lemma_bound = QExponent(15),
                                              const QExponent& n_bound = QExponent(30));

struct CancellationReport {
  bool equal = true;
  std::vector<int> mismatched;  // component indices 0..5
  std::array<std::vector<CompletionTerm>, 6> f_terms;
  std::array<std::vector<CompletionTerm>, 6> g_terms;
};

/// Canonical completion multisets of F and G, componentwise.
CancellationReport verify_completion_cancellation(const QExponent& bound = QExponent(10));

}  // namespace mtc
