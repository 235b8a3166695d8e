#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mtc/cyclofield.hpp"
#include "mtc/qseries.hpp"

namespace mtc {

struct GroupElement {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Throws Error(domain) unless ad - bc = 1.
  static GroupElement make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static GroupElement T(std::int64_t k = 1) { return {1, k, 0, 1}; }
  static GroupElement S() { return {0, -1, 1, 0}; }

  GroupElement inverse() const { return {d, -b, -c, a}; }
  GroupElement operator-() const { return {-a, -b, -c, -d}; }
  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& g);

/// Γ0(N) ∩ Γ1(M): c ≡ 0 (N), a ≡ d ≡ 1 (M), with M | N.
struct GroupContext {
  std::int64_t N = 1;
  std::int64_t M = 1;

  void validate() const;
  bool contains(const GroupElement& g) const;
  bool contains_minus_identity() const { return M <= 2; }
};

/// r/s in lowest terms with s >= 0; ∞ is 1/0.
struct CuspPoint {
  std::int64_t r = 1;
  std::int64_t s = 0;

  static CuspPoint make(std::int64_t r, std::int64_t s);
  static CuspPoint infinity() { return {1, 0}; }
  bool is_infinity() const { return s == 0; }
  friend bool operator==(const CuspPoint&, const CuspPoint&) = default;
};

std::string to_string(const CuspPoint& c);
/// "oo", "inf", "r/s" or an integer.
CuspPoint parse_cusp(const std::string& text);
/// γ·(r/s) as a Möbius action.
CuspPoint act(const GroupElement& g, const CuspPoint& c);

/// [PSL2(Z) : image of Γ] = [SL2(Z) : ±Γ].
std::int64_t index(const GroupContext& ctx);
/// [SL2(Z) : Γ].
std::int64_t sl2_index(const GroupContext& ctx);

/// Number of leading coefficients that determine a form of this weight:
/// floor(weight · index / 12) + 1.
std::int64_t sturm_bound(const QExponent& weight, std::int64_t index);
std::int64_t sturm_bound(const QExponent& weight, const GroupContext& ctx);

bool cusp_equivalent(const GroupContext& ctx, const CuspPoint& x, const CuspPoint& y);
/// One representative per class, ∞ first, then by increasing s and r.
std::vector<CuspPoint> cusp_representatives(const GroupContext& ctx);
/// Index into cusp_representatives(ctx) of the class containing x.
std::size_t cusp_class(const GroupContext& ctx, const std::vector<CuspPoint>& reps, const CuspPoint& x);

/// How a user-supplied list of cusps sits among the classes of Γ.
struct CuspMatchReport {
  std::vector<CuspPoint> candidates;
  std::vector<std::size_t> classes;  // class index per candidate
  bool pairwise_inequivalent = true;
  bool exhaustive = true;
  std::vector<std::size_t> missing;  // classes hit by no candidate
};

CuspMatchReport match_cusps(const GroupContext& ctx, const std::vector<CuspPoint>& candidates);

/// Independently computed representatives for Γ0(50) ∩ Γ1(5), used as a cross-check.
std::vector<CuspPoint> reference_cusps_50_5();

struct WordLetter {
  enum class Kind { S, T } kind;
  std::int64_t exponent = 1;  // T^k; S letters always have exponent 1

  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

struct STWord {
  std::vector<WordLetter> letters;
  bool negated = false;  // the letters evaluate to -γ

  GroupElement evaluate() const;  // product of the letters, without the sign
};

std::string to_string(const STWord& w);

/// Euclidean decomposition of the bottom row into letters S and T^k.
STWord decompose_ST(const GroupElement& g);

/// v_η²(γ) = (-1)^{(d-1)/2} ζ12^{-ac(d²-1) + d(b-c)} as k with value ζ24^k,
/// 0 <= k < 24. Throws Error(domain) for even d.
int eta_multiplier_sq_exponent(const GroupElement& g);
CycloNum eta_multiplier_sq(const GroupElement& g);

/// γ_n = (a, nb; c/n, d); requires n | c.
GroupElement gamma_n(const GroupElement& g, std::int64_t n);

/// Random element of Γ with |c| <= max_entry·N (c ≠ 0) and |d| <= max_entry.
GroupElement random_element(const GroupContext& ctx, std::mt19937_64& rng, std::int64_t max_entry = 1000);

// ---- invariant orders ----------------------------------------------------

using CuspOrd = std::function<QExponent(const CuspPoint&)>;

/// ord(f(Nz), r/s) = (N,s)²/N · ord(f, Nr/s).
QExponent ord_scale(std::int64_t N, const CuspPoint& cusp, const CuspOrd& base_ord);

/// Orders at ∞ of the completed functions M~(a/5), N~(a/5), M~(a,b), N~(a,b).
struct OrdSymbol {
  enum class Kind { M_frac, N_frac, M_ab, N_ab } kind;
  int a = 1;
  int b = 0;  // unused for the fractional kinds
};

/// "M(1/5)", "N(2/5)", "M(3,1)", "N(0,3)".
OrdSymbol parse_ord_symbol(const std::string& text);
std::string to_string(const OrdSymbol& s);

QExponent ord_table_infty(const OrdSymbol& s);
QExponent ord_table_infty(const std::string& symbol);
/// Every symbol of the table, in a fixed order.
std::vector<OrdSymbol> ord_table_symbols();
/// Minimum of the table over all symbols.
QExponent ord_table_min();

/// ord(g, r/s) and ord(h, r/s) for the normalized Rogers-Ramanujan functions.
QExponent ord_gh_at_cusp(char which, const CuspPoint& cusp);

/// ord(η, r/s) = 1/24 for every cusp (weight 1/2 on SL2(Z)).
QExponent ord_eta(const CuspPoint& cusp);
/// ord(∏ η(δz)^{r_δ}, r/s).
QExponent ord_eta_quotient(const std::vector<std::pair<std::int64_t, int>>& factors, const CuspPoint& cusp);

/// -(10,s)²/600 + min{1/24 + ((50,s)² - (25,s)²)/600, (2,s)²/24}.
QExponent R_lower_bound(std::int64_t s);

/// Exact lower bound for ord(η(z)R(z), r/s) using the cusp-dependent orders
/// of g(10z) and h(10z) rather than their minimum.
QExponent ord_eta_R_at_cusp(const CuspPoint& cusp);

/// ord(m(25z), 13/50) with m = η(z) M~(a/5, z), a in {1, 2}. Uses the
/// transport M~(a/5) at 13/2 ↦ M~(3a mod 5, a) at ∞ along (13 6; 2 1).
QExponent ord_m25_at_13_50(int a);

}  // namespace mtc
