#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/rational.hpp>

#include "mtc/cyclofield.hpp"

namespace mtc {

using QExponent = boost::rational<std::int64_t>;

/// Exclusive truncation bound; nullopt marks an exact (finite) series.
using OrderBound = std::optional<QExponent>;

std::string to_string(const QExponent& r);
QExponent parse_exponent(const std::string& text);

/// Truncated series Σ c_r q^r over rational exponents r with coefficients in
/// Q(ζ240). Every stored term is exact; terms with r >= bound are unknown and
/// never stored.
class QSeries {
 public:
  using Terms = std::map<QExponent, CycloNum>;

  QSeries() = default;
  explicit QSeries(OrderBound bound) : bound_(bound) {}
  QSeries(Terms terms, OrderBound bound);

  static QSeries monomial(const QExponent& e, const CycloNum& c = CycloNum(1), OrderBound bound = std::nullopt);
  static QSeries constant(const CycloNum& c) { return monomial(QExponent(0), c); }

  const Terms& terms() const noexcept { return terms_; }
  const OrderBound& bound() const noexcept { return bound_; }
  bool exact() const noexcept { return !bound_.has_value(); }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  std::optional<QExponent> leading_exponent() const;

  /// Coefficient at r; throws Error(insufficient_precision) when r >= bound.
  CycloNum coefficient(const QExponent& r) const;

  /// Drops terms with exponent >= b and tightens the bound to b.
  QSeries truncated(const QExponent& b) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const CycloNum& s);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const CycloNum& s) { return a *= s; }
  friend QSeries operator*(const CycloNum& s, QSeries a) { return a *= s; }

  /// Same terms and same bound.
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  Terms terms_;
  OrderBound bound_;
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries scalar_mul(const CycloNum& s, const QSeries& f);
QSeries mul(const QSeries& f, const QSeries& g);

/// Multiplicative inverse. An exact series with more than one term has an
/// infinite inverse and needs `cap` as the truncation bound.
QSeries invert(const QSeries& f, OrderBound cap = std::nullopt);

/// f(sz): exponents and bound scale by s > 0.
QSeries scale_z(const QSeries& f, const QExponent& s);

/// f(z + c): the coefficient at r gains e^{2πi rc}. Throws unsupported_twist
/// if some rc has denominator not dividing 240.
QSeries shift_z(const QSeries& f, const QExponent& c);

/// f · (1 - a q^e), e > 0.
QSeries mul_binomial(const QSeries& f, const CycloNum& a, const QExponent& e);
/// f / (1 - a q^e), e > 0. Needs a bounded f or a cap.
QSeries div_binomial(const QSeries& f, const CycloNum& a, const QExponent& e, OrderBound cap = std::nullopt);

/// ζ_n^k as a pair; (1, 0) is the trivial root.
struct RootOfUnity {
  int n = 1;
  long k = 0;
};

/// ∏_{m=0}^{count-1} (1 - ζ q^{base_exp + m·step}) cut at `bound`. count =
/// nullopt is the infinite product, which requires step > 0.
QSeries pochhammer(const QExponent& base_exp, RootOfUnity root, const QExponent& step,
                   std::optional<long> count, const QExponent& bound);

QSeries apply_automorphism(const FieldAutomorphism& phi, const QSeries& f);

struct CompareReport {
  bool equal = true;
  OrderBound checked_below;  // exponents below this were compared
  std::optional<QExponent> first_mismatch;
  CycloNum lhs;
  CycloNum rhs;
};

/// Compares all exponents below min(bound f, bound g) and, if given, <= upto.
CompareReport compare(const QSeries& f, const QSeries& g, std::optional<QExponent> upto = std::nullopt);

std::string to_string(const QSeries& f, int max_terms = 12);

}  // namespace mtc
