#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mtc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element of Q(zeta_240) in the power basis {zeta^i : 0 <= i < 64},
/// reduced modulo the 240th cyclotomic polynomial
///   Phi_240(x) = x^64 + x^56 - x^40 - x^32 - x^24 + x^8 + 1.
///
/// Stored as integer numerators over one positive common denominator with
/// gcd(content, den) = 1. The numerator vector is empty for zero, has length
/// one for rationals and length 64 otherwise, so equal values always have
/// identical representations.
class CycloNum {
 public:
  static constexpr int kConductor = 240;
  static constexpr int kDegree = 64;

  CycloNum() = default;
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const Rational& value);

  /// Σ c[i] ζ^i; indices are read modulo 240, any length is accepted.
  static CycloNum from_power_coefficients(std::span<const Rational> c);
  static CycloNum from_integer_powers(std::span<const std::int64_t> c);

  Rational coefficient(int i) const;
  std::array<Rational, kDegree> coefficients() const;

  bool is_zero() const noexcept { return num_.empty(); }
  bool is_rational() const noexcept { return num_.size() <= 1; }
  Rational rational_value() const;  // requires is_rational()
  int support_size() const noexcept;

  const Integer& denominator() const noexcept { return den_; }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Throws Error(non_invertible) for zero.
  CycloNum inverse() const;

  /// Image under ζ ↦ ζ^k; k must be a unit mod 240 (checked by callers).
  CycloNum galois_image(int k) const;

 private:
  void normalize();
  void expand();

  std::vector<Integer> num_;
  Integer den_{1};
};

/// ζ_n^k = ζ_240^(240k/n). Throws Error(unsupported_root) unless n | 240.
CycloNum zeta(int n, long k = 1);

CycloNum imag_unit();
/// α = 2 sin(π/5) = -ζ4 (ζ10 - ζ10^-1), the positive root of x^4 - 5x^2 + 5 below 2.
CycloNum alpha();
/// β = 2 sin(2π/5) = -ζ4 (ζ5 - ζ5^-1).
CycloNum beta();

/// Positive real square root of a positive rational whose squarefree part
/// divides 30. Throws Error(unsupported_root) otherwise.
CycloNum sqrt_rational(const Rational& r);

/// Square root of r·ζ_n^k on the principal branch: arg(ζ_n^k) is taken in
/// (-π, π] and halved. Requires r > 0, the squarefree part of r dividing 30
/// and 2n | 240.
CycloNum principal_sqrt(const Rational& r, int n, long k);

/// csc(aπ/5) for a in {1,2}: 2α^-1 and 2β^-1.
CycloNum csc_pi_fifth(int a);

/// ζ ↦ ζ^k for a unit k of Z/240.
class FieldAutomorphism {
 public:
  /// Throws Error(invalid_automorphism) if gcd(k, 240) != 1.
  explicit FieldAutomorphism(long exponent);

  static FieldAutomorphism identity() { return FieldAutomorphism(1); }
  static FieldAutomorphism conjugation() { return FieldAutomorphism(-1); }
  /// Smallest k ≡ 1 (mod 16) with α ↦ β; restricts to (α→β, β→-α) on Q(α).
  static FieldAutomorphism tau();
  /// ζ ↦ ζ^97: fixes ζ48 and sends ζ5 to ζ5², so √5 ↦ -√5.
  static FieldAutomorphism sigma() { return FieldAutomorphism(97); }

  int exponent() const noexcept { return k_; }
  FieldAutomorphism operator*(const FieldAutomorphism& o) const {
    return FieldAutomorphism(static_cast<long>(k_) * o.k_);
  }
  bool operator==(const FieldAutomorphism& o) const = default;

  CycloNum operator()(const CycloNum& x) const { return x.galois_image(k_); }

 private:
  int k_;
};

CycloNum apply_automorphism(const FieldAutomorphism& phi, const CycloNum& x);

/// All 64 automorphisms, ordered by exponent.
std::vector<FieldAutomorphism> galois_group();

/// True iff x is fixed by every automorphism in `group`.
bool fixed_by(const CycloNum& x, std::span<const FieldAutomorphism> group);

/// Canonical complex embedding ζ_240 ↦ e^{2πi/240}.
std::complex<double> embed(const CycloNum& x);

std::string to_string(const CycloNum& x);
std::ostream& operator<<(std::ostream& os, const CycloNum& x);

}  // namespace mtc
