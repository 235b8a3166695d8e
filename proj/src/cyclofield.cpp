#include "mtc/cyclofield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mtc/error.hpp"

namespace mtc {

namespace {

constexpr int kN = CycloNum::kConductor;
constexpr int kD = CycloNum::kDegree;

// Φ240: x^64 = -x^56 + x^40 + x^32 + x^24 - x^8 - 1.
template <class T>
void reduce_top_down(std::vector<T>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= kD; --i) {
    if (p[i] == 0) continue;
    const T c = p[i];
    p[i - 8] -= c;
    p[i - 24] += c;
    p[i - 32] += c;
    p[i - 40] += c;
    p[i - 56] -= c;
    p[i - 64] -= c;
    p[i] = 0;
  }
  p.resize(kD);
}

struct SparseInt {
  std::vector<std::pair<int, std::int64_t>> terms;
};

// Reduced power basis expansion of x^e for 0 <= e < 240.
const std::array<SparseInt, kN>& power_table() {
  static const std::array<SparseInt, kN> table = [] {
    std::array<SparseInt, kN> t;
    std::vector<std::int64_t> cur(kD + 1, 0);
    cur[0] = 1;
    for (int e = 0; e < kN; ++e) {
      for (int i = 0; i < kD; ++i)
        if (cur[i] != 0) t[e].terms.emplace_back(i, cur[i]);
      std::vector<std::int64_t> next(kD + 1, 0);
      for (int i = 0; i < kD; ++i) next[i + 1] = cur[i];
      reduce_top_down(next);
      next.resize(kD + 1, 0);
      cur = std::move(next);
    }
    return t;
  }();
  return table;
}

int mod240(long k) {
  long r = k % kN;
  return static_cast<int>(r < 0 ? r + kN : r);
}

// Chain of automorphisms σ_1..σ_6 with H_i = <σ_1..σ_i> of order 2^i; the norm
// from Fix(H_{i-1}) to Fix(H_i) is y·σ_i(y).
const std::vector<int>& norm_chain() {
  static const std::vector<int> chain = [] {
    std::vector<int> units;
    for (int k = 1; k < kN; ++k)
      if (std::gcd(k, kN) == 1) units.push_back(k);
    std::vector<int> subgroup{1};
    std::vector<int> out;
    while (subgroup.size() < units.size()) {
      auto in_h = [&](int x) {
        return std::find(subgroup.begin(), subgroup.end(), x) != subgroup.end();
      };
      for (int g : units) {
        if (in_h(g) || !in_h(g * g % kN)) continue;
        std::vector<int> coset;
        for (int h : subgroup) coset.push_back(h * g % kN);
        subgroup.insert(subgroup.end(), coset.begin(), coset.end());
        out.push_back(g);
        break;
      }
    }
    return out;
  }();
  return chain;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unsupported_root: return "unsupported-root";
    case ErrorKind::invalid_automorphism: return "invalid-automorphism";
    case ErrorKind::non_invertible: return "non-invertible";
    case ErrorKind::unsupported_twist: return "unsupported-twist";
    case ErrorKind::insufficient_precision: return "insufficient-precision";
    case ErrorKind::divergent_product: return "divergent-product";
    case ErrorKind::domain: return "formula-domain";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::convergence_failure: return "convergence-failure";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::parse: return "parse";
  }
  return "error";
}

CycloNum::CycloNum(long value) {
  if (value != 0) num_.emplace_back(value);
}

CycloNum::CycloNum(const Rational& value) {
  if (value != 0) {
    num_.emplace_back(value.get_num());
    den_ = value.get_den();
  }
}

CycloNum CycloNum::from_power_coefficients(std::span<const Rational> c) {
  Integer lcm = 1;
  for (const auto& q : c)
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  CycloNum out;
  out.num_.assign(kD, Integer(0));
  const auto& table = power_table();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Integer scaled = c[i].get_num() * (lcm / c[i].get_den());
    for (const auto& [idx, v] : table[mod240(static_cast<long>(i))].terms)
      out.num_[idx] += scaled * v;
  }
  out.den_ = lcm;
  out.normalize();
  return out;
}

CycloNum CycloNum::from_integer_powers(std::span<const std::int64_t> c) {
  std::vector<std::int64_t> acc(kD, 0);
  const auto& table = power_table();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (const auto& [idx, v] : table[mod240(static_cast<long>(i))].terms) acc[idx] += c[i] * v;
  }
  CycloNum out;
  out.num_.reserve(kD);
  for (auto v : acc) out.num_.emplace_back(static_cast<long>(v));
  out.normalize();
  return out;
}

Rational CycloNum::coefficient(int i) const {
  if (i < 0 || i >= kD || static_cast<std::size_t>(i) >= num_.size()) return Rational(0);
  Rational q(num_[i], den_);
  q.canonicalize();
  return q;
}

std::array<Rational, CycloNum::kDegree> CycloNum::coefficients() const {
  std::array<Rational, kD> out;
  for (int i = 0; i < kD; ++i) out[i] = coefficient(i);
  return out;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::domain, "value is not rational: " + to_string(*this));
  return coefficient(0);
}

int CycloNum::support_size() const noexcept {
  return static_cast<int>(std::count_if(num_.begin(), num_.end(), [](const Integer& v) { return v != 0; }));
}

void CycloNum::expand() {
  if (num_.size() < static_cast<std::size_t>(kD)) num_.resize(kD, Integer(0));
}

void CycloNum::normalize() {
  if (num_.size() > 1 &&
      std::all_of(num_.begin() + 1, num_.end(), [](const Integer& v) { return v == 0; }))
    num_.resize(1);
  if (num_.size() == 1 && num_[0] == 0) num_.clear();
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& v : num_) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& v : num_)
    if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycloNum CycloNum::operator-() const {
  CycloNum out(*this);
  for (auto& v : out.num_) v = -v;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (num_.size() < o.num_.size()) expand();
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (auto& v : num_) v *= o.den_;
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.is_zero() || b.is_zero()) return {};
  CycloNum out;
  if (a.is_rational() || b.is_rational()) {
    const CycloNum& s = a.is_rational() ? a : b;
    const CycloNum& v = a.is_rational() ? b : a;
    out.num_ = v.num_;
    for (auto& x : out.num_) x *= s.num_[0];
    out.den_ = s.den_ * v.den_;
    out.normalize();
    return out;
  }
  std::vector<Integer> prod(2 * kD - 1);
  std::vector<int> nz;
  nz.reserve(kD);
  for (int j = 0; j < kD; ++j)
    if (b.num_[j] != 0) nz.push_back(j);
  for (int i = 0; i < kD; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j : nz) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  reduce_top_down(prod);
  out.num_ = std::move(prod);
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }
CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this = *this / o; }

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::non_invertible, "inverse of zero");
  if (is_rational()) return CycloNum(Rational(1) / coefficient(0));
  CycloNum y = *this;
  CycloNum acc(1);
  for (int k : norm_chain()) {
    if (y.is_rational()) break;
    CycloNum conj = y.galois_image(k);
    acc *= conj;
    y *= conj;
  }
  return acc * CycloNum(Rational(1) / y.rational_value());
}

CycloNum CycloNum::galois_image(int k) const {
  if (is_rational()) return *this;
  const auto& table = power_table();
  CycloNum out;
  out.num_.assign(kD, Integer(0));
  for (int i = 0; i < kD; ++i) {
    if (num_[i] == 0) continue;
    for (const auto& [idx, v] : table[mod240(static_cast<long>(i) * k)].terms) {
      if (v == 1)
        out.num_[idx] += num_[i];
      else if (v == -1)
        out.num_[idx] -= num_[i];
      else
        out.num_[idx] += num_[i] * v;
    }
  }
  out.den_ = den_;
  out.normalize();
  return out;
}

CycloNum zeta(int n, long k) {
  if (n <= 0 || kN % n != 0)
    throw Error(ErrorKind::unsupported_root, "zeta_" + std::to_string(n) + " is not in Q(zeta_240)");
  const int e = mod240(static_cast<long>(kN / n) * (k % n));
  std::vector<std::int64_t> c(e + 1, 0);
  c[e] = 1;
  return CycloNum::from_integer_powers(c);
}

CycloNum imag_unit() { return zeta(4, 1); }

CycloNum alpha() {
  static const CycloNum a = -imag_unit() * (zeta(10, 1) - zeta(10, -1));
  return a;
}

CycloNum beta() {
  static const CycloNum b = -imag_unit() * (zeta(5, 1) - zeta(5, -1));
  return b;
}

namespace {

CycloNum sqrt_prime(int p) {
  switch (p) {
    case 2: return zeta(8, 1) + zeta(8, -1);
    case 3: return zeta(12, 1) + zeta(12, -1);
    case 5: return zeta(5, 1) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4);
    default: break;
  }
  throw Error(ErrorKind::unsupported_root, "sqrt(" + std::to_string(p) + ")");
}

}  // namespace

CycloNum sqrt_rational(const Rational& r) {
  if (sgn(r) <= 0) throw Error(ErrorKind::unsupported_root, "sqrt of non-positive rational");
  Integer m = r.get_num() * r.get_den();
  Integer root = 1;
  CycloNum radical(1);
  for (int p : {2, 3, 5}) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) radical *= sqrt_prime(p);
  }
  if (!mpz_perfect_square_p(m.get_mpz_t()))
    throw Error(ErrorKind::unsupported_root, "sqrt(" + r.get_str() + ") is not in Q(zeta_240)");
  Integer s;
  mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
  root *= s;
  Rational scale(root, r.get_den());
  scale.canonicalize();
  return radical * CycloNum(scale);
}

CycloNum principal_sqrt(const Rational& r, int n, long k) {
  if (n <= 0) throw Error(ErrorKind::unsupported_root, "bad root order");
  long kk = k % n;
  if (kk < 0) kk += n;
  if (2 * kk > n) kk -= n;
  if (kN % (2 * n) != 0)
    throw Error(ErrorKind::unsupported_root, "zeta_" + std::to_string(2 * n) + " is not in Q(zeta_240)");
  return sqrt_rational(r) * zeta(2 * n, kk);
}

CycloNum csc_pi_fifth(int a) {
  if (a == 1) return CycloNum(2) * alpha().inverse();
  if (a == 2) return CycloNum(2) * beta().inverse();
  throw Error(ErrorKind::domain, "csc(a*pi/5) only for a in {1,2}");
}

FieldAutomorphism::FieldAutomorphism(long exponent) : k_(mod240(exponent)) {
  if (std::gcd(k_, kN) != 1)
    throw Error(ErrorKind::invalid_automorphism,
                "exponent " + std::to_string(exponent) + " is not a unit mod 240");
}

FieldAutomorphism FieldAutomorphism::tau() {
  static const FieldAutomorphism t = [] {
    for (int k = 1; k < kN; k += 16) {
      if (std::gcd(k, kN) != 1) continue;
      FieldAutomorphism phi(k);
      if (phi(alpha()) == beta()) return phi;
    }
    throw Error(ErrorKind::invalid_automorphism, "no automorphism realizes tau");
  }();
  return t;
}

CycloNum apply_automorphism(const FieldAutomorphism& phi, const CycloNum& x) { return phi(x); }

std::vector<FieldAutomorphism> galois_group() {
  std::vector<FieldAutomorphism> out;
  for (int k = 1; k < kN; ++k)
    if (std::gcd(k, kN) == 1) out.emplace_back(k);
  return out;
}

bool fixed_by(const CycloNum& x, std::span<const FieldAutomorphism> group) {
  return std::all_of(group.begin(), group.end(), [&](const FieldAutomorphism& g) { return g(x) == x; });
}

std::complex<double> embed(const CycloNum& x) {
  static const std::array<std::complex<double>, kD> roots = [] {
    std::array<std::complex<double>, kD> r;
    for (int i = 0; i < kD; ++i) r[i] = std::polar(1.0, 2.0 * std::numbers::pi * i / kN);
    return r;
  }();
  std::complex<double> sum = 0.0;
  for (int i = 0; i < kD; ++i) {
    const Rational c = x.coefficient(i);
    if (c != 0) sum += c.get_d() * roots[i];
  }
  return sum;
}

std::string to_string(const CycloNum& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < CycloNum::kDegree; ++i) {
    const Rational c = x.coefficient(i);
    if (c == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    const Rational a = abs(c);
    if (i == 0)
      os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << to_string(x); }

}  // namespace mtc
