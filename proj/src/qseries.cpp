#include "mtc/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "mtc/error.hpp"
#include "mtc/kernels.hpp"

namespace mtc {

namespace {

OrderBound min_bound(const OrderBound& a, const OrderBound& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Valuation used for bound propagation: leading exponent, the bound for an
// empty truncated series, nullopt for the exact zero series.
OrderBound valuation(const QSeries& f) {
  if (auto v = f.leading_exponent()) return v;
  return f.bound();
}

QExponent rational_gcd(const QExponent& a, const QExponent& b) {
  const std::int64_t den = std::lcm(a.denominator(), b.denominator());
  const std::int64_t na = a.numerator() * (den / a.denominator());
  const std::int64_t nb = b.numerator() * (den / b.denominator());
  return QExponent(std::gcd(na, nb), den);
}

std::int64_t ceil_div(const QExponent& x) {
  // ceil of a rational
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x > 0) ++q;
  return q;
}

}  // namespace

std::string to_string(const QExponent& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

QExponent parse_exponent(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return QExponent(std::stoll(text));
    const std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + text + "'");
    return QExponent(std::stoll(text.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse, "not a rational: '" + text + "'");
  }
}

QSeries::QSeries(Terms terms, OrderBound bound) : terms_(std::move(terms)), bound_(bound) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || (bound_ && it->first >= *bound_))
      it = terms_.erase(it);
    else
      ++it;
  }
}

QSeries QSeries::monomial(const QExponent& e, const CycloNum& c, OrderBound bound) {
  Terms t;
  if (!c.is_zero()) t.emplace(e, c);
  return QSeries(std::move(t), bound);
}

std::optional<QExponent> QSeries::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

CycloNum QSeries::coefficient(const QExponent& r) const {
  if (bound_ && r >= *bound_)
    throw Error(ErrorKind::insufficient_precision,
                "coefficient at q^" + to_string(r) + " requested but series is known only below q^" +
                    to_string(*bound_));
  auto it = terms_.find(r);
  return it == terms_.end() ? CycloNum() : it->second;
}

QSeries QSeries::truncated(const QExponent& b) const {
  QSeries out;
  out.bound_ = min_bound(bound_, b);
  out.terms_.insert(terms_.begin(), terms_.lower_bound(*out.bound_));
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  bound_ = min_bound(bound_, o.bound_);
  if (bound_) terms_.erase(terms_.lower_bound(*bound_), terms_.end());
  for (const auto& [e, c] : o.terms_) {
    if (bound_ && e >= *bound_) break;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const QSeries& o) { return *this = *this * o; }

QSeries& QSeries::operator*=(const CycloNum& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  // exact zero annihilates whatever the other bound is
  if ((f.exact() && f.empty()) || (g.exact() && g.empty())) return QSeries();
  OrderBound bound;
  const OrderBound vf = valuation(f), vg = valuation(g);
  if (f.bound_) bound = *vg + *f.bound_;
  if (g.bound_) bound = min_bound(bound, *vf + *g.bound_);
  QSeries out(bound);
  out.terms_ = kernels::series_product(f.terms_, g.terms_, bound);
  return out;
}

QSeries add(const QSeries& f, const QSeries& g) { return f + g; }
QSeries sub(const QSeries& f, const QSeries& g) { return f - g; }
QSeries scalar_mul(const CycloNum& s, const QSeries& f) { return s * f; }
QSeries mul(const QSeries& f, const QSeries& g) { return f * g; }

QSeries invert(const QSeries& f, OrderBound cap) {
  if (f.empty()) throw Error(ErrorKind::non_invertible, "inverse of a series with no known nonzero term");
  const QExponent v = *f.leading_exponent();
  const CycloNum c_inv = f.terms().begin()->second.inverse();
  if (f.size() == 1 && f.exact()) return QSeries::monomial(-v, c_inv);

  OrderBound rel_bound;  // bound of f/(c q^v) - 1
  if (f.bound()) rel_bound = *f.bound() - v;
  if (cap) rel_bound = min_bound(rel_bound, *cap + v);
  if (!rel_bound)
    throw Error(ErrorKind::domain, "inverse of an exact multi-term series needs a truncation cap");

  std::vector<std::pair<std::int64_t, CycloNum>> u;  // relative exponent in steps, c^-1 · coefficient
  QExponent step(0);
  for (const auto& [e, c] : f.terms())
    if (e != v) step = rational_gcd(step, e - v);
  if (step == QExponent(0)) return QSeries::monomial(-v, c_inv, *rel_bound - v);
  for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it) {
    const QExponent k = (it->first - v) / step;
    u.emplace_back(k.numerator(), it->second * c_inv);
  }
  const std::int64_t n = ceil_div(*rel_bound / step);
  std::vector<CycloNum> h(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  if (n > 0) h[0] = CycloNum(1);
  for (std::int64_t i = 1; i < n; ++i) {
    CycloNum acc;
    for (const auto& [k, uk] : u) {
      if (k > i) break;
      if (!h[i - k].is_zero()) acc += uk * h[i - k];
    }
    h[i] = -acc;
  }
  QSeries::Terms out;
  for (std::int64_t i = 0; i < n; ++i)
    if (!h[i].is_zero()) out.emplace(-v + step * QExponent(i), h[i] * c_inv);
  return QSeries(std::move(out), *rel_bound - v);
}

QSeries scale_z(const QSeries& f, const QExponent& s) {
  if (s <= 0) throw Error(ErrorKind::domain, "scale_z needs a positive factor, got " + to_string(s));
  QSeries::Terms out;
  for (const auto& [e, c] : f.terms()) out.emplace_hint(out.end(), e * s, c);
  OrderBound b = f.bound();
  if (b) *b *= s;
  return QSeries(std::move(out), b);
}

QSeries shift_z(const QSeries& f, const QExponent& c) {
  if (c == QExponent(0)) return f;
  QSeries::Terms out;
  for (const auto& [e, coef] : f.terms()) {
    const QExponent t = e * c;
    if (CycloNum::kConductor % t.denominator() != 0)
      throw Error(ErrorKind::unsupported_twist,
                  "shift by " + to_string(c) + " at q^" + to_string(e) + " needs e^{2πi·" + to_string(t) + "}");
    out.emplace_hint(out.end(), e, coef * zeta(static_cast<int>(t.denominator()), t.numerator()));
  }
  return QSeries(std::move(out), f.bound());
}

QSeries mul_binomial(const QSeries& f, const CycloNum& a, const QExponent& e) {
  if (e <= 0) throw Error(ErrorKind::domain, "binomial exponent must be positive");
  QSeries::Terms t;
  for (const auto& [r, c] : f.terms()) t.emplace_hint(t.end(), r + e, -(a * c));
  OrderBound b = f.bound();
  // the shifted part is known to bound + e, so the total keeps f's bound
  if (b) *b += e;
  return f + QSeries(std::move(t), b);
}

QSeries div_binomial(const QSeries& f, const CycloNum& a, const QExponent& e, OrderBound cap) {
  if (e <= 0) throw Error(ErrorKind::domain, "binomial exponent must be positive");
  OrderBound b = min_bound(f.bound(), cap);
  if (!b) throw Error(ErrorKind::domain, "division by a binomial needs a truncation bound");
  QSeries::Terms t(f.terms().begin(), f.terms().lower_bound(*b));
  // h(r) = f(r) + a h(r - e); map insertion keeps in-order traversal valid
  for (auto it = t.begin(); it != t.end(); ++it) {
    if (it->second.is_zero()) continue;
    const QExponent r = it->first + e;
    if (r >= *b) continue;
    t[r] += a * it->second;
  }
  return QSeries(std::move(t), b);
}

QSeries pochhammer(const QExponent& base_exp, RootOfUnity root, const QExponent& step,
                   std::optional<long> count, const QExponent& bound) {
  if (count && *count < 0) throw Error(ErrorKind::domain, "negative Pochhammer length");
  if (!count && step <= 0) throw Error(ErrorKind::divergent_product, "infinite product with non-positive step");
  if (base_exp < 0) throw Error(ErrorKind::domain, "Pochhammer base exponent must be nonnegative");
  const CycloNum a = zeta(root.n, root.k);
  QSeries out = QSeries::monomial(QExponent(0), CycloNum(1), bound);
  for (long m = 0; !count || m < *count; ++m) {
    const QExponent e = base_exp + step * QExponent(m);
    if (e < 0) throw Error(ErrorKind::domain, "Pochhammer factor with negative exponent");
    if (e == QExponent(0)) {
      if (a == CycloNum(1)) throw Error(ErrorKind::domain, "Pochhammer factor (1 - q^0) vanishes");
      out *= CycloNum(1) - a;
      continue;
    }
    if (e >= bound) {
      if (step > 0) break;
      continue;
    }
    out = mul_binomial(out, a, e);
  }
  return out;
}

QSeries apply_automorphism(const FieldAutomorphism& phi, const QSeries& f) {
  QSeries::Terms out;
  for (const auto& [e, c] : f.terms()) out.emplace_hint(out.end(), e, phi(c));
  return QSeries(std::move(out), f.bound());
}

CompareReport compare(const QSeries& f, const QSeries& g, std::optional<QExponent> upto) {
  CompareReport rep;
  rep.checked_below = min_bound(f.bound(), g.bound());
  auto in_range = [&](const QExponent& e) {
    return (!rep.checked_below || e < *rep.checked_below) && (!upto || e <= *upto);
  };
  auto fi = f.terms().begin(), gi = g.terms().begin();
  while (fi != f.terms().end() || gi != g.terms().end()) {
    QExponent e;
    CycloNum a, b;
    if (gi == g.terms().end() || (fi != f.terms().end() && fi->first < gi->first)) {
      e = fi->first;
      a = fi->second;
      ++fi;
    } else if (fi == f.terms().end() || gi->first < fi->first) {
      e = gi->first;
      b = gi->second;
      ++gi;
    } else {
      e = fi->first;
      a = fi->second;
      b = gi->second;
      ++fi;
      ++gi;
    }
    if (!in_range(e)) break;
    if (a != b) {
      rep.equal = false;
      rep.first_mismatch = e;
      rep.lhs = a;
      rep.rhs = b;
      return rep;
    }
  }
  return rep;
}

std::string to_string(const QSeries& f, int max_terms) {
  std::ostringstream os;
  int n = 0;
  for (const auto& [e, c] : f.terms()) {
    if (n == max_terms) {
      os << " + ...";
      break;
    }
    if (n++) os << " + ";
    os << "(" << to_string(c) << ")*q^" << to_string(e);
  }
  if (n == 0) os << "0";
  if (f.bound()) os << " + O(q^" << to_string(*f.bound()) << ")";
  return os.str();
}

}  // namespace mtc
