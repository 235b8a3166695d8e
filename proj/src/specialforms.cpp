#include "mtc/specialforms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "mtc/error.hpp"
#include "mtc/modgroup.hpp"

namespace mtc {

namespace {

using Q = QExponent;

QSeries one(const Q& bound) { return QSeries::monomial(Q(0), CycloNum(1), bound); }

// q^e · f, keeping f's relative precision.
QSeries times_qpow(const QSeries& f, const Q& e) {
  QSeries::Terms t;
  for (const auto& [r, c] : f.terms()) t.emplace_hint(t.end(), r + e, c);
  OrderBound b = f.bound();
  if (b) *b += e;
  return QSeries(std::move(t), b);
}

// f restricted to exponents below `bound`, which f must know.
QSeries fit(const QSeries& f, const Q& bound) {
  if (f.bound() && *f.bound() < bound)
    throw Error(ErrorKind::insufficient_precision,
                "internal precision " + to_string(*f.bound()) + " below requested " + to_string(bound));
  return f.truncated(bound);
}

const CycloNum& minus_one() {
  static const CycloNum m(-1);
  return m;
}

// Σ_{n≥0} term(n), where term(n) starts at lead(n) and lead is increasing.
QSeries eulerian_sum(const Q& bound, const std::function<Q(long)>& lead,
                     const std::function<QSeries(long)>& term) {
  QSeries sum(bound);
  for (long n = 0; lead(n) < bound; ++n) sum += term(n);
  return sum;
}

QSeries f0_series(const Q& b) {
  QSeries sum(b), t = one(b);
  for (long n = 0; Q(n * n) < b; ++n) {
    if (n > 0) t = div_binomial(times_qpow(t, Q(2 * n - 1)).truncated(b), minus_one(), Q(n));
    sum += t;
  }
  return sum;
}

QSeries f1_series(const Q& b) {
  QSeries sum(b), t = one(b);
  for (long n = 0; Q(n * (n + 1)) < b; ++n) {
    if (n > 0) t = div_binomial(times_qpow(t, Q(2 * n)).truncated(b), minus_one(), Q(n));
    sum += t;
  }
  return sum;
}

QSeries F0_series(const Q& b) {
  QSeries sum(b), t = one(b);
  for (long n = 0; Q(2 * n * n) < b; ++n) {
    if (n > 0) t = div_binomial(times_qpow(t, Q(4 * n - 2)).truncated(b), CycloNum(1), Q(2 * n - 1));
    sum += t;
  }
  return sum;
}

QSeries F1_series(const Q& b) {
  QSeries sum(b), t = div_binomial(one(b), CycloNum(1), Q(1));
  for (long n = 0; Q(2 * n * (n + 1)) < b; ++n) {
    if (n > 0) t = div_binomial(times_qpow(t, Q(4 * n)).truncated(b), CycloNum(1), Q(2 * n + 1));
    sum += t;
  }
  return sum;
}

// Σ q^{lead(n)} (-q;q^d)_n type sums: t_n = t_{n-1} q^{lead(n)-lead(n-1)} (1 + q^{e(n)}).
QSeries positive_sum(const Q& b, const std::function<long(long)>& lead, const std::function<long(long)>& factor_exp) {
  QSeries sum(b);
  QSeries t = times_qpow(one(b), Q(lead(0))).truncated(b);
  for (long n = 0; Q(lead(n)) < b; ++n) {
    if (n > 0) t = mul_binomial(times_qpow(t, Q(lead(n) - lead(n - 1))).truncated(b), minus_one(), Q(factor_exp(n)));
    sum += t;
  }
  return sum;
}

QSeries chi_series(const Q& b, long extra) {
  return eulerian_sum(
      b, [](long n) { return Q(n); },
      [&](long n) {
        QSeries t = times_qpow(one(b), Q(n)).truncated(b);
        for (long m = n + 1; m <= 2 * n + extra; ++m) t = div_binomial(t, CycloNum(1), Q(m));
        return t;
      });
}

Q m_exponent(int a) { return Q(3 * a, 10) * (Q(1) - Q(a, 5)) - Q(1, 24); }

Q p2(const Q& t) { return t * t - t + Q(1, 6); }

}  // namespace

QSeries mock_theta(const std::string& name, const Q& bound) {
  if (name == "f0") return f0_series(bound);
  if (name == "f1") return f1_series(bound);
  if (name == "F0") return F0_series(bound);
  if (name == "F1") return F1_series(bound);
  if (name == "psi0")
    return positive_sum(bound, [](long n) { return (n + 1) * (n + 2) / 2; }, [](long n) { return n; });
  if (name == "psi1") return positive_sum(bound, [](long n) { return n * (n + 1) / 2; }, [](long n) { return n; });
  if (name == "phi0") return positive_sum(bound, [](long n) { return n * n; }, [](long n) { return 2 * n - 1; });
  if (name == "phi1")
    return positive_sum(bound, [](long n) { return (n + 1) * (n + 1); }, [](long n) { return 2 * n - 1; });
  if (name == "chi0") return chi_series(bound, 0);
  if (name == "chi1") return chi_series(bound, 1);
  throw Error(ErrorKind::unknown_name, "mock theta function '" + name + "'");
}

std::vector<std::string> mock_theta_names() {
  return {"f0", "f1", "F0", "F1", "psi0", "psi1", "phi0", "phi1", "chi0", "chi1"};
}

QSeries M_series(int a, const Q& bound) {
  if (a < 1 || a > 4) throw Error(ErrorKind::domain, "M(a/5) needs a in 1..4");
  const Q r(a, 5);
  QSeries sum(bound), t = one(bound);
  for (long n = 1; Q(n * (n - 1)) < bound; ++n) {
    if (n > 1) t = times_qpow(t, Q(2 * (n - 1))).truncated(bound);
    t = div_binomial(t, CycloNum(1), r + Q(n - 1));
    t = div_binomial(t, CycloNum(1), Q(1) - r + Q(n - 1));
    sum += t;
  }
  return sum;
}

QSeries N_series(int a, const Q& bound) {
  if (a < 1 || a > 4) throw Error(ErrorKind::domain, "N(a/5) needs a in 1..4");
  const CycloNum z = zeta(5, a), zi = zeta(5, -a);
  QSeries sum = one(bound), t = one(bound);
  for (long n = 1; Q(n * n) < bound; ++n) {
    t = times_qpow(t, Q(2 * n - 1)).truncated(bound);
    t = div_binomial(div_binomial(t, z, Q(n)), zi, Q(n));
    sum += t;
  }
  return sum;
}

QSeries eta(const Q& scale, const Q& bound) {
  if (scale <= 0) throw Error(ErrorKind::domain, "eta scale must be positive");
  const Q base = bound / scale;
  QSeries p = pochhammer(Q(1), {}, Q(1), std::nullopt, base + Q(1));
  return fit(scale_z(times_qpow(p, Q(1, 24)), scale), bound);
}

QSeries eta_quotient(std::span<const EtaFactor> factors, const Q& bound) {
  // each factor needs the valuation of the others as extra precision
  Q total(0), margin(1);
  for (const auto& f : factors) {
    total += f.scale * Q(f.power, 24);
    margin += f.scale * Q(std::abs(f.power), 12);
  }
  const Q work = bound + margin;
  QSeries out = one(work);
  for (const auto& f : factors) {
    const QSeries e = eta(f.scale, work + f.scale);
    const QSeries base = f.power >= 0 ? e : invert(e);
    for (int i = 0; i < std::abs(f.power); ++i) out *= base;
  }
  return fit(out, bound);
}

QSeries theta4(const Q& bound) {
  const QSeries a = pochhammer(Q(1), {}, Q(1), std::nullopt, bound);
  const QSeries b = pochhammer(Q(2), {}, Q(2), std::nullopt, bound + Q(1));
  return fit(a * a * invert(b), bound);
}

QSeries psi_theta(const Q& bound) {
  const QSeries a = pochhammer(Q(2), {}, Q(2), std::nullopt, bound);
  const QSeries b = pochhammer(Q(1), {}, Q(1), std::nullopt, bound + Q(1));
  return fit(a * a * invert(b), bound);
}

QSeries theta4_eta(const Q& bound) {
  const EtaFactor f[] = {{Q(1), 2}, {Q(2), -1}};
  return eta_quotient(f, bound);
}

QSeries psi_theta_eta(const Q& bound) {
  const EtaFactor f[] = {{Q(2), 2}, {Q(1), -1}};
  return fit(times_qpow(eta_quotient(f, bound + Q(1, 8)), Q(-1, 8)), bound);
}

QSeries generalized_eta(int delta, int g, const Q& bound) { return generalized_eta(delta, g, Q(1), bound); }

QSeries generalized_eta(int delta, int g, const Q& scale, const Q& bound) {
  if (delta <= 0 || g <= 0 || 2 * g >= delta) throw Error(ErrorKind::domain, "generalized eta needs 0 < g < delta/2");
  const Q lead = Q(delta, 2) * p2(Q(g, delta));
  const Q base = bound / scale - lead + Q(1);
  QSeries p = one(base);
  for (long m = 1; Q(m) < base; ++m)
    if (m % delta == g || m % delta == delta - g) p = mul_binomial(p, CycloNum(1), Q(m));
  return fit(scale_z(times_qpow(p, lead), scale), bound);
}

QSeries rogers_ramanujan_product(char which, const Q& bound) {
  int r1 = 0;
  if (which == 'G' || which == 'g')
    r1 = 1;
  else if (which == 'H' || which == 'h')
    r1 = 2;
  else
    throw Error(ErrorKind::unknown_name, std::string("Rogers-Ramanujan function '") + which + "'");
  QSeries p = one(bound);
  for (long m = 1; Q(m) < bound; ++m)
    if (m % 5 == r1 || m % 5 == 5 - r1) p = div_binomial(p, CycloNum(1), Q(m));
  return p;
}

QSeries rogers_ramanujan(char which, const Q& scale, const Q& bound) {
  if (scale <= 0) throw Error(ErrorKind::domain, "Rogers-Ramanujan scale must be positive");
  const Q lead = (which == 'g' || which == 'G') ? Q(-1, 60) : Q(11, 60);
  const Q base = bound / scale - lead + Q(1);
  return fit(scale_z(times_qpow(rogers_ramanujan_product(which, base), lead), scale), bound);
}

// ---- completed functions -------------------------------------------------

const char* to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::explicit_terms: return "explicit";
    case CompletionStatus::theta_integral: return "theta_integral";
    case CompletionStatus::unspecified: return "unspecified";
  }
  return "?";
}

CompletionStatus CompletedFunction::status() const {
  if (completion_unspecified) return CompletionStatus::unspecified;
  if (!theta_integrals.empty()) return CompletionStatus::theta_integral;
  return CompletionStatus::explicit_terms;
}

std::vector<CompletionTerm> canonicalize(std::vector<CompletionTerm> terms) {
  using Key = std::tuple<Q, Q, Q, Q>;
  std::map<Key, CycloNum> merged;
  for (auto& t : terms) merged[{t.a, t.b, t.arg_scale, t.arg_shift}] += t.prefactor;
  std::vector<CompletionTerm> out;
  for (auto& [k, c] : merged)
    if (!c.is_zero()) out.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)});
  return out;
}

namespace {

std::vector<ThetaIntegralTerm> canonicalize_theta(std::vector<ThetaIntegralTerm> terms) {
  using Key = std::tuple<int, Q, Q>;
  std::map<Key, CycloNum> merged;
  for (auto& t : terms) merged[{t.a, t.arg_scale, t.arg_shift}] += t.prefactor;
  std::vector<ThetaIntegralTerm> out;
  for (auto& [k, c] : merged)
    if (!c.is_zero()) out.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
  return out;
}

}  // namespace

CompletedFunction operator+(const CompletedFunction& f, const CompletedFunction& g) {
  CompletedFunction out;
  out.name = f.name + " + " + g.name;
  out.holo = f.holo + g.holo;
  out.completion = f.completion;
  out.completion.insert(out.completion.end(), g.completion.begin(), g.completion.end());
  out.completion = canonicalize(std::move(out.completion));
  out.theta_integrals = f.theta_integrals;
  out.theta_integrals.insert(out.theta_integrals.end(), g.theta_integrals.begin(), g.theta_integrals.end());
  out.theta_integrals = canonicalize_theta(std::move(out.theta_integrals));
  out.completion_unspecified = f.completion_unspecified || g.completion_unspecified;
  return out;
}

CompletedFunction operator*(const CycloNum& s, const CompletedFunction& f) {
  CompletedFunction out = f;
  out.holo *= s;
  for (auto& t : out.completion) t.prefactor *= s;
  for (auto& t : out.theta_integrals) t.prefactor *= s;
  out.completion = canonicalize(std::move(out.completion));
  out.theta_integrals = canonicalize_theta(std::move(out.theta_integrals));
  return out;
}

CompletedFunction operator-(const CompletedFunction& f) {
  CompletedFunction out = CycloNum(-1) * f;
  out.name = "-" + f.name;
  return out;
}

CompletedFunction operator-(const CompletedFunction& f, const CompletedFunction& g) { return f + (-g); }

CompletedFunction holomorphic(const std::string& name, QSeries f) {
  CompletedFunction out;
  out.name = name;
  out.holo = std::move(f);
  return out;
}

CompletedFunction compose_affine(const CompletedFunction& f, const Q& s, const Q& c) {
  CompletedFunction out = f;
  out.name = f.name + "(" + to_string(s) + "z+" + to_string(c) + ")";
  out.holo = shift_z(scale_z(f.holo, s), c / s);
  for (auto& t : out.completion) {
    t.arg_shift += t.arg_scale * c;
    t.arg_scale *= s;
  }
  for (auto& t : out.theta_integrals) {
    t.arg_shift += t.arg_scale * c;
    t.arg_scale *= s;
  }
  return out;
}

namespace {

// ζ10^a (ζ12^{-1} R_{(6a-5)/30,1/2} + ζ12 R_{(6a+5)/30,1/2})(scale z), times c.
std::vector<CompletionTerm> m_completion(int a, const CycloNum& c, const Q& scale) {
  const CycloNum p = c * zeta(10, a);
  return canonicalize({{p * zeta(12, -1), Q(6 * a - 5, 30), Q(1, 2), scale, Q(0)},
                       {p * zeta(12, 1), Q(6 * a + 5, 30), Q(1, 2), scale, Q(0)}});
}

CompletedFunction make(const std::string& name, QSeries holo, std::vector<CompletionTerm> completion = {}) {
  CompletedFunction out;
  out.name = name;
  out.holo = std::move(holo);
  out.completion = canonicalize(std::move(completion));
  return out;
}

// q^lead · s(bound - lead), cut at bound.
QSeries shifted_series(const std::function<QSeries(const Q&)>& s, const Q& lead, const Q& bound) {
  return fit(times_qpow(s(bound - lead + Q(1)), lead), bound);
}

}  // namespace

CompletedFunction completed(const std::string& name, const Q& bound) {
  auto mock = [](const char* n) { return [n](const Q& b) { return mock_theta(n, b); }; };
  auto mock_minus_q = [](const char* n) { return [n](const Q& b) { return shift_z(mock_theta(n, b), Q(1, 2)); }; };
  if (name == "f0")
    return make(name, shifted_series(mock("f0"), Q(-1, 60), bound), m_completion(1, CycloNum(-1), Q(30)));
  if (name == "f1")
    return make(name, shifted_series(mock("f1"), Q(11, 60), bound), m_completion(2, CycloNum(-1), Q(30)));
  if (name == "F0") {
    auto f = [](const Q& b) { return mock_theta("F0", b) - one(b); };
    return make(name, shifted_series(f, Q(-1, 120), bound), m_completion(1, CycloNum(Rational(1, 2)), Q(15)));
  }
  if (name == "F1")
    return make(name, shifted_series(mock("F1"), Q(71, 120), bound), m_completion(2, CycloNum(Rational(1, 2)), Q(15)));
  if (name == "M1" || name == "M2") {
    const int a = name[1] - '0';
    const Q lead = m_exponent(a);
    QSeries holo = CycloNum(2) * shifted_series([a](const Q& b) { return M_series(a, b); }, lead, bound);
    return make(name, std::move(holo), m_completion(a, CycloNum(1), Q(3)));
  }
  if (name == "N1" || name == "N2") {
    const int a = name[1] - '0';
    QSeries holo = csc_pi_fifth(a) * shifted_series([a](const Q& b) { return N_series(a, b); }, Q(-1, 24), bound);
    CompletedFunction out = make(name, std::move(holo));
    out.theta_integrals.push_back({CycloNum(1), a, Q(1), Q(0)});
    return out;
  }
  CompletedFunction out;
  if (name == "psi0")
    out = make(name, shifted_series(mock("psi0"), Q(-1, 60), bound));
  else if (name == "psi1")
    out = make(name, shifted_series(mock("psi1"), Q(11, 60), bound));
  else if (name == "phi0")
    out = make(name, shifted_series(mock_minus_q("phi0"), Q(-1, 120), bound));
  else if (name == "phi1")
    out = make(name, shifted_series(mock_minus_q("phi1"), Q(-49, 120), bound));
  else
    throw Error(ErrorKind::unknown_name, "completed function '" + name + "'");
  out.completion_unspecified = true;
  return out;
}

std::vector<std::string> completed_names() {
  return {"f0", "f1", "F0", "F1", "M1", "M2", "N1", "N2", "psi0", "psi1", "phi0", "phi1"};
}

namespace {

// completed(name) evaluated at s z + c, valid below `bound`.
CompletedFunction completed_at(const std::string& name, const Q& s, const Q& c, const Q& bound) {
  return compose_affine(completed(name, bound / s), s, c);
}

}  // namespace

std::array<CompletedFunction, 6> build_F(const Q& bound) {
  const Q half(1, 2);
  std::array<CompletedFunction, 6> F{
      completed("f0", bound),
      completed("f1", bound),
      completed_at("F0", half, Q(0), bound),
      completed_at("F1", half, Q(0), bound),
      zeta(240, 1) * completed_at("F0", half, half, bound),
      zeta(240, -71) * completed_at("F1", half, half, bound),
  };
  const char* names[] = {"F1", "F2", "F3", "F4", "F5", "F6"};
  for (int j = 0; j < 6; ++j) F[j].name = names[j];
  return F;
}

std::array<CompletedFunction, 6> build_G(const Q& bound) {
  const Q work = bound + Q(2);
  const Q five_half(5, 2);
  const CycloNum half(Rational(1, 2));
  auto g = rogers_ramanujan('g', Q(1), work);
  auto h = rogers_ramanujan('h', Q(1), work);
  const EtaFactor q1[] = {{Q(5), 2}, {Q(10), -1}};
  const EtaFactor q2[] = {{Q(5), 2}, {five_half, -1}};
  const QSeries e1 = eta_quotient(q1, work);
  const QSeries e2 = eta_quotient(q2, work);
  // η²(5z)/η((5z+1)/2)
  const EtaFactor sq[] = {{Q(5), 2}};
  const QSeries e3 = eta_quotient(sq, work) * invert(shift_z(eta(five_half, work + Q(2)), Q(1, 5)));

  auto hol = [&](const char* n, const QSeries& s) { return holomorphic(n, fit(s, bound)); };
  std::array<CompletedFunction, 6> G{
      -completed_at("M1", Q(10), Q(0), bound) + hol("eta-quotient*g", e1 * g),
      -completed_at("M2", Q(10), Q(0), bound) + hol("eta-quotient*h", e1 * h),
      half * completed_at("M1", five_half, Q(0), bound) - hol("eta-quotient*h", e2 * h),
      half * completed_at("M2", five_half, Q(0), bound) + hol("eta-quotient*g", e2 * g),
      (half * zeta(240, 1)) * completed_at("M1", five_half, five_half, bound) -
          hol("eta-quotient*h", zeta(48, 25) * (e3 * h)),
      (half * zeta(240, -71)) * completed_at("M2", five_half, five_half, bound) +
          hol("eta-quotient*g", zeta(48, 1) * (e3 * g)),
  };
  const char* names[] = {"G1", "G2", "G3", "G4", "G5", "G6"};
  for (int j = 0; j < 6; ++j) G[j].name = names[j];
  return G;
}

// ---- identities ----------------------------------------------------------

namespace {

struct Builder {
  Q work;

  QSeries E(const Q& s) const { return eta(s, work); }
  QSeries Einv(const Q& s) const { return invert(eta(s, work + s)); }
  QSeries g(const Q& s) const { return rogers_ramanujan('g', s, work); }
  QSeries h(const Q& s) const { return rogers_ramanujan('h', s, work); }
  QSeries Mt(int a, const Q& s) const { return completed_at(a == 1 ? "M1" : "M2", s, Q(0), work).holo; }
  QSeries C(const std::string& name) const { return completed(name, work).holo; }
  QSeries Nt(int a, const Q& s) const { return completed_at(a == 1 ? "N1" : "N2", s, Q(0), work).holo; }
  QSeries geta(int g, const Q& s) const { return generalized_eta(10, g, s, work); }
};

using SideFn = std::function<IdentitySides(const Builder&, const CycloNum&)>;

const std::map<std::string, SideFn>& identity_table() {
  static const std::map<std::string, SideFn> table = [] {
    std::map<std::string, SideFn> t;
    const CycloNum half(Rational(1, 2)), three_half(Rational(3, 2));
    t["mtc1"] = [](const Builder& B, const CycloNum& f) {
      return IdentitySides{B.C("f0"), -B.Mt(1, Q(10)) + f * (B.E(Q(5)) * B.E(Q(5)) * B.Einv(Q(10)) * B.g(Q(1)))};
    };
    t["mtc2"] = [](const Builder& B, const CycloNum& f) {
      return IdentitySides{B.C("f1"), -B.Mt(2, Q(10)) + f * (B.E(Q(5)) * B.E(Q(5)) * B.Einv(Q(10)) * B.h(Q(1)))};
    };
    t["mtc3"] = [half](const Builder& B, const CycloNum& f) {
      return IdentitySides{B.C("F0"), half * B.Mt(1, Q(5)) - f * (B.E(Q(10)) * B.E(Q(10)) * B.Einv(Q(5)) * B.h(Q(2)))};
    };
    t["mtc4"] = [half](const Builder& B, const CycloNum& f) {
      return IdentitySides{B.C("F1"), half * B.Mt(2, Q(5)) + f * (B.E(Q(10)) * B.E(Q(10)) * B.Einv(Q(5)) * B.g(Q(2)))};
    };
    t["mtc2-1"] = [](const Builder& B, const CycloNum& f) {
      return IdentitySides{CycloNum(2) * B.C("psi0"),
                           B.Mt(1, Q(10)) + (CycloNum(2) * f) * (B.geta(1, Q(1)) * B.E(Q(10)) * B.h(Q(1)))};
    };
    t["mtc2-2"] = [](const Builder& B, const CycloNum& f) {
      return IdentitySides{CycloNum(2) * B.C("psi1"),
                           B.Mt(2, Q(10)) + (CycloNum(2) * f) * (B.geta(3, Q(1)) * B.E(Q(10)) * B.g(Q(1)))};
    };
    t["mtc2-3"] = [half](const Builder& B, const CycloNum& f) {
      const QSeries g2 = B.g(Q(2));
      return IdentitySides{B.C("phi0"), -(half * B.Mt(1, Q(5))) +
                                            f * (B.E(Q(5)) * B.E(Q(2)) * B.Einv(Q(10)) * g2 * g2 * B.h(Q(1)))};
    };
    t["mtc2-4"] = [half](const Builder& B, const CycloNum& f) {
      const QSeries h2 = B.h(Q(2));
      return IdentitySides{-B.C("phi1"), -(half * B.Mt(2, Q(5))) +
                                             f * (B.E(Q(5)) * B.E(Q(2)) * B.Einv(Q(10)) * h2 * h2 * B.g(Q(1)))};
    };
    t["chi0"] = [three_half](const Builder& B, const CycloNum& f) {
      const QSeries g1 = B.g(Q(1));
      return IdentitySides{CycloNum(2) * B.C("F0") - B.C("phi0"),
                           three_half * B.Mt(1, Q(5)) - f * (B.E(Q(5)) * g1 * g1 * invert(B.h(Q(1))))};
    };
    t["chi1"] = [three_half](const Builder& B, const CycloNum& f) {
      const QSeries h1 = B.h(Q(1));
      return IdentitySides{CycloNum(2) * B.C("F1") + B.C("phi1"),
                           three_half * B.Mt(2, Q(5)) + f * (B.E(Q(5)) * h1 * h1 * invert(B.g(Q(1))))};
    };
    t["lemma3"] = [](const Builder& B, const CycloNum& f) {
      const CycloNum al = alpha(), be = beta();
      const QSeries eta1 = B.E(Q(1));
      QSeries L = B.Nt(1, Q(1)) + al * B.Mt(1, Q(25)) + be * B.Mt(2, Q(25));
      QSeries R = CycloNum(2) * (B.E(Q(2)) * B.E(Q(2)) * B.Einv(Q(1)) *
                                 (al.inverse() * B.g(Q(10)) + be.inverse() * B.h(Q(10)))) -
                  (CycloNum(2) * f) * (B.E(Q(50)) * B.E(Q(50)) * B.Einv(Q(25)) * (be * B.g(Q(10)) - al * B.h(Q(10))));
      return IdentitySides{eta1 * L, eta1 * R};
    };
    t["lemma4"] = [](const Builder& B, const CycloNum& f) {
      const CycloNum al = alpha(), be = beta();
      const QSeries eta1 = B.E(Q(1));
      QSeries L = B.Nt(2, Q(1)) + be * B.Mt(1, Q(25)) - al * B.Mt(2, Q(25));
      QSeries R = CycloNum(2) * (B.E(Q(2)) * B.E(Q(2)) * B.Einv(Q(1)) *
                                 (be.inverse() * B.g(Q(10)) - al.inverse() * B.h(Q(10)))) +
                  (CycloNum(2) * f) * (B.E(Q(50)) * B.E(Q(50)) * B.Einv(Q(25)) * (al * B.g(Q(10)) + be * B.h(Q(10))));
      return IdentitySides{eta1 * L, eta1 * R};
    };
    t["n1-id-2"] = [](const Builder& B, const CycloNum& f) {
      const CycloNum al = alpha(), be = beta();
      QSeries L = B.Nt(1, Q(2)) + al * B.Mt(1, Q(50)) + be * B.Mt(2, Q(50));
      const QSeries X = al.inverse() * B.g(Q(5)) + be.inverse() * B.h(Q(5));
      QSeries R = CycloNum(2) * (B.E(Q(2)) * B.E(Q(5)) * B.Einv(Q(1)) * X * X * (al * B.g(Q(10)) - be * B.h(Q(10)))) -
                  (CycloNum(2) * f) * (B.E(Q(50)) * (al * (B.geta(1, Q(5)) * B.h(Q(5))) + be * (B.geta(3, Q(5)) * B.g(Q(5)))));
      return IdentitySides{L, R};
    };
    t["robins1"] = [](const Builder& B, const CycloNum& f) {
      const QSeries g1 = B.g(Q(1)), h1 = B.h(Q(1)), g2 = B.g(Q(2)), h2 = B.h(Q(2));
      const QSeries e = B.E(Q(10)) * B.Einv(Q(5));
      return IdentitySides{g1 * g1 * h2 - h1 * h1 * g2, (CycloNum(2) * f) * (h1 * h2 * h2 * e * e)};
    };
    t["robins2"] = [](const Builder& B, const CycloNum& f) {
      const QSeries g1 = B.g(Q(1)), h1 = B.h(Q(1)), g2 = B.g(Q(2)), h2 = B.h(Q(2));
      const QSeries e = B.E(Q(10)) * B.Einv(Q(5));
      return IdentitySides{g1 * g1 * h2 + h1 * h1 * g2, (CycloNum(2) * f) * (g1 * g2 * g2 * e * e)};
    };
    t["watson0"] = [](const Builder& B, const CycloNum& f) {
      const QSeries phi = shift_z(mock_theta("phi0", B.work), Q(1, 2));
      return IdentitySides{mock_theta("chi0", B.work), CycloNum(2) * mock_theta("F0", B.work) - f * phi};
    };
    t["watson1"] = [](const Builder& B, const CycloNum& f) {
      const QSeries phi = shift_z(mock_theta("phi1", B.work + Q(1)), Q(1, 2));
      return IdentitySides{mock_theta("chi1", B.work),
                           CycloNum(2) * mock_theta("F1", B.work) + f * (QSeries::monomial(Q(-1)) * phi)};
    };
    return t;
  }();
  return table;
}

}  // namespace

IdentitySides identity_sides(const std::string& id, const Q& bound, bool inject_fault) {
  const auto& table = identity_table();
  auto it = table.find(id);
  if (it == table.end()) throw Error(ErrorKind::unknown_name, "identity '" + id + "'");
  const Builder B{bound + Q(3)};
  IdentitySides s = it->second(B, inject_fault ? CycloNum(-1) : CycloNum(1));
  return {fit(s.lhs, bound), fit(s.rhs, bound)};
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& [k, v] : identity_table()) ids.push_back(k);
  return ids;
}

QExponent identity_min_bound() {
  // weight 1 on Γ0(50) ∩ Γ1(5): the Sturm-type count of coefficients, minus one
  return Q(sturm_bound(Q(1), index(GroupContext{50, 5})) - 1);
}

IdentityReport verify_identity(const std::string& id, const Q& bound, const VerifyOptions& opts) {
  if (!identity_table().contains(id)) throw Error(ErrorKind::unknown_name, "identity '" + id + "'");
  if (!opts.force && bound < identity_min_bound())
    throw Error(ErrorKind::insufficient_precision,
                "bound " + to_string(bound) + " is below the required " + to_string(identity_min_bound()) +
                    " (use force to override)");
  const IdentitySides s = identity_sides(id, bound + Q(1), opts.inject_fault);
  const CompareReport c = compare(s.lhs, s.rhs, bound);
  IdentityReport rep;
  rep.id = id;
  rep.bound = bound;
  rep.equal = c.equal;
  rep.first_mismatch = c.first_mismatch;
  rep.lhs_coef = c.lhs;
  rep.rhs_coef = c.rhs;
  return rep;
}

}  // namespace mtc

namespace mtc {

QSeries lemma3_golden_expansion() {
  const CycloNum a = alpha(), b = beta();
  const CycloNum c = CycloNum(2) * sqrt_rational(Rational(5)).inverse();
  const CycloNum a2b = a * a * b, ab2 = a * b * b;
  const std::pair<long, CycloNum> coefs[] = {
      {0, b},          {2, -a2b}, {3, -ab2}, {5, b * b * b}, {7, -a2b},
      {10, CycloNum(2) * a2b}, {12, -a2b}, {13, -ab2}, {15, CycloNum(2) * ab2},
  };
  QSeries::Terms t;
  for (const auto& [e, v] : coefs) t.emplace(QExponent(e), c * v);
  return QSeries(std::move(t), QExponent(16));
}

GaloisCoherenceReport verify_galois_coherence(const QExponent& lemma_bound, const QExponent& n_bound) {
  GaloisCoherenceReport rep;
  rep.lemma_bound = lemma_bound;
  rep.n_bound = n_bound;
  const FieldAutomorphism tau = FieldAutomorphism::tau();
  const QExponent work = lemma_bound + QExponent(1);
  const IdentitySides l3 = identity_sides("lemma3", work);
  const IdentitySides l4 = identity_sides("lemma4", work);
  rep.lhs_matches = compare(apply_automorphism(tau, l3.lhs), l4.lhs, lemma_bound).equal;
  rep.rhs_matches = compare(apply_automorphism(tau, l3.rhs), l4.rhs, lemma_bound).equal;
  const QExponent nwork = n_bound + QExponent(1);
  rep.n_series_matches =
      compare(apply_automorphism(FieldAutomorphism::sigma(), N_series(1, nwork)), N_series(2, nwork), n_bound).equal;
  return rep;
}

CancellationReport verify_completion_cancellation(const QExponent& bound) {
  CancellationReport rep;
  const auto F = build_F(bound);
  const auto G = build_G(bound);
  for (int j = 0; j < 6; ++j) {
    rep.f_terms[j] = canonicalize(F[j].completion);
    rep.g_terms[j] = canonicalize(G[j].completion);
    const bool same = rep.f_terms[j] == rep.g_terms[j] && F[j].theta_integrals == G[j].theta_integrals &&
                      !F[j].completion_unspecified && !G[j].completion_unspecified;
    if (!same) {
      rep.equal = false;
      rep.mismatched.push_back(j);
    }
  }
  return rep;
}

}  // namespace mtc
