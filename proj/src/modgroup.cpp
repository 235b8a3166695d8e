#include "mtc/modgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mtc/error.hpp"

namespace mtc {

namespace {

using Q = QExponent;

std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Inverse of a unit modulo n.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw Error(ErrorKind::domain, std::to_string(a) + " is not a unit mod " + std::to_string(n));
  return mod(t, n);
}

// (g, x, y) with g = gcd(a, b) = ax + by.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  auto [g, x, y] = ext_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Upper-triangular image of Γ mod N: pairs (a, b) for (a b; 0 a^-1).
std::vector<std::pair<std::int64_t, std::int64_t>> borel_image(const GroupContext& ctx) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 0; a < ctx.N; ++a) {
    if (gcd64(a, ctx.N) != 1 || mod(a, ctx.M) != mod(1, ctx.M)) continue;
    for (std::int64_t b = 0; b < ctx.N; ++b) out.emplace_back(a, b);
  }
  return out;
}

using Vec = std::pair<std::int64_t, std::int64_t>;

// Smallest element of the ±Γ-orbit of (x, y) mod N.
Vec orbit_key(const GroupContext& ctx, const std::vector<std::pair<std::int64_t, std::int64_t>>& image, Vec v) {
  const std::int64_t N = ctx.N;
  Vec best{N, N};
  for (const auto& [a, b] : image) {
    const std::int64_t d = inverse_mod(a, N);
    const Vec w{mod(a * v.first + b * v.second, N), mod(d * v.second, N)};
    const Vec wn{mod(-w.first, N), mod(-w.second, N)};
    best = std::min({best, w, wn});
  }
  return best;
}

Vec reduce(const GroupContext& ctx, const CuspPoint& c) { return {mod(c.r, ctx.N), mod(c.s, ctx.N)}; }

}  // namespace

GroupElement GroupElement::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (static_cast<__int128>(a) * d - static_cast<__int128>(b) * c != 1)
    throw Error(ErrorKind::domain, "determinant of (" + std::to_string(a) + " " + std::to_string(b) + "; " +
                                       std::to_string(c) + " " + std::to_string(d) + ") is not 1");
  return {a, b, c, d};
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << "(" << g.a << " " << g.b << "; " << g.c << " " << g.d << ")";
  return os.str();
}

void GroupContext::validate() const {
  if (N < 1 || M < 1 || N % M != 0)
    throw Error(ErrorKind::domain, "group context needs M | N, got N=" + std::to_string(N) + " M=" + std::to_string(M));
}

bool GroupContext::contains(const GroupElement& g) const {
  return mod(g.c, N) == 0 && mod(g.a - 1, M) == 0 && mod(g.d - 1, M) == 0;
}

CuspPoint CuspPoint::make(std::int64_t r, std::int64_t s) {
  if (r == 0 && s == 0) throw Error(ErrorKind::domain, "0/0 is not a cusp");
  if (s == 0) return infinity();
  const std::int64_t g = gcd64(r, s);
  r /= g;
  s /= g;
  if (s < 0) {
    r = -r;
    s = -s;
  }
  return {r, s};
}

std::string to_string(const CuspPoint& c) {
  if (c.is_infinity()) return "oo";
  if (c.s == 1) return std::to_string(c.r);
  return std::to_string(c.r) + "/" + std::to_string(c.s);
}

CuspPoint parse_cusp(const std::string& text) {
  if (text == "oo" || text == "inf" || text == "infinity") return CuspPoint::infinity();
  const Q q = parse_exponent(text);
  return CuspPoint::make(q.numerator(), q.denominator());
}

CuspPoint act(const GroupElement& g, const CuspPoint& c) {
  return CuspPoint::make(g.a * c.r + g.b * c.s, g.c * c.r + g.d * c.s);
}

std::int64_t sl2_index(const GroupContext& ctx) {
  ctx.validate();
  // |SL2(Z/N)| by counting bottom rows and top-row lifts; |image| = #borel.
  const std::int64_t N = ctx.N;
  std::int64_t sl2 = 0;
  for (std::int64_t c = 0; c < N; ++c)
    for (std::int64_t d = 0; d < N; ++d) {
      if (gcd64(gcd64(c, d), N) != 1) continue;
      sl2 += N;  // each primitive bottom row has N completions (a, b)
    }
  const auto image = borel_image(ctx);
  return sl2 / static_cast<std::int64_t>(image.size());
}

std::int64_t index(const GroupContext& ctx) {
  const std::int64_t i = sl2_index(ctx);
  return ctx.contains_minus_identity() ? i : i / 2;
}

std::int64_t sturm_bound(const Q& weight, std::int64_t idx) {
  if (weight <= 0) throw Error(ErrorKind::domain, "Sturm bound needs positive weight");
  const Q v = weight * Q(idx) / Q(12);
  return floor_div(v.numerator(), v.denominator()) + 1;
}

std::int64_t sturm_bound(const Q& weight, const GroupContext& ctx) { return sturm_bound(weight, index(ctx)); }

bool cusp_equivalent(const GroupContext& ctx, const CuspPoint& x, const CuspPoint& y) {
  ctx.validate();
  const auto image = borel_image(ctx);
  return orbit_key(ctx, image, reduce(ctx, x)) == orbit_key(ctx, image, reduce(ctx, y));
}

std::vector<CuspPoint> cusp_representatives(const GroupContext& ctx) {
  ctx.validate();
  const auto image = borel_image(ctx);
  std::set<Vec> all;
  for (std::int64_t x = 0; x < ctx.N; ++x)
    for (std::int64_t y = 0; y < ctx.N; ++y)
      if (gcd64(gcd64(x, y), ctx.N) == 1) all.insert(orbit_key(ctx, image, {x, y}));

  std::set<Vec> seen;
  std::vector<CuspPoint> reps;
  auto consider = [&](const CuspPoint& c) {
    const Vec k = orbit_key(ctx, image, reduce(ctx, c));
    if (seen.insert(k).second) reps.push_back(c);
  };
  consider(CuspPoint::infinity());
  // T ∈ Γ, so every class meets [0, 1); bottom rows up to N reach every residue
  for (std::int64_t s = 1; seen.size() < all.size(); ++s)
    for (std::int64_t r = 0; r < s; ++r)
      if (gcd64(r, s) == 1) consider({r, s});
  return reps;
}

std::size_t cusp_class(const GroupContext& ctx, const std::vector<CuspPoint>& reps, const CuspPoint& x) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (cusp_equivalent(ctx, reps[i], x)) return i;
  throw Error(ErrorKind::domain, "cusp " + to_string(x) + " matches no representative");
}

CuspMatchReport match_cusps(const GroupContext& ctx, const std::vector<CuspPoint>& candidates) {
  const auto reps = cusp_representatives(ctx);
  CuspMatchReport rep;
  rep.candidates = candidates;
  std::vector<int> hits(reps.size(), 0);
  for (const auto& c : candidates) {
    const std::size_t k = cusp_class(ctx, reps, c);
    rep.classes.push_back(k);
    if (++hits[k] > 1) rep.pairwise_inequivalent = false;
  }
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (hits[k] == 0) {
      rep.exhaustive = false;
      rep.missing.push_back(k);
    }
  return rep;
}

std::vector<CuspPoint> reference_cusps_50_5() {
  const std::pair<int, int> list[] = {{1, 0},   {0, 1},   {1, 8},   {2, 15},  {1, 7},   {3, 20},  {1, 6},  {1, 5},
                                      {13, 50}, {4, 15},  {11, 40}, {7, 25},  {3, 10},  {7, 20},  {9, 25}, {11, 30},
                                      {2, 5},   {8, 15},  {11, 20}, {3, 5},   {7, 10},  {29, 40}, {11, 15}, {4, 5}};
  std::vector<CuspPoint> out;
  for (const auto& [r, s] : list) out.push_back(CuspPoint::make(r, s));
  return out;
}

GroupElement STWord::evaluate() const {
  GroupElement g;
  for (const auto& l : letters) g = g * (l.kind == WordLetter::Kind::S ? GroupElement::S() : GroupElement::T(l.exponent));
  return g;
}

std::string to_string(const STWord& w) {
  std::ostringstream os;
  if (w.negated) os << "-";
  if (w.letters.empty()) os << "I";
  for (const auto& l : w.letters) {
    if (l.kind == WordLetter::Kind::S)
      os << "S";
    else
      os << "T^" << l.exponent;
  }
  return os.str();
}

STWord decompose_ST(const GroupElement& g) {
  GroupElement cur = GroupElement::make(g.a, g.b, g.c, g.d);
  STWord w;
  // g = (letters so far) · cur
  while (cur.c != 0) {
    const std::int64_t k = floor_div(cur.a, cur.c);
    if (k != 0) {
      w.letters.push_back({WordLetter::Kind::T, k});
      cur = GroupElement::T(-k) * cur;
    }
    w.letters.push_back({WordLetter::Kind::S, 1});
    cur = GroupElement::S().inverse() * cur;
  }
  // cur = ±T^b
  if (cur.a == -1) {
    w.negated = true;
    cur = -cur;
  }
  if (cur.b != 0) w.letters.push_back({WordLetter::Kind::T, cur.b});
  return w;
}

int eta_multiplier_sq_exponent(const GroupElement& g) {
  if (mod(g.d, 2) == 0) throw Error(ErrorKind::domain, "eta multiplier formula needs odd d, got " + to_string(g));
  const std::int64_t a = mod(g.a, 12), b = mod(g.b, 12), c = mod(g.c, 12), d = mod(g.d, 12);
  const std::int64_t e12 = mod(-(a * c % 12) * mod(d * d - 1, 12) + d * mod(b - c, 12), 12);
  const std::int64_t half = floor_div(g.d - 1, 2);
  return static_cast<int>(mod(2 * e12 + (mod(half, 2) == 1 ? 12 : 0), 24));
}

CycloNum eta_multiplier_sq(const GroupElement& g) { return zeta(24, eta_multiplier_sq_exponent(g)); }

GroupElement gamma_n(const GroupElement& g, std::int64_t n) {
  if (n == 0 || g.c % n != 0)
    throw Error(ErrorKind::domain, "gamma_n needs n | c: n=" + std::to_string(n) + ", c=" + std::to_string(g.c));
  return {g.a, n * g.b, g.c / n, g.d};
}

GroupElement random_element(const GroupContext& ctx, std::mt19937_64& rng, std::int64_t max_entry) {
  ctx.validate();
  std::uniform_int_distribution<std::int64_t> kc(-max_entry, max_entry), kd(-max_entry, max_entry);
  for (;;) {
    const std::int64_t c = ctx.N * kc(rng);
    const std::int64_t d = kd(rng);
    if (c == 0 || mod(d - 1, ctx.M) != 0 || gcd64(c, d) != 1) continue;
    // a d - b c = 1
    auto [gg, x, y] = ext_gcd(d, -c);
    if (gg < 0) {
      x = -x;
      y = -y;
    }
    GroupElement e = GroupElement::make(x, y, c, d);
    if (ctx.contains(e)) return e;
  }
}

// ---- orders --------------------------------------------------------------

QExponent ord_scale(std::int64_t N, const CuspPoint& cusp, const CuspOrd& base_ord) {
  if (N < 1) throw Error(ErrorKind::domain, "ord_scale needs N >= 1");
  if (cusp.is_infinity()) return Q(N) * base_ord(CuspPoint::infinity());
  const std::int64_t g = gcd64(N, cusp.s);
  return Q(g * g, N) * base_ord(CuspPoint::make(N * cusp.r, cusp.s));
}

OrdSymbol parse_ord_symbol(const std::string& text) {
  // M(1/5) N(2/5) M(a,b) N(a,b)
  if (text.size() < 4 || (text[0] != 'M' && text[0] != 'N') || text[1] != '(' || text.back() != ')')
    throw Error(ErrorKind::unknown_name, "order symbol '" + text + "'");
  const bool is_m = text[0] == 'M';
  const std::string body = text.substr(2, text.size() - 3);
  try {
    if (auto comma = body.find(','); comma != std::string::npos) {
      OrdSymbol s{is_m ? OrdSymbol::Kind::M_ab : OrdSymbol::Kind::N_ab, std::stoi(body.substr(0, comma)),
                  std::stoi(body.substr(comma + 1))};
      if (s.a < 0 || s.a > 4 || s.b < 1 || s.b > 4) throw Error(ErrorKind::unknown_name, "order symbol '" + text + "'");
      return s;
    }
    const Q a = parse_exponent(body) * Q(5);
    if (a.denominator() != 1 || (a.numerator() != 1 && a.numerator() != 2))
      throw Error(ErrorKind::unknown_name, "order symbol '" + text + "'");
    return {is_m ? OrdSymbol::Kind::M_frac : OrdSymbol::Kind::N_frac, static_cast<int>(a.numerator()), 0};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::unknown_name, "order symbol '" + text + "'");
  }
}

std::string to_string(const OrdSymbol& s) {
  switch (s.kind) {
    case OrdSymbol::Kind::M_frac: return "M(" + std::to_string(s.a) + "/5)";
    case OrdSymbol::Kind::N_frac: return "N(" + std::to_string(s.a) + "/5)";
    case OrdSymbol::Kind::M_ab: return "M(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
    case OrdSymbol::Kind::N_ab: return "N(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
  }
  return "?";
}

QExponent ord_table_infty(const OrdSymbol& s) {
  switch (s.kind) {
    case OrdSymbol::Kind::M_frac:
    case OrdSymbol::Kind::M_ab: return Q(3 * s.a, 10) * (Q(1) - Q(s.a, 5)) - Q(1, 24);
    case OrdSymbol::Kind::N_frac: return Q(-1, 24);
    case OrdSymbol::Kind::N_ab: {
      const int k = s.b <= 2 ? 1 : 2;
      return Q(s.b, 5) * Q(k) - Q(3 * s.b * s.b, 50) - Q(1, 24);
    }
  }
  throw Error(ErrorKind::unknown_name, "order symbol");
}

QExponent ord_table_infty(const std::string& symbol) { return ord_table_infty(parse_ord_symbol(symbol)); }

std::vector<OrdSymbol> ord_table_symbols() {
  std::vector<OrdSymbol> out;
  for (int a = 1; a <= 2; ++a) out.push_back({OrdSymbol::Kind::M_frac, a, 0});
  for (int a = 1; a <= 2; ++a) out.push_back({OrdSymbol::Kind::N_frac, a, 0});
  for (int a = 0; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) out.push_back({OrdSymbol::Kind::M_ab, a, b});
  for (int a = 0; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) out.push_back({OrdSymbol::Kind::N_ab, a, b});
  return out;
}

QExponent ord_table_min() {
  Q m = ord_table_infty(ord_table_symbols().front());
  for (const auto& s : ord_table_symbols()) m = std::min(m, ord_table_infty(s));
  return m;
}

QExponent ord_gh_at_cusp(char which, const CuspPoint& cusp) {
  std::int64_t r = cusp.r, s = cusp.s;
  const bool five_divides = s % 5 == 0;  // ∞ = 1/0 counts as 5 | 0
  const std::int64_t rm = mod(r, 5);
  bool special = false;
  if (which == 'g')
    special = five_divides && (rm == 2 || rm == 3);
  else if (which == 'h')
    special = five_divides && (rm == 1 || rm == 4);
  else
    throw Error(ErrorKind::unknown_name, std::string("Rogers-Ramanujan function '") + which + "'");
  return special ? Q(11, 60) : Q(-1, 60);
}

QExponent ord_eta(const CuspPoint&) { return Q(1, 24); }

QExponent ord_eta_quotient(const std::vector<std::pair<std::int64_t, int>>& factors, const CuspPoint& cusp) {
  Q total(0);
  for (const auto& [delta, power] : factors) total += Q(power) * ord_scale(delta, cusp, ord_eta);
  return total;
}

QExponent R_lower_bound(std::int64_t s) {
  if (s < 1) throw Error(ErrorKind::domain, "R_lower_bound needs s >= 1");
  auto g2 = [s](std::int64_t n) {
    const std::int64_t g = gcd64(n, s);
    return g * g;
  };
  return Q(-g2(10), 600) + std::min(Q(1, 24) + Q(g2(50) - g2(25), 600), Q(g2(2), 24));
}

QExponent ord_eta_R_at_cusp(const CuspPoint& cusp) {
  auto gh10 = [&](char w) { return ord_scale(10, cusp, [w](const CuspPoint& c) { return ord_gh_at_cusp(w, c); }); };
  const Q gh = std::min(gh10('g'), gh10('h'));
  // η(z) · η²(2z)/η(z) = η²(2z) and η(z) · η²(50z)/η(25z)
  const Q first = ord_eta_quotient({{2, 2}}, cusp) + gh;
  const Q second = ord_eta_quotient({{1, 1}, {50, 2}, {25, -1}}, cusp) + gh;
  return std::min(first, second);
}

QExponent ord_m25_at_13_50(int a) {
  if (a != 1 && a != 2) throw Error(ErrorKind::domain, "ord_m25_at_13_50 needs a in {1,2}");
  // (13 6; 2 1) sends ∞ to 13/2; along it M~(a/5) becomes a root of unity
  // times M~(3a mod 5, a), and η contributes 1/24.
  const CuspOrd base = [a](const CuspPoint& c) {
    if (!(c == CuspPoint::make(13, 2))) throw Error(ErrorKind::unsupported, "transport rule known only at 13/2");
    const OrdSymbol target{OrdSymbol::Kind::M_ab, (3 * a) % 5, a};
    return Q(1, 24) + ord_table_infty(target);
  };
  return ord_scale(25, CuspPoint::make(13, 50), base);
}

}  // namespace mtc
