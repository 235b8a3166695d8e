#include "mtc/weilrep.hpp"

#include <numeric>

#include "mtc/error.hpp"
#include "mtc/specialforms.hpp"

namespace mtc {

namespace {

using kernels::RootMatrix;
using kernels::RootSum;
constexpr int kN = DiscriminantForm::kOrder;

QExponent frac(const QExponent& x) {
  const std::int64_t n = x.numerator(), d = x.denominator();
  std::int64_t r = n % d;
  if (r < 0) r += d;
  return QExponent(r, d);
}

}  // namespace

int DiscriminantForm::canonical(long h) {
  const long r = h % kN;
  return static_cast<int>(r < 0 ? r + kN : r);
}

QExponent DiscriminantForm::quadratic(long h) { return frac(QExponent(-h * h, 240)); }

QExponent DiscriminantForm::bilinear(long h, long h2) { return frac(QExponent(-h * h2, 120)); }

CycloNum WeilMatrix::entry(int h, int h2) const { return scale * entries.at(h, h2).to_cyclo(); }

WeilMatrix rho_T() {
  WeilMatrix m;
  for (int h = 0; h < kN; ++h) m.entries.at(h, h) = RootSum::root(-static_cast<long>(h) * h);
  return m;
}

CycloNum rho_S_scalar() {
  // -120i = 120 ζ4^{-1}; principal root ζ8^{-1}√120, inverse ζ8/√120
  return principal_sqrt(Rational(120), 4, -1).inverse();
}

WeilMatrix rho_S() {
  WeilMatrix m;
  m.scale = rho_S_scalar();
  // ζ120^{hh'} = ζ240^{2hh'}
  for (int h = 0; h < kN; ++h)
    for (int h2 = 0; h2 < kN; ++h2) m.entries.at(h2, h) = RootSum::root(2L * h * h2);
  return m;
}

WeilMatrix multiply(const WeilMatrix& x, const WeilMatrix& y, bool parallel) {
  WeilMatrix out;
  out.scale = x.scale * y.scale;
  out.entries = parallel ? kernels::matmul_parallel(x.entries, y.entries) : kernels::matmul_serial(x.entries, y.entries);
  return out;
}

bool exactly_equal(const WeilMatrix& x, const WeilMatrix& y) {
  // x.scale·X = y.scale·Y  ⇔  r·X = Y with r = x.scale / y.scale
  const CycloNum r = x.scale / y.scale;
  const bool rational_ratio = r.is_rational();
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) {
      const RootSum& a = x.entries.at(i, j);
      const RootSum& b = y.entries.at(i, j);
      if (rational_ratio && r == CycloNum(1)) {
        if (a == b) continue;
      }
      if (r * a.to_cyclo() != b.to_cyclo()) return false;
    }
  return true;
}

AssemblyMatrix assembly() {
  AssemblyMatrix A;
  auto put = [&](int h, int col, int v) {
    A.rows[h][col] += v;
    A.rows[kN - h][col] -= v;
  };
  for (int h = 1; h < 60; ++h) {
    const int ah = h < 30 ? 1 : -1;
    const int r60 = h % 60;
    const int bh = (r60 == 1 || r60 == 59 || r60 == 13 || r60 == 47) ? 1 : -1;
    const int g = std::gcd(h, 60);
    const int r10 = h % 10;
    if ((r10 == 1 || r10 == 9) && g == 1) {
      put(h, 2, ah);
      put(h, 4, bh);
    } else if ((r10 == 2 || r10 == 8) && g == 2) {
      put(h, 0, -1);
    } else if ((r10 == 3 || r10 == 7) && g == 1) {
      put(h, 3, ah);
      put(h, 5, bh);
    } else if ((r10 == 4 || r10 == 6) && g == 2) {
      put(h, 1, -1);
    }
  }
  return A;
}

int rank(const AssemblyMatrix& a) {
  std::vector<std::array<Rational, 6>> m;
  for (const auto& row : a.rows) {
    std::array<Rational, 6> r;
    for (int j = 0; j < 6; ++j) r[j] = row[j];
    m.push_back(r);
  }
  int rk = 0;
  for (int col = 0; col < 6 && rk < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int i = rk; i < static_cast<int>(m.size()); ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == rk || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[rk][col];
      for (int j = 0; j < 6; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

Matrix6 M_T() {
  Matrix6 m;
  m[0][0] = zeta(60, -1);
  m[1][1] = zeta(60, 11);
  m[2][4] = zeta(240, -1);
  m[3][5] = zeta(240, 71);
  m[4][2] = zeta(240, -1);
  m[5][3] = zeta(240, 71);
  return m;
}

Matrix6 M_S() {
  const CycloNum a = alpha(), b = beta();
  const CycloNum half(Rational(1, 2));
  const CycloNum r2 = sqrt_rational(Rational(2)).inverse();
  Matrix6 m;
  m[0] = {CycloNum(), CycloNum(), a, b, CycloNum(), CycloNum()};
  m[1] = {CycloNum(), CycloNum(), b, -a, CycloNum(), CycloNum()};
  m[2] = {half * a, half * b, CycloNum(), CycloNum(), CycloNum(), CycloNum()};
  m[3] = {half * b, -(half * a), CycloNum(), CycloNum(), CycloNum(), CycloNum()};
  m[4] = {CycloNum(), CycloNum(), CycloNum(), CycloNum(), r2 * b, r2 * a};
  m[5] = {CycloNum(), CycloNum(), CycloNum(), CycloNum(), r2 * a, -(r2 * b)};
  return m;
}

CycloNum S_factor() { return zeta(8, -1) * sqrt_rational(Rational(2, 5)); }

std::vector<std::vector<std::string>> symbolic_layout(const Matrix6& m) {
  const CycloNum a = alpha(), b = beta();
  const CycloNum half(Rational(1, 2));
  const CycloNum r2 = sqrt_rational(Rational(2)).inverse();
  const std::vector<std::pair<std::string, CycloNum>> names = {
      {"0", CycloNum()},
      {"a", a},
      {"b", b},
      {"-a", -a},
      {"-b", -b},
      {"a/2", half * a},
      {"b/2", half * b},
      {"-a/2", -(half * a)},
      {"-b/2", -(half * b)},
      {"a/r2", r2 * a},
      {"b/r2", r2 * b},
      {"-a/r2", -(r2 * a)},
      {"-b/r2", -(r2 * b)},
      {"z60^-1", zeta(60, -1)},
      {"z60^11", zeta(60, 11)},
      {"z240^-1", zeta(240, -1)},
      {"z240^71", zeta(240, 71)},
  };
  std::vector<std::vector<std::string>> out(6, std::vector<std::string>(6, "?"));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (const auto& [n, v] : names)
        if (m[i][j] == v) {
          out[i][j] = n;
          break;
        }
  return out;
}

IntertwiningReport verify_intertwining() { return verify_intertwining(assembly(), M_T(), M_S()); }

IntertwiningReport verify_intertwining(const AssemblyMatrix& A, const Matrix6& mt, const Matrix6& ms) {
  IntertwiningReport rep;
  rep.cells_checked = kN * 6;
  const CycloNum c = rho_S_scalar();
  const CycloNum f = S_factor();
  for (int h = 0; h < kN; ++h) {
    const CycloNum t = zeta(240, -static_cast<long>(h) * h);
    for (int j = 0; j < 6; ++j) {
      CycloNum rhs_t, rhs_s;
      for (int k = 0; k < 6; ++k) {
        if (A.rows[h][k] == 0) continue;
        rhs_t += CycloNum(A.rows[h][k]) * mt[k][j];
        rhs_s += CycloNum(A.rows[h][k]) * ms[k][j];
      }
      if (CycloNum(A.rows[h][j]) * t != rhs_t) {
        rep.t_holds = false;
        rep.t_violations.push_back({h, j});
      }
      // (ρ_S A)[h][j] = c Σ_{h'} ζ120^{hh'} A[h'][j]
      RootSum acc;
      for (int h2 = 0; h2 < kN; ++h2) {
        const int v = A.rows[h2][j];
        if (v == 0) continue;
        RootSum r = RootSum::root(2L * h * h2);
        for (auto& x : r.c) x *= v;
        acc += r;
      }
      if (c * acc.to_cyclo() != f * rhs_s) {
        rep.s_holds = false;
        rep.s_violations.push_back({h, j});
      }
    }
  }
  return rep;
}

bool verify_metaplectic(bool parallel) {
  const WeilMatrix s = rho_S(), t = rho_T();
  const WeilMatrix st = multiply(s, t, parallel);
  const WeilMatrix st3 = multiply(multiply(st, st, parallel), st, parallel);
  const WeilMatrix s2 = multiply(s, s, parallel);
  return exactly_equal(st3, s2);
}

std::optional<CycloNum> rho_S_square_scalar() {
  const WeilMatrix s2 = multiply(rho_S(), rho_S());
  std::optional<CycloNum> c;
  for (int h = 0; h < kN; ++h)
    for (int h2 = 0; h2 < kN; ++h2) {
      const RootSum& e = s2.entries.at(h2, h);
      if (h2 == DiscriminantForm::canonical(-h)) {
        const CycloNum v = s2.scale * e.to_cyclo();
        if (!c)
          c = v;
        else if (*c != v)
          return std::nullopt;
      } else if (!e.to_cyclo().is_zero()) {
        return std::nullopt;
      }
    }
  return c;
}

WeilVector assemble_H(const std::array<QSeries, 6>& H) {
  const AssemblyMatrix A = assembly();
  OrderBound b;
  for (const auto& h : H)
    if (h.bound() && (!b || *h.bound() < *b)) b = h.bound();
  WeilVector v;
  for (int h = 0; h < kN; ++h) {
    QSeries s(b);
    for (int j = 0; j < 6; ++j)
      if (A.rows[h][j] != 0) s += CycloNum(A.rows[h][j]) * H[j];
    v.components[h] = std::move(s);
  }
  return v;
}

VanishingReport check_vanishing(const WeilVector& v, const QExponent& bound) {
  VanishingReport rep;
  rep.bound = bound;
  const QSeries zero;
  for (int h = 0; h < kN; ++h) {
    const QSeries& s = v.components[h];
    if (s.bound() && *s.bound() <= bound)
      throw Error(ErrorKind::insufficient_precision,
                  "row " + std::to_string(h) + " known only below q^" + to_string(*s.bound()));
    if (!compare(s, zero, bound).equal) {
      rep.vanishes = false;
      rep.nonzero_rows.push_back(h);
    }
  }
  return rep;
}

VanishingReport check_vanishing(const QExponent& bound) {
  const QExponent work = bound + QExponent(1);
  const auto F = build_F(work);
  const auto G = build_G(work);
  std::array<QSeries, 6> H;
  for (int j = 0; j < 6; ++j) H[j] = F[j].holo - G[j].holo;
  return check_vanishing(assemble_H(H), bound);
}

}  // namespace mtc
