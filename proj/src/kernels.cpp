#include "mtc/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace mtc::kernels {

namespace {

using Term = std::pair<QExponent, CycloNum>;

// Operands below this many term pairs are multiplied serially.
constexpr std::size_t kParallelPairs = 4096;

bool below(const QExponent& e, const OrderBound& limit) { return !limit || e < *limit; }

}  // namespace

QSeries::Terms series_product_serial(const QSeries::Terms& f, const QSeries::Terms& g, const OrderBound& limit) {
  QSeries::Terms out;
  for (const auto& [ef, cf] : f) {
    for (const auto& [eg, cg] : g) {
      const QExponent e = ef + eg;
      if (!below(e, limit)) break;
      out[e] += cf * cg;
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

QSeries::Terms series_product_parallel(const QSeries::Terms& f, const QSeries::Terms& g, const OrderBound& limit) {
  const std::vector<Term> fv(f.begin(), f.end());
  const std::vector<Term> gv(g.begin(), g.end());

  // Group index pairs by output exponent; each group is then an independent sum.
  std::map<QExponent, std::vector<std::pair<int, int>>> groups;
  for (int i = 0; i < static_cast<int>(fv.size()); ++i) {
    for (int j = 0; j < static_cast<int>(gv.size()); ++j) {
      const QExponent e = fv[i].first + gv[j].first;
      if (!below(e, limit)) break;
      groups[e].emplace_back(i, j);
    }
  }
  std::vector<const std::vector<std::pair<int, int>>*> work;
  std::vector<QExponent> keys;
  work.reserve(groups.size());
  keys.reserve(groups.size());
  for (const auto& [e, pairs] : groups) {
    keys.push_back(e);
    work.push_back(&pairs);
  }
  std::vector<CycloNum> sums(work.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(work.size()); ++k) {
    CycloNum acc;
    for (const auto& [i, j] : *work[k]) acc += fv[i].second * gv[j].second;
    sums[k] = std::move(acc);
  }

  QSeries::Terms out;
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (!sums[k].is_zero()) out.emplace_hint(out.end(), keys[k], std::move(sums[k]));
  return out;
}

QSeries::Terms series_product(const QSeries::Terms& f, const QSeries::Terms& g, const OrderBound& limit) {
  if (f.size() * g.size() >= kParallelPairs && omp_get_max_threads() > 1)
    return series_product_parallel(f, g, limit);
  return series_product_serial(f, g, limit);
}

RootSum RootSum::root(long k) {
  RootSum r;
  long e = k % 240;
  if (e < 0) e += 240;
  if (e < 120)
    r.c[e] = 1;
  else
    r.c[e - 120] = -1;
  return r;
}

bool RootSum::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

RootSum& RootSum::operator+=(const RootSum& o) {
  for (int i = 0; i < 120; ++i) c[i] += o.c[i];
  return *this;
}

namespace {

// acc += a·b in Z[x]/(x^120 + 1), iterating only over the nonzero positions.
void mul_acc(RootSum& acc, const RootSum& a, const std::vector<int>& nz_a, const RootSum& b,
             const std::vector<int>& nz_b) {
  for (int i : nz_a) {
    const std::int64_t ai = a.c[i];
    for (int j : nz_b) {
      const int k = i + j;
      if (k < 120)
        acc.c[k] += ai * b.c[j];
      else
        acc.c[k - 120] -= ai * b.c[j];
    }
  }
}

std::vector<int> support(const RootSum& a) {
  std::vector<int> nz;
  for (int i = 0; i < 120; ++i)
    if (a.c[i] != 0) nz.push_back(i);
  return nz;
}

std::vector<std::vector<int>> supports(const RootMatrix& m) {
  std::vector<std::vector<int>> s(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) s[i] = support(m.a[i]);
  return s;
}

void matmul_row(const RootMatrix& x, const RootMatrix& y, const std::vector<std::vector<int>>& sx,
                const std::vector<std::vector<int>>& sy, RootMatrix& out, int i) {
  const int n = x.n;
  for (int k = 0; k < n; ++k) {
    const auto& nz_x = sx[static_cast<std::size_t>(i) * n + k];
    if (nz_x.empty()) continue;
    for (int j = 0; j < n; ++j) {
      const auto& nz_y = sy[static_cast<std::size_t>(k) * n + j];
      if (!nz_y.empty()) mul_acc(out.at(i, j), x.at(i, k), nz_x, y.at(k, j), nz_y);
    }
  }
}

}  // namespace

RootSum operator*(const RootSum& a, const RootSum& b) {
  RootSum out;
  mul_acc(out, a, support(a), b, support(b));
  return out;
}

CycloNum RootSum::to_cyclo() const { return CycloNum::from_integer_powers(c); }

RootMatrix matmul_serial(const RootMatrix& x, const RootMatrix& y) {
  RootMatrix out(x.n);
  const auto sx = supports(x), sy = supports(y);
  for (int i = 0; i < x.n; ++i) matmul_row(x, y, sx, sy, out, i);
  return out;
}

RootMatrix matmul_parallel(const RootMatrix& x, const RootMatrix& y) {
  RootMatrix out(x.n);
  const auto sx = supports(x), sy = supports(y);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < x.n; ++i) matmul_row(x, y, sx, sy, out, i);
  return out;
}

}  // namespace mtc::kernels
