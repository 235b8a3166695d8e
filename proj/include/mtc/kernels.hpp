#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mtc/qseries.hpp"

// Hot loops with a serial reference and an OpenMP version. Both produce
// identical results; tests and the benchmark compare them.
namespace mtc::kernels {

/// Terms of f·g with exponent below `limit` (all terms when nullopt).
QSeries::Terms series_product_serial(const QSeries::Terms& f, const QSeries::Terms& g, const OrderBound& limit);
QSeries::Terms series_product_parallel(const QSeries::Terms& f, const QSeries::Terms& g, const OrderBound& limit);

/// Dispatches to the parallel kernel for large operands.
QSeries::Terms series_product(const QSeries::Terms& f, const QSeries::Terms& g, const OrderBound& limit);

/// Element of Z[x]/(x^120 + 1) = Z[ζ240], unreduced modulo Φ240. Sums of
/// roots of unity stay small, so int64 coefficients suffice.
struct RootSum {
  std::array<std::int64_t, 120> c{};

  static RootSum root(long k);  // ζ240^k
  bool is_zero() const;
  RootSum& operator+=(const RootSum& o);
  friend RootSum operator*(const RootSum& a, const RootSum& b);
  friend bool operator==(const RootSum& a, const RootSum& b) = default;
  CycloNum to_cyclo() const;
};

/// Dense row-major square matrix over RootSum.
struct RootMatrix {
  int n = 0;
  std::vector<RootSum> a;

  explicit RootMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size) {}
  RootSum& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const RootSum& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  friend bool operator==(const RootMatrix& x, const RootMatrix& y) = default;
};

RootMatrix matmul_serial(const RootMatrix& x, const RootMatrix& y);
RootMatrix matmul_parallel(const RootMatrix& x, const RootMatrix& y);

}  // namespace mtc::kernels
