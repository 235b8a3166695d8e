#pragma once

#include <array>
#include <string>
#include <vector>

#include "mtc/cyclofield.hpp"
#include "mtc/kernels.hpp"
#include "mtc/qseries.hpp"

namespace mtc {

/// Z/120 with q(h) = -h²/240 mod 1, from L = Z, (x, y) = -120xy.
struct DiscriminantForm {
  static constexpr int kOrder = 120;

  static int canonical(long h);                 // into 0..119
  static QExponent quadratic(long h);           // in [0, 1)
  static QExponent bilinear(long h, long h2);  // in [0, 1)
};

/// scale · entries, entries in Z[ζ240].
struct WeilMatrix {
  CycloNum scale{1};
  kernels::RootMatrix entries{DiscriminantForm::kOrder};

  CycloNum entry(int h, int h2) const;
};

WeilMatrix rho_T();
/// (1/√(-120i)) [ζ120^{hh'}], principal branch: 1/√(-120i) = ζ8/√120.
WeilMatrix rho_S();
/// 1/√(-120i) as an exact field element.
CycloNum rho_S_scalar();

WeilMatrix multiply(const WeilMatrix& x, const WeilMatrix& y, bool parallel = true);
bool exactly_equal(const WeilMatrix& x, const WeilMatrix& y);

/// Integer 120×6 map sending (H1..H6) to Σ H_h e_h.
struct AssemblyMatrix {
  std::array<std::array<int, 6>, DiscriminantForm::kOrder> rows{};
};

AssemblyMatrix assembly();
int rank(const AssemblyMatrix& a);

using Matrix6 = std::array<std::array<CycloNum, 6>, 6>;

/// The 6×6 multiplier matrices of F under T and S (without ζ8^{-1}√(2/5)).
Matrix6 M_T();
Matrix6 M_S();
/// ζ8^{-1} √(2/5).
CycloNum S_factor();

/// Symbolic rendering of a matrix using the names 0, ±α, ±β/2, ±α/√2,
/// ζ60^-1 and so on; entries not in the dictionary print as "?".
std::vector<std::vector<std::string>> symbolic_layout(const Matrix6& m);

struct CellMismatch {
  int h;
  int j;
};

struct IntertwiningReport {
  bool t_holds = true;
  bool s_holds = true;
  int cells_checked = 0;  // per side
  std::vector<CellMismatch> t_violations;
  std::vector<CellMismatch> s_violations;
};

/// ρ_T A = A M_T and ρ_S A = ζ8^{-1}√(2/5) A M_S, cell by cell.
IntertwiningReport verify_intertwining();
IntertwiningReport verify_intertwining(const AssemblyMatrix& a, const Matrix6& mt, const Matrix6& ms);

/// (ρ_S ρ_T)³ = ρ_S².
bool verify_metaplectic(bool parallel = true);
/// ρ_S² = c·P with P e_h = e_{-h}; returns c if it exists.
std::optional<CycloNum> rho_S_square_scalar();

struct WeilVector {
  std::array<QSeries, DiscriminantForm::kOrder> components;
};

WeilVector assemble_H(const std::array<QSeries, 6>& h);

struct VanishingReport {
  bool vanishes = true;
  QExponent bound;  // compared exponents <= bound
  std::vector<int> nonzero_rows;
};

VanishingReport check_vanishing(const WeilVector& v, const QExponent& bound);
/// Assembles F - G from the holomorphic parts and checks every row through bound.
VanishingReport check_vanishing(const QExponent& bound);

}  // namespace mtc
