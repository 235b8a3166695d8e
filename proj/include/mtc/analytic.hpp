#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "mtc/qseries.hpp"
#include "mtc/specialforms.hpp"

namespace mtc {

using Complex = std::complex<double>;

/// A point of the upper half-plane.
struct SamplePoint {
  Complex z;

  /// Throws Error(domain) unless Im z > 0.
  static SamplePoint make(Complex z);
};

/// "0+1i", "0.25+1i", "2i", "i", "-1/3+1.5i".
SamplePoint parse_sample_point(const std::string& text);

/// The fixed transformation test points i, 2i, 1/4 + i, -1/3 + 3i/2.
std::vector<SamplePoint> standard_sample_points();

enum class RMethod { quadrature, closed_form };

struct EvalOptions {
  int theta_terms = 40;              // K in a + [-K, K] for unary theta sums
  double tolerance = 1e-12;          // absolute target per R_{a,b} evaluation
  double cutoff = 25.0;              // skip ν with |ν|√(2π y) beyond this
  RMethod method = RMethod::quadrature;
  int kronrod_points = 31;           // 15, 31 or 61

  void validate() const;
};

/// value ± error
struct Estimate {
  Complex value;
  double error = 0.0;
};

/// Σ embed(c_r) e^{2πi r z}; error is a heuristic bound on the tail past the
/// series' truncation.
Estimate eval_qseries(const QSeries& f, Complex z);

/// g_{a,b}(z) = Σ_{ν ∈ a+Z} ν e^{πiν²z + 2πiνb}.
Estimate unary_theta(const QExponent& a, const QExponent& b, Complex z, const EvalOptions& opts = {});

/// R_{a,b}(z) = -i ∫_{-z̄}^{i∞} g_{a,-b}(τ)/√(-i(τ+z)) dτ, integrated termwise.
/// Throws ConvergenceError if the accumulated error estimate exceeds the tolerance.
Estimate R_integral(const QExponent& a, const QExponent& b, Complex z, const EvalOptions& opts = {});

/// √(-i(τ + z)) at τ = -z̄.
Complex R_endpoint_root(Complex z);

/// Holomorphic part plus the R_{a,b} completion terms. Throws Error(unsupported)
/// for theta-integral or unspecified completions.
Estimate eval_completed(const CompletedFunction& f, Complex z, const EvalOptions& opts = {});

struct Residual {
  std::string component;
  Complex z;
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double error_budget = 0.0;
};

struct ResidualReport {
  std::string vector;  // "F" or "G"
  std::string kind;    // "S" or "T"
  Complex z;
  std::vector<Residual> components;
  double max_residual = 0.0;
  double max_error_budget = 0.0;
};

/// Holomorphic truncation used for the numeric vector evaluations.
inline constexpr int kNumericBound = 40;

/// z^{-1/2} V(-1/z) against ζ8^{-1}√(2/5) M_S V(z), principal branch.
ResidualReport check_S_transformation(char vector, Complex z, const EvalOptions& opts = {});
/// V(z+1) against M_T V(z).
ResidualReport check_T_transformation(char vector, Complex z, const EvalOptions& opts = {});

/// η(z) from its q-expansion.
Estimate eval_eta(Complex z);
/// |η(-1/z) - √(-iz) η(z)|.
double eta_S_residual(Complex z);

}  // namespace mtc
