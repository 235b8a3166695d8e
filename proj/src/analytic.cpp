#include "mtc/analytic.hpp"

#include <omp.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <exception>
#include <numbers>
#include <regex>

#include "mtc/error.hpp"
#include "mtc/weilrep.hpp"

namespace mtc {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

double to_double(const QExponent& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

Complex e2pi(Complex w) { return std::exp(2.0 * kPi * kI * w); }

// ∫_{s0}^∞ 2 e^{-c(s² - s0²)} ds, the t-integral ∫_0^∞ e^{-ct}/√(2y+t) dt after t = s² - 2y.
double gaussian_tail_quadrature(double c, double s0, int points, double rel_tol, double* err) {
  auto f = [c, s0](double s) { return 2.0 * std::exp(-c * (s - s0) * (s + s0)); };
  // beyond S the integral is below e^{-40} / (c S)
  const double S = std::sqrt(s0 * s0 + 40.0 / c);
  const double tail = std::exp(-40.0) / (c * S);
  double e = 0.0, v = 0.0;
  using namespace boost::math::quadrature;
  switch (points) {
    case 15: v = gauss_kronrod<double, 15>::integrate(f, s0, S, 15, rel_tol, &e); break;
    case 31: v = gauss_kronrod<double, 31>::integrate(f, s0, S, 15, rel_tol, &e); break;
    default: v = gauss_kronrod<double, 61>::integrate(f, s0, S, 15, rel_tol, &e); break;
  }
  *err = e + tail;
  return v;
}

double gaussian_tail_closed(double c, double s0) {
  // √(π/c) e^{c s0²} erfc(√c s0), stable as long as √c s0 stays below the cutoff
  const double x = std::sqrt(c) * s0;
  return std::sqrt(kPi / c) * std::exp(x * x) * std::erfc(x);
}

}  // namespace

SamplePoint SamplePoint::make(Complex z) {
  if (!(z.imag() > 0.0)) throw Error(ErrorKind::domain, "sample point needs Im z > 0");
  return {z};
}

SamplePoint parse_sample_point(const std::string& text) {
  // real part with optional fraction, then an optional signed imaginary part ending in i
  static const std::regex re(R"(^\s*([+-]?[0-9.]+(?:/[0-9.]+)?)?(?:\s*([+-])\s*([0-9.]+(?:/[0-9.]+)?)?\s*\*?\s*i)?\s*$)");
  static const std::regex pure_imag(R"(^\s*([+-]?)([0-9.]+(?:/[0-9.]+)?)?\s*\*?\s*i\s*$)");
  auto number = [&](const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return std::stod(s);
      return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "bad number '" + s + "' in '" + text + "'");
    }
  };
  std::smatch m;
  if (std::regex_match(text, m, pure_imag)) {
    const double im = m[2].matched ? number(m[2].str()) : 1.0;
    return SamplePoint::make({0.0, m[1].str() == "-" ? -im : im});
  }
  if (!std::regex_match(text, m, re) || (!m[1].matched && !m[2].matched))
    throw Error(ErrorKind::parse, "cannot read complex number '" + text + "'");
  const double re_part = m[1].matched ? number(m[1].str()) : 0.0;
  double im = 0.0;
  if (m[2].matched) {
    im = m[3].matched ? number(m[3].str()) : 1.0;
    if (m[2].str() == "-") im = -im;
  }
  return SamplePoint::make({re_part, im});
}

std::vector<SamplePoint> standard_sample_points() {
  return {{Complex(0, 1)}, {Complex(0, 2)}, {Complex(0.25, 1)}, {Complex(-1.0 / 3.0, 1.5)}};
}

void EvalOptions::validate() const {
  if (!(tolerance > 0.0)) throw Error(ErrorKind::domain, "tolerance must be positive");
  if (theta_terms < 1) throw Error(ErrorKind::domain, "theta truncation needs at least one term");
  if (!(cutoff > 0.0)) throw Error(ErrorKind::domain, "tail cutoff must be positive");
  if (kronrod_points != 15 && kronrod_points != 31 && kronrod_points != 61)
    throw Error(ErrorKind::domain, "Gauss-Kronrod rule must have 15, 31 or 61 points");
}

Estimate eval_qseries(const QSeries& f, Complex z) {
  SamplePoint::make(z);
  Estimate out{0.0, 0.0};
  double last_mag = 0.0;
  const auto& terms = f.terms();
  std::size_t idx = 0;
  for (const auto& [e, c] : terms) {
    const Complex v = embed(c) * e2pi(to_double(e) * z);
    out.value += v;
    // largest coefficient among the last few stored terms
    if (idx + 8 >= terms.size()) last_mag = std::max(last_mag, std::abs(embed(c)));
    ++idx;
  }
  if (f.bound()) {
    const double aq = std::exp(-2.0 * kPi * z.imag());
    // remaining terms modelled as a geometric tail with twice the last coefficient size
    out.error = 2.0 * last_mag * std::pow(aq, to_double(*f.bound())) / (1.0 - aq);
  }
  return out;
}

Estimate unary_theta(const QExponent& a, const QExponent& b, Complex z, const EvalOptions& opts) {
  opts.validate();
  SamplePoint::make(z);
  const double ad = to_double(a), bd = to_double(b), y = z.imag();
  Estimate out{0.0, 0.0};
  // pair ν and its mirror term by term from the outside in to limit cancellation error
  for (int n = opts.theta_terms; n >= -opts.theta_terms; --n) {
    const double nu = ad + n;
    out.value += nu * std::exp(kPi * kI * nu * nu * z + 2.0 * kPi * kI * nu * bd);
  }
  double tail = 0.0;
  for (const double nu : {ad + opts.theta_terms + 1, ad - opts.theta_terms - 1}) {
    const double r = std::exp(-2.0 * kPi * std::abs(nu) * y);
    tail += std::abs(nu) * std::exp(-kPi * nu * nu * y) / (1.0 - r);
  }
  out.error = tail;
  if (tail > opts.tolerance)
    throw ConvergenceError("unary theta tail " + std::to_string(tail) + " exceeds tolerance with K = " +
                               std::to_string(opts.theta_terms),
                           tail);
  return out;
}

Complex R_endpoint_root(Complex z) {
  const Complex tau = -std::conj(z);
  return std::sqrt(-kI * (tau + z));
}

Estimate R_integral(const QExponent& a, const QExponent& b, Complex z, const EvalOptions& opts) {
  opts.validate();
  SamplePoint::make(z);
  const double ad = to_double(a), bd = to_double(b);
  const double x = z.real(), y = z.imag();
  const double s0 = std::sqrt(2.0 * y);

  Estimate out{0.0, 0.0};
  const double per_term_tol = opts.tolerance / 10.0;
  // n runs outward from the ν nearest zero on both sides
  const long center = -static_cast<long>(std::floor(ad));
  constexpr long kMaxTerms = 100000;
  bool up_done = false, down_done = false;
  for (long k = 0; !(up_done && down_done); ++k) {
    if (k > kMaxTerms)
      throw ConvergenceError("R_" + to_string(a) + "," + to_string(b) + " needs more than " +
                                 std::to_string(kMaxTerms) + " theta terms",
                             out.error);
    for (int side = 0; side < 2; ++side) {
      if ((side == 0 && up_done) || (side == 1 && down_done)) continue;
      if (side == 1 && k == 0) continue;
      const long n = side == 0 ? center + k : center - k;
      const double nu = ad + static_cast<double>(n);
      if (nu == 0.0) continue;
      const double X = std::abs(nu) * std::sqrt(2.0 * kPi * y);
      const double bound = std::exp(-kPi * nu * nu * y) / (X * std::sqrt(kPi));
      if (X > opts.cutoff || bound < per_term_tol * 1e-6) {
        (side == 0 ? up_done : down_done) = true;
        out.error += bound;
        continue;
      }
      const double c = kPi * nu * nu;
      double integral, ierr = 0.0;
      if (opts.method == RMethod::quadrature)
        integral = gaussian_tail_quadrature(c, s0, opts.kronrod_points, 1e-14, &ierr);
      else
        integral = gaussian_tail_closed(c, s0);
      const Complex phase = std::exp(-kPi * kI * nu * nu * x - 2.0 * kPi * kI * nu * bd);
      const double damp = std::exp(-kPi * nu * nu * y);
      out.value += nu * damp * phase * integral;
      out.error += std::abs(nu) * damp * ierr;
    }
  }
  if (out.error > opts.tolerance)
    throw ConvergenceError("R_" + to_string(a) + "," + to_string(b) + " error estimate " +
                               std::to_string(out.error) + " exceeds tolerance",
                           out.error);
  return out;
}

Estimate eval_completed(const CompletedFunction& f, Complex z, const EvalOptions& opts) {
  switch (f.status()) {
    case CompletionStatus::theta_integral:
      throw Error(ErrorKind::unsupported, "numeric evaluation of the theta-integral completion of " + f.name);
    case CompletionStatus::unspecified:
      throw Error(ErrorKind::unsupported, "completion of " + f.name + " is not specified");
    case CompletionStatus::explicit_terms:
      break;
  }
  Estimate out = eval_qseries(f.holo, z);
  for (const auto& t : f.completion) {
    const Complex w = to_double(t.arg_scale) * z + to_double(t.arg_shift);
    const Complex p = embed(t.prefactor);
    const Estimate r = R_integral(t.a, t.b, w, opts);
    out.value += p * r.value;
    out.error += std::abs(p) * r.error;
  }
  return out;
}

namespace {

const std::array<CompletedFunction, 6>& vector_functions(char which) {
  static const std::array<CompletedFunction, 6> F = build_F(QExponent(kNumericBound));
  static const std::array<CompletedFunction, 6> G = build_G(QExponent(kNumericBound));
  if (which == 'F') return F;
  if (which == 'G') return G;
  throw Error(ErrorKind::unknown_name, std::string("vector '") + which + "', expected F or G");
}

std::array<Estimate, 6> eval_vector(char which, Complex z, const EvalOptions& opts) {
  const auto& V = vector_functions(which);
  std::array<Estimate, 6> out;
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < 6; ++j) {
    try {
      out[j] = eval_completed(V[j], z, opts);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

using ComplexMatrix = std::array<std::array<Complex, 6>, 6>;

ComplexMatrix embed_matrix(const Matrix6& m) {
  ComplexMatrix out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out[i][j] = embed(m[i][j]);
  return out;
}

ResidualReport finish(ResidualReport rep, char which, const std::array<Complex, 6>& lhs, const std::array<double, 6>& lerr,
                      const std::array<Complex, 6>& rhs, const std::array<double, 6>& rerr) {
  const auto& V = vector_functions(which);
  for (int j = 0; j < 6; ++j) {
    Residual r{V[j].name, rep.z, lhs[j], rhs[j], std::abs(lhs[j] - rhs[j]), lerr[j] + rerr[j]};
    rep.max_residual = std::max(rep.max_residual, r.abs_residual);
    rep.max_error_budget = std::max(rep.max_error_budget, r.error_budget);
    rep.components.push_back(std::move(r));
  }
  return rep;
}

}  // namespace

ResidualReport check_S_transformation(char which, Complex z, const EvalOptions& opts) {
  SamplePoint::make(z);
  const auto at_z = eval_vector(which, z, opts);
  const auto at_sz = eval_vector(which, -1.0 / z, opts);
  const Complex weight = std::pow(z, -0.5);  // principal branch, arg ∈ (-π, π]
  const Complex factor = embed(S_factor());
  const ComplexMatrix ms = embed_matrix(M_S());

  std::array<Complex, 6> lhs, rhs;
  std::array<double, 6> lerr, rerr;
  for (int j = 0; j < 6; ++j) {
    lhs[j] = weight * at_sz[j].value;
    lerr[j] = std::abs(weight) * at_sz[j].error;
    Complex acc = 0.0;
    double err = 0.0;
    for (int k = 0; k < 6; ++k) {
      acc += ms[j][k] * at_z[k].value;
      err += std::abs(ms[j][k]) * at_z[k].error;
    }
    rhs[j] = factor * acc;
    rerr[j] = std::abs(factor) * err;
  }
  return finish({std::string(1, which), "S", z, {}, 0.0, 0.0}, which, lhs, lerr, rhs, rerr);
}

ResidualReport check_T_transformation(char which, Complex z, const EvalOptions& opts) {
  SamplePoint::make(z);
  const auto at_z = eval_vector(which, z, opts);
  const auto at_tz = eval_vector(which, z + 1.0, opts);
  const ComplexMatrix mt = embed_matrix(M_T());

  std::array<Complex, 6> lhs, rhs;
  std::array<double, 6> lerr, rerr;
  for (int j = 0; j < 6; ++j) {
    lhs[j] = at_tz[j].value;
    lerr[j] = at_tz[j].error;
    Complex acc = 0.0;
    double err = 0.0;
    for (int k = 0; k < 6; ++k) {
      acc += mt[j][k] * at_z[k].value;
      err += std::abs(mt[j][k]) * at_z[k].error;
    }
    rhs[j] = acc;
    rerr[j] = err;
  }
  return finish({std::string(1, which), "T", z, {}, 0.0, 0.0}, which, lhs, lerr, rhs, rerr);
}

Estimate eval_eta(Complex z) {
  static const QSeries e = eta(QExponent(1), QExponent(80));
  return eval_qseries(e, z);
}

double eta_S_residual(Complex z) {
  SamplePoint::make(z);
  const Complex lhs = eval_eta(-1.0 / z).value;
  const Complex rhs = std::sqrt(-kI * z) * eval_eta(z).value;
  return std::abs(lhs - rhs);
}

}  // namespace mtc
