#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "matjul/boettcher.hpp"
#include "matjul/log_complex.hpp"
#include "matjul/matrix_polynomial.hpp"
#include "matjul/scalar_dynamics.hpp"
#include "matjul/spectrum.hpp"

namespace matjul {

/// Matrix Green function estimate.  Two routes are kept deliberately and
/// their agreement is a primary oracle: Direct follows the defining
/// sequence d^{-n} log ||P^n(M)||, EigenMax takes the max of the scalar
/// Green values over the spectrum.
struct MatrixGreen {
  enum class Route { Direct, EigenMax };
  double value = 0.0;
  Route route = Route::EigenMax;
  int direct_steps = 0;
  double error_bound = 0.0;
};

/// Domain on which the matrix Boettcher map is defined: both eigenvalues
/// beyond the scalar radius R.
struct OmegaDomain {
  double radius;
  explicit OmegaDomain(double r) : radius(r) {}
  explicit OmegaDomain(const Polynomial& p) : radius(p.escape_radius()) {}
};

/// G_n(M) = d^{-n} log ||P^n(M)||, made overflow-safe: once the orbit norm
/// passes 1e8 the remaining steps run on the eigenvalues of the current
/// iterate in log scale (the conjugator's condition number is folded into
/// the error bound).  A norm that never reaches 1e8 within n steps is
/// censored to value 0 with a certified ceiling.
inline MatrixGreen green_direct(const Polynomial& p, const Mat2& m, int n,
                                const TolerancePolicy& tol = {}) {
  const int d = p.degree();
  const double switch_norm = 1e8;
  MatrixGreen g;
  g.route = MatrixGreen::Route::Direct;
  g.direct_steps = n;

  Mat2 w = m;
  int k = 0;
  while (k < n && frobenius_norm(w) <= switch_norm) {
    w = eval_P(p, w);
    ++k;
  }
  const double dn = std::pow(double(d), n);

  if (k == n && frobenius_norm(w) <= switch_norm) {
    g.value = 0.0;
    g.error_bound = detail::green_ceiling(p, switch_norm * 2.0) / dn;
    return g;
  }

  const Spectrum s = eigen_decompose(w, tol);
  const int remaining = n - k;
  auto log_iterate = [&p, remaining](cdouble z) {
    LogComplex lc = LogComplex::from(z);
    for (int j = 0; j < remaining; ++j) lc = eval_log(p, lc);
    return lc.log_mag;
  };

  double log_norm;
  if (s.kind == Spectrum::Kind::Distinct) {
    log_norm = std::max(log_iterate(s.lambda1), log_iterate(s.lambda2));
  } else if (s.kind == Spectrum::Kind::Defective) {
    LogComplex lc = LogComplex::from(s.lambda1);
    double log_deriv = 0.0;
    for (int j = 0; j < remaining; ++j) {
      log_deriv += log_abs_derivative(p, lc);
      lc = eval_log(p, lc);
    }
    log_norm = std::max(lc.log_mag, log_deriv);
  } else {
    log_norm = log_iterate(s.lambda1) + 0.5 * std::log(2.0);
  }

  g.value = std::max(0.0, log_norm / dn);
  g.error_bound = (std::log(std::max(2.0, s.cond_Q)) + std::log(2.0)) / dn +
                  detail::green_tail_constant(p, std::max(1.0, p.escape_radius())) / dn;
  return g;
}

/// G(M) = max of the scalar Green values over the eigenvalues.  For a
/// defective (or scalar) spectrum the single eigenvalue decides: the
/// derivative entry grows too slowly to move the limit, absorbed into the
/// error bound at finite budget.
inline MatrixGreen green_matrix(const Polynomial& p, const Mat2& m, int budget = 1000,
                                const TolerancePolicy& tol = {}) {
  const Spectrum s = eigen_decompose(m, tol);
  MatrixGreen g;
  g.route = MatrixGreen::Route::EigenMax;
  const GreenEstimate g1 = green_scalar(p, s.lambda1, budget);
  if (s.kind == Spectrum::Kind::Distinct) {
    const GreenEstimate g2 = green_scalar(p, s.lambda2, budget);
    g.value = std::max(g1.value, g2.value);
    g.error_bound = std::max(g1.error_bound, g2.error_bound);
  } else {
    g.value = g1.value;
    g.error_bound = g1.error_bound;
  }
  return g;
}

/// Matrix Boettcher map: the scalar coordinate applied through the
/// spectrum, with the scalar derivative on the superdiagonal in the
/// defective case.  Conjugating P into M -> M^d near infinity.
inline Mat2 boettcher_matrix(const Polynomial& p, const Mat2& m, const OmegaDomain& omega,
                             const TolerancePolicy& tol = {}) {
  const Spectrum s = eigen_decompose(m, tol);
  const auto inside = [&omega](cdouble lambda) {
    return std::abs(lambda) > omega.radius;
  };
  if (!inside(s.lambda1) || !inside(s.lambda2))
    throw std::domain_error("boettcher_matrix: eigenvalues must lie beyond the domain radius");
  switch (s.kind) {
    case Spectrum::Kind::Scalar:
      return boettcher_scalar(p, s.lambda1) * Mat2::identity();
    case Spectrum::Kind::Distinct:
      return conjugate(s.conjugator,
                       Mat2::diagonal(boettcher_scalar(p, s.lambda1),
                                      boettcher_scalar(p, s.lambda2)));
    case Spectrum::Kind::Defective:
    default: {
      const cdouble phi = boettcher_scalar(p, s.lambda1);
      const cdouble dphi = boettcher_derivative_scalar(p, s.lambda1);
      return conjugate(s.conjugator, Mat2{phi, dphi, 0.0, phi});
    }
  }
}

inline Mat2 boettcher_matrix(const Polynomial& p, const Mat2& m) {
  return boettcher_matrix(p, m, OmegaDomain(p));
}

/// Truncated matrix Laurent series b M + b_0 I + b_1 M^{-1} + ... + b_n M^{-n},
/// coefficients from laurent_coefficients; Horner in M^{-1}.
inline Mat2 boettcher_series(const Polynomial& p, const Mat2& m, int order,
                             const TolerancePolicy& tol = {}) {
  const Spectrum s = eigen_decompose(m, tol);
  const double radius = p.escape_radius();
  if (!(std::abs(s.lambda1) > radius) || !(std::abs(s.lambda2) > radius))
    throw std::domain_error("boettcher_series: eigenvalues must lie beyond the escape radius");
  const Mat2 minv = inverse(m);  // throws on singular M

  const auto coeffs = laurent_coefficients(p, order);
  Mat2 acc = coeffs.back() * Mat2::identity();
  for (std::size_t i = coeffs.size() - 1; i-- > 1;)
    acc = acc * minv + coeffs[i] * Mat2::identity();
  return coeffs[0] * m + acc;
}

}  // namespace matjul
