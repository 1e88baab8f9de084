#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "matjul/polynomial.hpp"

namespace matjul {

/// A nonzero complex number stored as exp(log_mag) * unit with |unit| = 1.
/// Lets polynomial orbits run far past the range of double (|z| ~ e^{d^n})
/// while keeping log-moduli exact to rounding.  Zero is log_mag = -inf.
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  cdouble unit{1.0, 0.0};

  static LogComplex from(cdouble z) {
    double m = std::abs(z);
    if (m == 0.0) return {};
    return {std::log(m), z / m};
  }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

  /// Reconstructs the value; saturates to 0 / overflows naturally when the
  /// magnitude leaves double range.
  cdouble value() const { return std::exp(log_mag) * unit; }
};

namespace detail {

inline cdouble unit_power(cdouble u, int k) {
  cdouble acc{1.0, 0.0};
  for (int i = 0; i < k; ++i) {
    acc *= u;
    acc /= std::abs(acc);  // keep the drift off the unit circle bounded
  }
  return acc;
}

}  // namespace detail

/// p(w) for a log-scaled point.  Moderate magnitudes are evaluated directly;
/// huge ones through p(w) = a_d w^d (1 + r) with r computed from 1/w, which
/// underflows harmlessly to 0 once |w| is astronomically large.
inline LogComplex eval_log(const Polynomial& p, const LogComplex& w) {
  const int d = p.degree();
  if (w.log_mag <= 600.0 / d) return LogComplex::from(p(w.value()));

  const auto& a = p.coefficients();
  const cdouble ad = a[d];
  const cdouble inv = std::exp(-w.log_mag) * std::conj(w.unit);
  cdouble r = a[0] / ad;
  for (int i = 1; i < d; ++i) r = r * inv + a[i] / ad;
  r *= inv;
  const cdouble factor = 1.0 + r;  // |r| <= ~1e-250 here, factor is never 0

  LogComplex out;
  out.log_mag = d * w.log_mag + std::log(std::abs(ad)) + std::log(std::abs(factor));
  out.unit = detail::unit_power(w.unit, d) * (ad / std::abs(ad)) * (factor / std::abs(factor));
  out.unit /= std::abs(out.unit);
  return out;
}

/// log|p'(w)| for a log-scaled point, same regime split as eval_log.
inline double log_abs_derivative(const Polynomial& p, const LogComplex& w) {
  const int d = p.degree();
  if (w.is_zero()) {
    double m = std::abs(p.derivative_coefficients()[0]);
    return m == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(m);
  }
  if (w.log_mag <= 600.0 / d) {
    double m = std::abs(p.derivative(w.value()));
    return m == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(m);
  }
  const auto& dc = p.derivative_coefficients();  // degree d-1, leading d*a_d
  const cdouble lead = dc[d - 1];
  const cdouble inv = std::exp(-w.log_mag) * std::conj(w.unit);
  cdouble r = dc[0] / lead;
  for (int i = 1; i < d - 1; ++i) r = r * inv + dc[i] / lead;
  if (d > 1) r *= inv;
  return (d - 1) * w.log_mag + std::log(std::abs(lead)) + std::log(std::abs(1.0 + r));
}

}  // namespace matjul
