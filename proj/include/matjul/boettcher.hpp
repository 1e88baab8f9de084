#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "matjul/polynomial.hpp"
#include "matjul/power_series.hpp"

namespace matjul {

/// Boettcher coordinate of p beyond the escape radius, by the convergent
/// product
///   phi(z) = b z prod_{k>=1} ( p^k(z) / (a_d p^{k-1}(z)^d) )^{d^{-k}},
/// b = a_d^{1/(d-1)} principal branch.  Each factor is 1 + O(1/|p^{k-1}(z)|)
/// and beyond the escape radius stays inside the unit disk around 1, so the
/// principal log per factor is safe.  Satisfies phi(p(z)) = phi(z)^d and
/// log|phi(z)| = G_p(z).
inline cdouble boettcher_scalar(const Polynomial& p, cdouble z) {
  const int d = p.degree();
  const double R = p.escape_radius();
  if (!(std::abs(z) > R))
    throw std::domain_error("boettcher_scalar: |z| must exceed the escape radius");

  const auto& a = p.coefficients();
  const cdouble ad = a[d];
  const cdouble b = std::pow(ad, 1.0 / (d - 1));

  cdouble log_phi = std::log(b) + std::log(z);
  cdouble w = z;
  double scale = 1.0;  // d^{-k}
  for (int k = 1; k <= 256; ++k) {
    scale /= d;
    // factor = p(w) / (a_d w^d) = 1 + sum_{i<d} (a_i/a_d) w^{i-d}, via 1/w
    const cdouble inv = 1.0 / w;
    cdouble r = a[0] / ad;
    for (int i = 1; i < d; ++i) r = r * inv + a[i] / ad;
    r *= inv;
    const cdouble term = scale * std::log(1.0 + r);
    log_phi += term;
    if (std::abs(term) < 1e-15) break;
    w = p(w);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) > 1e100) break;
  }
  return std::exp(log_phi);
}

/// phi'(z) by a 4th-order central difference with step h scaled to |z|.
/// Requires margin 2h inside the domain.
inline cdouble boettcher_derivative_scalar(const Polynomial& p, cdouble z) {
  const double R = p.escape_radius();
  const double h = std::max(1e-5, 1e-8 * std::abs(z));
  if (!(std::abs(z) - 2.0 * h > R))
    throw std::domain_error("boettcher_derivative_scalar: needs |z| > R + 2h");
  const cdouble f_p2 = boettcher_scalar(p, z + 2.0 * h);
  const cdouble f_p1 = boettcher_scalar(p, z + h);
  const cdouble f_m1 = boettcher_scalar(p, z - h);
  const cdouble f_m2 = boettcher_scalar(p, z - 2.0 * h);
  return (-f_p2 + 8.0 * f_p1 - 8.0 * f_m1 + f_m2) / (12.0 * h);
}

/// Laurent coefficients (b, b_0, b_1, ..., b_n) of phi at infinity:
///   phi(z) = b z + b_0 + b_1/z + b_2/z^2 + ...
/// Writing phi(z) = b z u(1/z) with u(0) = 1, the functional equation
/// phi(p(z)) = phi(z)^d becomes
///   (1 + e(t)) u(s(t)) = u(t)^d,   e(t) = sum_{i<d} (a_i/a_d) t^{d-i},
///   s(t) = t^d / (a_d (1 + e(t))),
/// and since s has valuation d, iterating u <- ((1+e) u o s)^{1/d} fixes
/// the coefficients of u up to order d^m - 1 after m passes.
inline std::vector<cdouble> laurent_coefficients(const Polynomial& p, int n) {
  if (n < 0) throw std::invalid_argument("laurent_coefficients: n must be >= 0");
  using namespace series;
  const int d = p.degree();
  const auto& a = p.coefficients();
  const cdouble ad = a[d];
  const std::size_t len = static_cast<std::size_t>(n) + 2;  // u_0 .. u_{n+1}

  Series e = zero(len);
  for (int i = 0; i < d; ++i) {
    const std::size_t k = static_cast<std::size_t>(d - i);
    if (k < len) e[k] = a[i] / ad;
  }
  Series one_plus_e = e;
  one_plus_e[0] += 1.0;

  Series s = inverse(one_plus_e);
  for (auto& c : s) c /= ad;
  // shift by t^d
  Series shifted = zero(len);
  for (std::size_t k = 0; k + d < len; ++k) shifted[k + d] = s[k];
  s = std::move(shifted);

  Series u = one(len);
  int passes = 2;
  for (std::size_t reach = 1; reach < len; reach *= d) ++passes;
  for (int it = 0; it < passes; ++it)
    u = pow(mul(one_plus_e, compose(u, s, d)), 1.0 / d);

  const cdouble b = std::pow(ad, 1.0 / (d - 1));
  std::vector<cdouble> out(static_cast<std::size_t>(n) + 2);
  out[0] = b;
  for (int j = 0; j <= n; ++j) out[static_cast<std::size_t>(j) + 1] = b * u[j + 1];
  return out;
}

/// Evaluates the truncated Laurent series b z + b_0 + sum b_j z^{-j} from
/// laurent_coefficients, by Horner in 1/z.
inline cdouble evaluate_laurent(const std::vector<cdouble>& coeffs, cdouble z) {
  if (coeffs.size() < 2) throw std::invalid_argument("evaluate_laurent: need b and b_0");
  const cdouble inv = 1.0 / z;
  cdouble acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 1;) acc = acc * inv + coeffs[i];
  return coeffs[0] * z + acc;
}

}  // namespace matjul
