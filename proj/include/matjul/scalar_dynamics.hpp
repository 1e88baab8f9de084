#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matjul/log_complex.hpp"
#include "matjul/polynomial.hpp"

namespace matjul {

/// Outcome of iterating z until its modulus exceeds `radius` or the budget
/// runs out.  escaped == false never certifies a bounded orbit, only that
/// the budget was exhausted first.
struct EscapeStatus {
  bool escaped = false;
  int steps = 0;      // escape index n (|z_n| > radius, |z_j| <= radius for j < n)
  cdouble last{};     // z_n when escaped, z_N otherwise
  int budget = 0;
  double radius = 0.0;
};

/// One-sided estimate of the Green function G_p(z) = lim d^{-n} log|p^n(z)|.
/// escaped == false means the estimate is censored: value 0 is reported and
/// error_bound is an upper bound on the true value.
struct GreenEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  int iterations_used = 0;
  bool escaped = false;
};

inline EscapeStatus orbit_classify(const Polynomial& p, cdouble z, int budget,
                                   double radius) {
  if (radius < p.escape_radius())
    throw std::invalid_argument("orbit_classify: radius below escape radius");
  EscapeStatus st;
  st.budget = budget;
  st.radius = radius;
  st.last = z;
  if (std::abs(z) > radius) {
    st.escaped = true;
    return st;
  }
  for (int n = 1; n <= budget; ++n) {
    z = p(z);
    if (std::abs(z) > radius) {
      st.escaped = true;
      st.steps = n;
      st.last = z;
      return st;
    }
  }
  st.steps = budget;
  st.last = z;
  return st;
}

namespace detail {

/// Per-step bound on |log|p(w)/(a_d w^d)|| for |w| >= threshold; divided by
/// d-1 it bounds the tail of the telescoped Green sum.
inline double green_tail_constant(const Polynomial& p, double threshold) {
  const int d = p.degree();
  const auto& a = p.coefficients();
  double sigma = 0.0;
  for (int i = 0; i < d; ++i)
    sigma += std::abs(a[i]) * std::pow(threshold, i - d);
  const double lead = std::abs(a[d]);
  double hi = std::abs(std::log(lead + sigma));
  double lo = sigma < lead ? std::abs(std::log(lead - sigma))
                           : std::numeric_limits<double>::infinity();
  // the bound is attained exactly when sigma = 0; cushion its own rounding
  return std::max(hi, lo) / (d - 1) * (1.0 + 1e-12) + 1e-300;
}

/// Upper bound on G_p at points of modulus <= threshold (used to certify
/// censored estimates): G_p(w) <= log^+|w| + per-step slack.
inline double green_ceiling(const Polynomial& p, double threshold) {
  const double R = p.escape_radius();
  return std::log(std::max(threshold, R)) + green_tail_constant(p, std::max(1.0, R)) +
         std::log(2.0);
}

}  // namespace detail

/// Green function estimator.  Iterates until the orbit passes 1e8, then
/// returns d^{-n} log|z_n| with a certified geometric error bound.  The
/// orbit is allowed a short grace period past the escape radius so that an
/// escape detected within `budget` always yields a positive value.
inline GreenEstimate green_scalar(const Polynomial& p, cdouble z, int budget) {
  const int d = p.degree();
  const double R = p.escape_radius();
  const double threshold = std::max(1e8, R);
  GreenEstimate g;
  int n = 0;
  bool past_radius = std::abs(z) > R;
  int grace = 0;
  while (true) {
    const double m = std::abs(z);
    if (m > threshold) {
      g.value = std::log(m) / std::pow(double(d), n);
      g.error_bound = detail::green_tail_constant(p, threshold) / std::pow(double(d), n);
      g.iterations_used = n;
      g.escaped = true;
      return g;
    }
    if (!past_radius && n >= budget) break;
    if (past_radius && grace > 64) break;  // unreachable: beyond R the modulus doubles
    z = p(z);
    ++n;
    if (!past_radius && std::abs(z) > R) past_radius = true;
    if (past_radius) ++grace;
  }
  g.value = 0.0;
  g.error_bound = detail::green_ceiling(p, threshold) / std::pow(double(d), n);
  g.iterations_used = n;
  g.escaped = false;
  return g;
}

/// (p^n(z), (p^n)'(z)) by the chain rule (p^{k+1})' = p'(p^k) * (p^k)'.
/// Overflow shows up as non-finite components.
inline std::pair<cdouble, cdouble> iterate_with_derivative(const Polynomial& p,
                                                           cdouble z, int n) {
  if (n < 0) throw std::invalid_argument("iterate_with_derivative: n must be >= 0");
  cdouble w = z;
  cdouble deriv{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    deriv *= p.derivative(w);
    w = p(w);
  }
  return {w, deriv};
}

/// d^{-n} log|(p^n)'(z)| for an escaping z, tracked in log scale so n far
/// past double overflow is fine.  Approaches G_p(z) as n grows.
inline double derivative_growth(const Polynomial& p, cdouble z, int n) {
  const auto pre = orbit_classify(p, z, std::max(n, 1000), p.escape_radius());
  if (!pre.escaped)
    throw std::domain_error("derivative_growth: input did not escape within budget");
  LogComplex w = LogComplex::from(z);
  double log_deriv = 0.0;
  for (int k = 0; k < n; ++k) {
    log_deriv += log_abs_derivative(p, w);
    w = eval_log(p, w);
  }
  return log_deriv / std::pow(double(p.degree()), n);
}

/// Result of the attracting-cycle search on a bounded orbit.
struct CycleDetection {
  bool found = false;
  int period = 0;
  double multiplier_modulus = 0.0;
  int transient = 0;  // first orbit index at which the recurrence appears
};

/// Scans a stored orbit for a return within `recurrence_tol` over at most
/// `max_period` steps and certifies the cycle by its multiplier.  Orbits
/// that only recur very late (long transient) are reported with the
/// transient index so callers can refuse to certify them.
inline CycleDetection detect_attracting_cycle(const Polynomial& p,
                                              const std::vector<cdouble>& orbit,
                                              int max_period, double recurrence_tol,
                                              double multiplier_margin) {
  CycleDetection det;
  const int n = static_cast<int>(orbit.size());
  for (int k = 0; k < n; ++k) {
    for (int q = 1; q <= max_period && k + q < n; ++q) {
      if (std::abs(orbit[k + q] - orbit[k]) > recurrence_tol) continue;
      cdouble mult{1.0, 0.0};
      for (int j = 0; j < q; ++j) mult *= p.derivative(orbit[k + j]);
      if (std::abs(mult) < 1.0 - multiplier_margin) {
        det.found = true;
        det.period = q;
        det.multiplier_modulus = std::abs(mult);
        det.transient = k;
        return det;
      }
    }
  }
  return det;
}

}  // namespace matjul
