#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace matjul {

using cdouble = std::complex<double>;

/// A complex polynomial of degree >= 2, stored by ascending coefficients
/// a_0 ... a_d.  Drives both the scalar dynamics and, lifted entrywise
/// through the spectrum, the matrix dynamics.
class Polynomial {
 public:
  explicit Polynomial(std::vector<cdouble> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 3)
      throw std::invalid_argument("Polynomial: degree must be at least 2");
    if (std::abs(coeffs_.back()) == 0.0)
      throw std::invalid_argument("Polynomial: leading coefficient must be nonzero");
    deriv_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      deriv_.push_back(static_cast<double>(i) * coeffs_[i]);
    escape_radius_ = compute_escape_radius();
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cdouble>& coefficients() const { return coeffs_; }
  cdouble leading() const { return coeffs_.back(); }

  /// Horner evaluation.  Overflow propagates as non-finite components.
  cdouble operator()(cdouble z) const {
    cdouble acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

  /// p'(z), from the precomputed derivative coefficients.
  cdouble derivative(cdouble z) const {
    cdouble acc = deriv_.back();
    for (std::size_t i = deriv_.size() - 1; i-- > 0;) acc = acc * z + deriv_[i];
    return acc;
  }

  const std::vector<cdouble>& derivative_coefficients() const { return deriv_; }

  /// Radius R >= 1 with |z| > R  =>  |p(z)| >= 2|z|, so the region beyond R
  /// is forward-invariant and orbits there at least double in modulus each
  /// step.  R is the unique positive root of
  ///   |a_d| r^d - sum_{i<d} |a_i| r^i - 2r
  /// (unique by Descartes' rule: one sign change), clamped below by 1.
  double escape_radius() const { return escape_radius_; }

 private:
  double majorant(double r) const {
    const int d = degree();
    double acc = std::abs(coeffs_[d]);
    for (int i = d - 1; i >= 0; --i) {
      double c = (i == 1) ? std::abs(coeffs_[1]) + 2.0 : std::abs(coeffs_[i]);
      acc = acc * r - c;
    }
    return acc;
  }

  double compute_escape_radius() const {
    const int d = degree();
    double sum_lower = 0.0;
    for (int i = 0; i < d; ++i) sum_lower += std::abs(coeffs_[i]);
    // Sufficient radius: |a_d| r >= sum_lower + 3 makes the majorant positive.
    double hi = std::max(1.0, (sum_lower + 3.0) / std::abs(coeffs_[d]));
    if (majorant(1.0) >= 0.0) return 1.0;
    double lo = 1.0;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (majorant(mid) >= 0.0 ? hi : lo) = mid;
    }
    return hi;
  }

  std::vector<cdouble> coeffs_;
  std::vector<cdouble> deriv_;
  double escape_radius_ = 1.0;
};

}  // namespace matjul
