#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "matjul/mat2.hpp"
#include "matjul/polynomial.hpp"
#include "matjul/scalar_dynamics.hpp"
#include "matjul/spectrum.hpp"

namespace matjul {

/// Forward orbit of a matrix under P.  points[k] = P^k(M); iteration stops
/// early once an entry magnitude passes the overflow cut-off, recorded
/// in-band so classification can read "escaped".
struct MatrixOrbit {
  std::vector<Mat2> points;
  std::optional<int> overflowed_at;

  const Mat2& last() const { return points.back(); }
};

inline constexpr double kOverflowCutoff = 1e150;

/// P(M) = a_d M^d + ... + a_1 M + a_0 I by the matrix Horner scheme
/// (d multiplications).  Overflow propagates as non-finite entries.
inline Mat2 eval_P(const Polynomial& p, const Mat2& m) {
  const auto& a = p.coefficients();
  Mat2 acc = a.back() * Mat2::identity();
  for (std::size_t i = a.size() - 1; i-- > 0;)
    acc = acc * m + a[i] * Mat2::identity();
  return acc;
}

inline MatrixOrbit iterate_P(const Polynomial& p, const Mat2& m, int n) {
  if (n < 0) throw std::invalid_argument("iterate_P: n must be >= 0");
  MatrixOrbit orbit;
  orbit.points.reserve(static_cast<std::size_t>(n) + 1);
  orbit.points.push_back(m);
  for (int k = 1; k <= n; ++k) {
    if (max_entry_modulus(orbit.points.back()) > kOverflowCutoff) {
      orbit.overflowed_at = k - 1;
      break;
    }
    orbit.points.push_back(eval_P(p, orbit.points.back()));
  }
  return orbit;
}

/// P^n(M) through the spectrum:
///   Distinct:  Q diag(p^n(l1), p^n(l2)) Q^{-1}
///   Defective: Q [[p^n(l), (p^n)'(l)], [0, p^n(l)]] Q^{-1}
///   Scalar:    p^n(l) I
inline Mat2 lift_iterate(const Polynomial& p, const Spectrum& s, int n) {
  if (n < 0) throw std::invalid_argument("lift_iterate: n must be >= 0");
  auto iterate = [&p, n](cdouble z) {
    for (int k = 0; k < n; ++k) z = p(z);
    return z;
  };
  switch (s.kind) {
    case Spectrum::Kind::Scalar:
      return iterate(s.lambda1) * Mat2::identity();
    case Spectrum::Kind::Distinct:
      return conjugate(s.conjugator,
                       Mat2::diagonal(iterate(s.lambda1), iterate(s.lambda2)));
    case Spectrum::Kind::Defective:
    default: {
      const auto [w, dw] = iterate_with_derivative(p, s.lambda1, n);
      return conjugate(s.conjugator, Mat2{w, dw, 0.0, w});
    }
  }
}

}  // namespace matjul
