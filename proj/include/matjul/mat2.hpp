#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "matjul/polynomial.hpp"

namespace matjul {

/// 2x2 complex matrix, row-major [[a, b], [c, d]].  Plain value type; all
/// operations are closed-form.
struct Mat2 {
  cdouble a{}, b{}, c{}, d{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diagonal(cdouble l1, cdouble l2) { return {l1, 0.0, 0.0, l2}; }
  /// Jordan block [[lambda, 1], [0, lambda]].
  static Mat2 jordan(cdouble lambda) { return {lambda, 1.0, 0.0, lambda}; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(cdouble s, const Mat2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
  friend Mat2 operator*(const Mat2& x, cdouble s) { return s * x; }

  bool is_finite() const {
    auto ok = [](cdouble z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    };
    return ok(a) && ok(b) && ok(c) && ok(d);
  }
};

inline cdouble trace(const Mat2& m) { return m.a + m.d; }
inline cdouble determinant(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline double frobenius_norm(const Mat2& m) {
  return std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d));
}

inline double max_entry_modulus(const Mat2& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                  std::max(std::abs(m.c), std::abs(m.d)));
}

inline Mat2 inverse(const Mat2& m) {
  const cdouble det = determinant(m);
  if (std::abs(det) == 0.0) throw std::domain_error("inverse: singular matrix");
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

/// Q M Q^{-1}.
inline Mat2 conjugate(const Mat2& q, const Mat2& m) { return q * m * inverse(q); }

/// Frobenius condition number ||Q||_F ||Q^{-1}||_F; for 2x2 the adjugate has
/// the same Frobenius norm as Q, so this is ||Q||_F^2 / |det Q|.
inline double condition_number(const Mat2& q) {
  const double det = std::abs(determinant(q));
  if (det == 0.0) throw std::domain_error("condition_number: singular matrix");
  const double n = frobenius_norm(q);
  return n * n / det;
}

/// Eigenvalues by the stable quadratic formula on l^2 - tr l + det: the
/// larger root first, the other recovered as det / l1 to dodge cancellation.
inline std::pair<cdouble, cdouble> eigenvalues(const Mat2& m) {
  const cdouble tr = trace(m);
  const cdouble det = determinant(m);
  const cdouble disc = tr * tr - 4.0 * det;
  cdouble sq = std::sqrt(disc);
  if (std::real(std::conj(tr) * sq) < 0.0) sq = -sq;
  const cdouble l1 = 0.5 * (tr + sq);
  const cdouble l2 = (std::abs(l1) > 0.0) ? det / l1 : 0.5 * (tr - sq);
  return {l1, l2};
}

inline double spectral_radius(const Mat2& m) {
  const auto [l1, l2] = eigenvalues(m);
  return std::max(std::abs(l1), std::abs(l2));
}

inline Mat2 matrix_power(const Mat2& m, int k) {
  Mat2 acc = Mat2::identity();
  for (int i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

}  // namespace matjul
