#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "matjul/mat2.hpp"

namespace matjul {

/// Numerical thresholds for the eigenstructure split.  The exact Jordan
/// dichotomy has no tolerance-free analogue in floating point; matrices in
/// the band between "clearly split" and "clearly scalar" are treated as
/// defective, which keeps the derivative term in downstream formulas.
struct TolerancePolicy {
  double eig_split_tol = 1e-9;
  double scalar_tol = 1e-12;
};

/// Eigenstructure of a 2x2 matrix with an explicit conjugator.
///   Distinct:  M = Q diag(l1, l2) Q^{-1}
///   Defective: M = Q [[l, 1], [0, l]] Q^{-1}
///   Scalar:    M = l I                      (Q = I, cond_Q = cond(I) = 2)
struct Spectrum {
  enum class Kind { Distinct, Defective, Scalar };
  Kind kind = Kind::Scalar;
  cdouble lambda1{};
  cdouble lambda2{};
  Mat2 conjugator = Mat2::identity();
  double cond_Q = 2.0;

  bool defective() const { return kind == Kind::Defective; }
};

/// Closed-form eigendecomposition.  Distinct eigenvectors come from the
/// columns of (M - l_other I); the defective conjugator takes w as the unit
/// vector maximizing ||(M - l I) w|| (top right singular vector of the
/// nilpotent part) and v = (M - l I) w, so that M[v w] = [v w] [[l,1],[0,l]].
inline Spectrum eigen_decompose(const Mat2& m, const TolerancePolicy& tol = {}) {
  Spectrum s;
  const auto [l1, l2] = eigenvalues(m);
  const cdouble tr = trace(m);

  if (std::abs(l1 - l2) > tol.eig_split_tol * std::max(1.0, std::abs(tr))) {
    auto eigvec = [&m](cdouble l_other) {
      const Mat2 shifted{m.a - l_other, m.b, m.c, m.d - l_other};
      const double n0 = std::norm(shifted.a) + std::norm(shifted.c);
      const double n1 = std::norm(shifted.b) + std::norm(shifted.d);
      cdouble vx, vy;
      if (n0 >= n1) {
        vx = shifted.a;
        vy = shifted.c;
      } else {
        vx = shifted.b;
        vy = shifted.d;
      }
      const double n = std::sqrt(std::norm(vx) + std::norm(vy));
      return std::pair<cdouble, cdouble>{vx / n, vy / n};
    };
    const auto [v1x, v1y] = eigvec(l2);
    const auto [v2x, v2y] = eigvec(l1);
    s.kind = Spectrum::Kind::Distinct;
    s.lambda1 = l1;
    s.lambda2 = l2;
    s.conjugator = {v1x, v2x, v1y, v2y};
    s.cond_Q = condition_number(s.conjugator);
    return s;
  }

  const cdouble l = 0.5 * tr;
  const Mat2 nil{m.a - l, m.b, m.c, m.d - l};
  if (frobenius_norm(nil) <= tol.scalar_tol * std::max(1.0, frobenius_norm(m))) {
    s.kind = Spectrum::Kind::Scalar;
    s.lambda1 = s.lambda2 = l;
    return s;
  }

  // Top right singular vector w of the nilpotent part via N^H N.
  const double h11 = std::norm(nil.a) + std::norm(nil.c);
  const double h22 = std::norm(nil.b) + std::norm(nil.d);
  const cdouble h12 = std::conj(nil.a) * nil.b + std::conj(nil.c) * nil.d;
  cdouble wx, wy;
  if (std::abs(h12) <= 1e-30 * (h11 + h22)) {
    wx = (h11 >= h22) ? 1.0 : 0.0;
    wy = (h11 >= h22) ? 0.0 : 1.0;
  } else {
    const double sigma2 =
        0.5 * (h11 + h22 + std::sqrt((h11 - h22) * (h11 - h22) + 4.0 * std::norm(h12)));
    wx = h12;
    wy = sigma2 - h11;
    const double n = std::sqrt(std::norm(wx) + std::norm(wy));
    wx /= n;
    wy /= n;
  }
  const cdouble vx = nil.a * wx + nil.b * wy;
  const cdouble vy = nil.c * wx + nil.d * wy;
  s.kind = Spectrum::Kind::Defective;
  s.lambda1 = s.lambda2 = l;
  s.conjugator = {vx, wx, vy, wy};
  s.cond_Q = condition_number(s.conjugator);
  return s;
}

/// Rebuilds the matrix from its spectrum (testing aid; inverse of
/// eigen_decompose up to conditioning).
inline Mat2 reconstruct(const Spectrum& s) {
  switch (s.kind) {
    case Spectrum::Kind::Scalar:
      return s.lambda1 * Mat2::identity();
    case Spectrum::Kind::Distinct:
      return conjugate(s.conjugator, Mat2::diagonal(s.lambda1, s.lambda2));
    case Spectrum::Kind::Defective:
    default:
      return conjugate(s.conjugator, Mat2::jordan(s.lambda1));
  }
}

}  // namespace matjul
