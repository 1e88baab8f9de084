#pragma once

#include <stdexcept>

#include "matjul/mat2.hpp"

namespace matjul {

/// Rectangle in the two real slice parameters (s, t), mapped over a pixel
/// grid by pixel centers; row 0 is the top of the image (largest t).
struct Window {
  double center_s = 0.0;
  double center_t = 0.0;
  double width = 4.0;
  double height = 4.0;
};

/// A two-real-parameter probe of matrix space.
///   EigenPlane:  M = Q diag(lambda_fixed, s+ti) Q^{-1}   (vary = 2)
///                M = Q diag(s+ti, lambda_fixed) Q^{-1}   (vary = 1)
///   JordanPlane: M = Q [[s+ti, 1], [0, s+ti]] Q^{-1}
///   Affine:      M = M0 + s V1 + t V2
struct SliceSpec {
  enum class Mode { EigenPlane, JordanPlane, Affine };
  Mode mode = Mode::EigenPlane;
  cdouble lambda_fixed{};
  int vary = 2;
  Mat2 conjugator = Mat2::identity();
  Mat2 origin = Mat2::zero();
  Mat2 basis1 = Mat2::identity();
  Mat2 basis2 = Mat2::identity();
  Window window{};
  int nx = 64;
  int ny = 64;

  void validate() const {
    if (nx < 1 || ny < 1) throw std::invalid_argument("SliceSpec: resolution must be >= 1x1");
    if (window.width <= 0.0 || window.height <= 0.0)
      throw std::invalid_argument("SliceSpec: window must have positive extent");
    if (mode != Mode::Affine && std::abs(determinant(conjugator)) == 0.0)
      throw std::invalid_argument("SliceSpec: conjugator must be invertible");
    if (mode == Mode::EigenPlane && vary != 1 && vary != 2)
      throw std::invalid_argument("SliceSpec: vary must be 1 or 2");
  }
};

/// Pixel (i, j) -> slice parameters at the pixel center.
inline cdouble pixel_to_parameter(const SliceSpec& slice, int i, int j) {
  const double s = slice.window.center_s - 0.5 * slice.window.width +
                   (i + 0.5) * slice.window.width / slice.nx;
  const double t = slice.window.center_t + 0.5 * slice.window.height -
                   (j + 0.5) * slice.window.height / slice.ny;
  return {s, t};
}

/// Inverse of pixel_to_parameter on pixel centers (testing aid).
inline std::pair<double, double> parameter_to_pixel(const SliceSpec& slice, cdouble st) {
  const double i = (st.real() - slice.window.center_s + 0.5 * slice.window.width) *
                       slice.nx / slice.window.width - 0.5;
  const double j = (slice.window.center_t + 0.5 * slice.window.height - st.imag()) *
                       slice.ny / slice.window.height - 0.5;
  return {i, j};
}

inline Mat2 pixel_to_matrix(const SliceSpec& slice, int i, int j) {
  if (i < 0 || i >= slice.nx || j < 0 || j >= slice.ny)
    throw std::out_of_range("pixel_to_matrix: pixel outside resolution");
  const cdouble st = pixel_to_parameter(slice, i, j);
  switch (slice.mode) {
    case SliceSpec::Mode::EigenPlane: {
      const Mat2 diag = slice.vary == 2 ? Mat2::diagonal(slice.lambda_fixed, st)
                                        : Mat2::diagonal(st, slice.lambda_fixed);
      return conjugate(slice.conjugator, diag);
    }
    case SliceSpec::Mode::JordanPlane:
      return conjugate(slice.conjugator, Mat2::jordan(st));
    case SliceSpec::Mode::Affine:
    default:
      return slice.origin + st.real() * slice.basis1 + st.imag() * slice.basis2;
  }
}

}  // namespace matjul
