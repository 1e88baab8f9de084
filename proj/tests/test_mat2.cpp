#include <catch2/catch_amalgamated.hpp>

#include "matjul/mat2.hpp"
#include "matjul/spectrum.hpp"
#include "matjul/verify.hpp"

using namespace matjul;
using Catch::Approx;

TEST_CASE("ring operations") {
  const Mat2 I = Mat2::identity();
  CHECK(frobenius_norm(I * I - I) == 0.0);
  const Mat2 nil{0, 1, 0, 0};
  CHECK(frobenius_norm(nil * nil) == 0.0);
  const Mat2 uni{1, 1, 0, 1};
  const Mat2 sq = uni * uni;
  CHECK(std::abs(sq.b - 2.0) < 1e-15);
  CHECK(std::abs(sq.a - 1.0) < 1e-15);
}

TEST_CASE("norms and spectral radius") {
  CHECK(frobenius_norm(Mat2::identity()) == Approx(std::sqrt(2.0)));
  CHECK(frobenius_norm(Mat2::diagonal(3.0, 4.0)) == Approx(5.0));
  CHECK(frobenius_norm(Mat2{0, 1, 1, 0}) == Approx(std::sqrt(2.0)));

  CHECK(spectral_radius(Mat2{0, 1, -1, 0}) == Approx(1.0));          // eigenvalues +-i
  CHECK(spectral_radius(Mat2{2, 100, 0, 0.5}) == Approx(2.0));       // triangular
  CHECK(spectral_radius(Mat2{2, 1, 1, 2}) == Approx(3.0));           // lambda^2-4lambda+3
}

TEST_CASE("conjugation") {
  const Mat2 m{0.3, -1.2, 0.8, 2.0};
  CHECK(frobenius_norm(conjugate(Mat2::identity(), m) - m) < 1e-15);

  const Mat2 q{1, 1, 0, 1};
  const Mat2 expected{1, 1, 0, 2};  // direct multiply oracle
  CHECK(frobenius_norm(conjugate(q, Mat2::diagonal(1.0, 2.0)) - expected) < 1e-15);

  // round trip within cond-scaled tolerance
  const Mat2 q2{2, 1, -1, 3};
  const double cond = condition_number(q2);
  const Mat2 round = conjugate(q2, conjugate(inverse(q2), m));
  CHECK(frobenius_norm(round - m) <= 1e-12 * cond * cond * frobenius_norm(m));

  CHECK_THROWS_AS(conjugate(Mat2{1, 1, 1, 1}, m), std::domain_error);
}

TEST_CASE("condition number fixtures") {
  CHECK(condition_number(Mat2::identity()) == Approx(2.0));
  CHECK(condition_number(Mat2::diagonal(10.0, 0.1)) == Approx(100.01));
  const double th = 0.7;
  const Mat2 rot{std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
  CHECK(condition_number(rot) == Approx(2.0));
}

TEST_CASE("eigen decomposition fixtures") {
  SECTION("scalar matrix") {
    const Spectrum s = eigen_decompose(2.0 * Mat2::identity());
    CHECK(s.kind == Spectrum::Kind::Scalar);
    CHECK(std::abs(s.lambda1 - 2.0) < 1e-15);
  }
  SECTION("Jordan block stays a Jordan block") {
    const Spectrum s = eigen_decompose(Mat2::jordan(1.0));
    REQUIRE(s.kind == Spectrum::Kind::Defective);
    CHECK(std::abs(s.lambda1 - 1.0) < 1e-12);
    const Mat2 rebuilt = reconstruct(s);
    CHECK(frobenius_norm(rebuilt - Mat2::jordan(1.0)) < 1e-12 * s.cond_Q);
  }
  SECTION("symmetric distinct pair") {
    const Mat2 m{2, 1, 1, 2};
    const Spectrum s = eigen_decompose(m);
    REQUIRE(s.kind == Spectrum::Kind::Distinct);
    CHECK(std::abs(s.lambda1 - 3.0) < 1e-12);
    CHECK(std::abs(s.lambda2 - 1.0) < 1e-12);
    CHECK(frobenius_norm(reconstruct(s) - m) <= 1e-12 * s.cond_Q);
  }
}

TEST_CASE("eigen reconstruction property") {
  for (int i = 0; i < 2000; ++i) {
    verify::Rng rng = verify::rng_for(7, 101, i);
    const Mat2 m = verify::random_matrix(rng, 3.0);
    const Spectrum s = eigen_decompose(m);
    const double err = frobenius_norm(reconstruct(s) - m);
    REQUIRE(err <= 1e-9 * s.cond_Q * std::max(1.0, frobenius_norm(m)));
  }
}

TEST_CASE("det and trace consistency property") {
  for (int i = 0; i < 2000; ++i) {
    verify::Rng rng = verify::rng_for(11, 102, i);
    const Mat2 m = verify::random_matrix(rng, 3.0);
    const auto [l1, l2] = eigenvalues(m);
    REQUIRE(std::abs(l1 * l2 - determinant(m)) <=
            1e-10 * std::max(1.0, std::abs(determinant(m))));
    REQUIRE(std::abs(l1 + l2 - trace(m)) <= 1e-10 * std::max(1.0, std::abs(trace(m))));
    REQUIRE(frobenius_norm(m) >= spectral_radius(m) - 1e-12);
  }
}
