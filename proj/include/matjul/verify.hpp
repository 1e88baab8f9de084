#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "matjul/boettcher.hpp"
#include "matjul/classification.hpp"
#include "matjul/green_boettcher.hpp"
#include "matjul/matrix_polynomial.hpp"
#include "matjul/render.hpp"
#include "matjul/scalar_dynamics.hpp"
#include "matjul/slice.hpp"

namespace matjul::verify {

struct PropertyResult {
  std::string name;
  int samples = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<PropertyResult> rows;
  std::uint64_t seed = 0;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Deterministic sampling: SplitMix64 streams keyed by (seed, stream, index),
// so results do not depend on worker count or the platform's distributions.

struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
  cdouble complex_box(double half_width) {
    const double re = uniform(-half_width, half_width);
    const double im = uniform(-half_width, half_width);
    return {re, im};
  }
  cdouble annulus(double r_lo, double r_hi) {
    const double r = uniform(r_lo, r_hi);
    const double th = uniform(0.0, 6.283185307179586);
    return {r * std::cos(th), r * std::sin(th)};
  }
};

inline Rng rng_for(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  Rng r{seed ^ (stream * 0xA0761D6478BD642Full) ^ (index * 0xE7037ED1A0B428DBull)};
  r.next();
  r.next();
  return r;
}

inline Mat2 random_matrix(Rng& rng, double half_width) {
  return {rng.complex_box(half_width), rng.complex_box(half_width),
          rng.complex_box(half_width), rng.complex_box(half_width)};
}

/// Well-conditioned random conjugator: unitary * diag(s, 1/s) * unitary has
/// |det| = 1 and Frobenius condition number s^2 + s^{-2}.
inline Mat2 random_conjugator(Rng& rng, double max_cond) {
  auto unitary = [&rng]() {
    const double th = rng.uniform(0.0, 6.283185307179586);
    const double ph = rng.uniform(0.0, 6.283185307179586);
    const cdouble e{std::cos(ph), std::sin(ph)};
    return Mat2{std::cos(th), -std::sin(th) * std::conj(e),
                std::sin(th) * e, std::cos(th)};
  };
  const double s2 = rng.uniform(1.0, std::max(1.0, max_cond - 1.0));
  const double s = std::sqrt(s2);
  return unitary() * Mat2::diagonal(s, 1.0 / s) * unitary();
}

inline std::vector<Polynomial> fixture_polynomials() {
  return {Polynomial({{0, 0}, {0, 0}, {1, 0}}),            // z^2
          Polynomial({{-1, 0}, {0, 0}, {1, 0}}),           // z^2 - 1
          Polynomial({{-2, 0}, {0, 0}, {1, 0}}),           // z^2 - 2
          Polynomial({{0, 0.25}, {0, 0}, {1, 0}})};        // z^2 + 0.25i
}

/// Max of fn(i) over i in [0, count), striped over workers; max is
/// order-independent so the result does not depend on the partition.
inline double parallel_max(int count, int jobs,
                           const std::function<double(int)>& fn) {
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    double m = 0.0;
    for (int i = 0; i < count; ++i) m = std::max(m, fn(i));
    return m;
  }
  std::vector<double> partial(workers, 0.0);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      double m = 0.0;
      for (int i = w; i < count; i += workers) m = std::max(m, fn(i));
      partial[w] = m;
    });
  for (auto& t : pool) t.join();
  double m = 0.0;
  for (double v : partial) m = std::max(m, v);
  return m;
}

namespace detail {

struct Ctx {
  std::uint64_t seed;
  int count;
  int jobs;
};

inline PropertyResult row(const std::string& name, int samples, double max_violation,
                          double tolerance) {
  return {name, samples, max_violation, tolerance, max_violation <= tolerance};
}

// --- scalar dynamics -------------------------------------------------------

inline PropertyResult prop_boettcher_functional_eq(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 1, i);
    const auto& p = polys[i % polys.size()];
    const double R = p.escape_radius();
    const cdouble z = rng.annulus(R * 1.0001, 10.0 * R);
    const cdouble lhs = boettcher_scalar(p, p(z));
    const cdouble rhs = std::pow(boettcher_scalar(p, z), double(p.degree()));
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
  });
  return row("boettcher-functional-eq", n, mv, 1e-9);
}

inline PropertyResult prop_green_consistency(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 2, i);
    const auto& p = polys[i % polys.size()];
    const double R = p.escape_radius();
    const cdouble z = rng.annulus(R * 1.0001, 10.0 * R);
    const double lhs = std::log(std::abs(boettcher_scalar(p, z)));
    return std::abs(lhs - green_scalar(p, z, 1000).value);
  });
  return row("green-consistency", n, mv, 1e-9);
}

inline PropertyResult prop_green_functional_scalar(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 3, i);
    const auto& p = polys[i % polys.size()];
    const int d = p.degree();
    const cdouble z = rng.complex_box(2.5);
    const GreenEstimate gz = green_scalar(p, z, 1000);
    const GreenEstimate gpz = green_scalar(p, p(z), 1000);
    const double bounds = gpz.error_bound + d * gz.error_bound;
    return std::max(0.0, std::abs(gpz.value - d * gz.value) - bounds);
  });
  return row("green-functional-eq-scalar", n, mv, 1e-9);
}

inline PropertyResult prop_derivative_growth(const Ctx&) {
  const auto polys = fixture_polynomials();
  const std::vector<cdouble> points[] = {
      {{2.0, 0.0}, {3.0, 0.0}},          // z^2
      {{2.0, 0.0}, {-1.8, 0.4}},         // z^2 - 1
      {{3.0, 0.0}, {2.5, 0.5}},          // z^2 - 2
      {{2.0, 0.3}, {-2.2, 0.1}}};        // z^2 + 0.25i
  double mv = 0.0;
  int samples = 0;
  for (std::size_t pi = 0; pi < polys.size(); ++pi)
    for (cdouble z : points[pi]) {
      const double g = green_scalar(polys[pi], z, 1000).value;
      mv = std::max(mv, std::abs(derivative_growth(polys[pi], z, 25) - g));
      ++samples;
    }
  return row("derivative-growth-identity", samples, mv, 1e-4);
}

inline PropertyResult prop_laurent_agreement(const Ctx& c) {
  // at |z| = 1e4 the double-precision product oracle resolves the tail only
  // down to order 1; deeper orders are covered by unit tests at |z| = 30
  auto polys = fixture_polynomials();
  polys.push_back(Polynomial({{0.1, 0}, {0.3, 0}, {1, 0}}));  // odd terms: b_0 != 0
  const int order = 1;
  const double modulus = 1e4;
  const int n = std::max(64, c.count / 4);
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 5, i);
    const auto& p = polys[i % polys.size()];
    const auto coeffs = laurent_coefficients(p, order);
    const cdouble z = rng.annulus(modulus, modulus);
    return std::abs(evaluate_laurent(coeffs, z) - boettcher_scalar(p, z));
  });
  return row("laurent-series-agreement", n, mv, 10.0 * std::pow(modulus, -(order + 1)));
}

inline PropertyResult prop_censoring_soundness(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 6, i);
    const auto& p = polys[i % polys.size()];
    const cdouble z = rng.complex_box(3.0);
    const auto st = orbit_classify(p, z, 1000, p.escape_radius());
    if (!st.escaped) return 0.0;
    return green_scalar(p, z, 1000).value > 0.0 ? 0.0 : 1.0;
  });
  return row("censoring-soundness", n, mv, 0.0);
}

// --- matrix core -----------------------------------------------------------

inline PropertyResult prop_eigen_reconstruction(const Ctx& c) {
  const int n = 10 * c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 7, i);
    const Mat2 m = random_matrix(rng, 3.0);
    const Spectrum s = eigen_decompose(m);
    const double err = frobenius_norm(reconstruct(s) - m);
    return err / (s.cond_Q * std::max(1.0, frobenius_norm(m)));
  });
  return row("eigen-reconstruction", n, mv, 1e-9);
}

inline PropertyResult prop_rho_similarity(const Ctx& c) {
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 8, i);
    Mat2 m = random_matrix(rng, 2.0);
    // condition on a solid eigenvalue split; defective perturbation theory
    // is a different (sqrt-order) regime
    for (int tries = 0; tries < 100; ++tries) {
      const auto [l1, l2] = eigenvalues(m);
      if (std::abs(l1 - l2) > 1e-2 * std::max(1.0, std::abs(trace(m)))) break;
      m = random_matrix(rng, 2.0);
    }
    const Mat2 q = random_conjugator(rng, 100.0);
    const double lhs = spectral_radius(conjugate(q, m));
    const double rhs = spectral_radius(m);
    return std::abs(lhs - rhs) / (condition_number(q) * std::max(1.0, rhs));
  });
  return row("spectral-radius-similarity", n, mv, 1e-9);
}

inline PropertyResult prop_norm_dominates_rho(const Ctx& c) {
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 9, i);
    const Mat2 m = random_matrix(rng, 3.0);
    return spectral_radius(m) - frobenius_norm(m);
  });
  return row("norm-dominates-spectral-radius", n, mv, 1e-12);
}

inline PropertyResult prop_det_trace(const Ctx& c) {
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 10, i);
    const Mat2 m = random_matrix(rng, 3.0);
    const auto [l1, l2] = eigenvalues(m);
    const double e1 = std::abs(l1 * l2 - determinant(m)) / std::max(1.0, std::abs(determinant(m)));
    const double e2 = std::abs(l1 + l2 - trace(m)) / std::max(1.0, std::abs(trace(m)));
    return std::max(e1, e2);
  });
  return row("det-trace-consistency", n, mv, 1e-10);
}

// --- matrix polynomial -----------------------------------------------------

/// Spectrum-built sample with controlled conditioning and slow enough
/// eigenvalues that 12 iterations cannot overflow.
inline Mat2 bounded_sample(Rng& rng, double max_cond, Spectrum::Kind kind) {
  const Mat2 q = random_conjugator(rng, max_cond);
  switch (kind) {
    case Spectrum::Kind::Scalar:
      return rng.annulus(0.0, 1.05) * Mat2::identity();
    case Spectrum::Kind::Defective:
      return conjugate(q, Mat2::jordan(rng.annulus(0.0, 1.05)));
    case Spectrum::Kind::Distinct:
    default:
      return conjugate(q, Mat2::diagonal(rng.annulus(0.0, 1.05), rng.annulus(0.0, 1.05)));
  }
}

inline PropertyResult prop_lift_direct(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = 10 * c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 11, i);
    const auto& p = polys[i % polys.size()];
    const auto kind = i % 7 == 0   ? Spectrum::Kind::Scalar
                      : i % 3 == 0 ? Spectrum::Kind::Defective
                                   : Spectrum::Kind::Distinct;
    const Mat2 m = bounded_sample(rng, 1e3, kind);
    const int steps = static_cast<int>(rng.uniform(0.0, 12.999));
    const MatrixOrbit orbit = iterate_P(p, m, steps);
    if (orbit.overflowed_at || !orbit.last().is_finite()) return 0.0;
    const Spectrum s = eigen_decompose(m);
    const Mat2 lifted = lift_iterate(p, s, steps);
    const double err = frobenius_norm(orbit.last() - lifted);
    return err / (s.cond_Q * s.cond_Q * std::max(1.0, frobenius_norm(orbit.last())));
  });
  return row("lift-direct-agreement", n, mv, 1e-6);
}

inline PropertyResult prop_evalP_equivariance(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 12, i);
    const auto& p = polys[i % polys.size()];
    const Mat2 m = random_matrix(rng, 2.0);
    const Mat2 q = random_conjugator(rng, 100.0);
    const Mat2 lhs = eval_P(p, conjugate(q, m));
    const Mat2 rhs = conjugate(q, eval_P(p, m));
    const double cond = condition_number(q);
    return frobenius_norm(lhs - rhs) / (cond * cond * std::max(1.0, frobenius_norm(rhs)));
  });
  return row("evalP-conjugacy-equivariance", n, mv, 1e-9);
}

inline PropertyResult prop_semigroup(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 13, i);
    const auto& p = polys[i % polys.size()];
    const Mat2 m = bounded_sample(rng, 1e2, Spectrum::Kind::Distinct);
    const int a = static_cast<int>(rng.uniform(0.0, 6.999));
    const int b = static_cast<int>(rng.uniform(0.0, 6.999));
    const MatrixOrbit whole = iterate_P(p, m, a + b);
    if (whole.overflowed_at) return 0.0;
    const Mat2 chained = iterate_P(p, iterate_P(p, m, b).last(), a).last();
    return frobenius_norm(whole.last() - chained) /
           std::max(1.0, frobenius_norm(whole.last()));
  });
  return row("iterate-semigroup", n, mv, 1e-9);
}

// --- classification --------------------------------------------------------

inline std::vector<std::pair<Polynomial, Mat2>> classification_fixtures() {
  const Polynomial z2({{0, 0}, {0, 0}, {1, 0}});
  const Polynomial parabolic({{0, 0}, {1, 0}, {1, 0}});  // z + z^2
  return {{z2, Mat2::diagonal(0.5, 1.0)},
          {z2, Mat2{0.0, 1.0, -1.0, 0.0}},
          {z2, Mat2::jordan(1.0)},
          {z2, Mat2::diagonal(0.5, 0.3)},
          {z2, Mat2::diagonal(0.5, 2.0)},
          {parabolic, Mat2{0.0, 1.0, 0.0, 0.0}}};
}

inline PropertyResult prop_verdict_conjugation(const Ctx& c) {
  const auto fixtures = classification_fixtures();
  const int per = std::max(1, c.count / 10);
  const int n = static_cast<int>(fixtures.size()) * per;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 14, i);
    const auto& [p, m] = fixtures[i % fixtures.size()];
    const Mat2 q = random_conjugator(rng, 100.0);
    const MatrixClass base = classify_matrix(p, m);
    const MatrixClass conj = classify_matrix(p, conjugate(q, m));
    if (base.tag == MatrixClass::Tag::Unresolved ||
        conj.tag == MatrixClass::Tag::Unresolved)
      return 0.0;
    return base.tag == conj.tag ? 0.0 : 1.0;
  });
  return row("verdict-conjugation-invariance", n, mv, 0.0);
}

inline PropertyResult prop_green_conjugation(const Ctx& c) {
  const auto fixtures = classification_fixtures();
  const int per = std::max(1, c.count / 10);
  const int n = static_cast<int>(fixtures.size()) * per;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 15, i);
    const auto& [p, m] = fixtures[i % fixtures.size()];
    const Mat2 q = random_conjugator(rng, 100.0);
    const double cond = condition_number(q);
    const double base = green_matrix(p, m).value;
    const double conj = green_matrix(p, conjugate(q, m)).value;
    return std::abs(base - conj) / (cond * cond);
  });
  return row("green-conjugation-invariance", n, mv, 1e-6);
}

inline PropertyResult prop_complete_invariance(const Ctx&) {
  const auto fixtures = classification_fixtures();
  double mv = 0.0;
  auto is_julia = [](MatrixClass::Tag t) {
    return t == MatrixClass::Tag::Julia1 || t == MatrixClass::Tag::Julia2;
  };
  for (const auto& [p, m] : fixtures) {
    const auto before = classify_matrix(p, m).tag;
    const auto after = classify_matrix(p, eval_P(p, m)).tag;
    const bool esc_iff = (before == MatrixClass::Tag::FatouEscaping) ==
                         (after == MatrixClass::Tag::FatouEscaping);
    const bool julia_maps = !is_julia(before) || is_julia(after);
    if (!(esc_iff && julia_maps)) mv = 1.0;
  }
  return row("complete-invariance", static_cast<int>(fixtures.size()), mv, 0.0);
}

inline PropertyResult prop_defective_periodic(const Ctx&) {
  const Polynomial parabolic({{0, 0}, {1, 0}, {1, 0}});      // z + z^2, fixed Jordan at 0
  const Polynomial quarter({{0.25, 0}, {0, 0}, {1, 0}});     // z^2 + 1/4, parabolic at 1/2
  std::vector<std::pair<Polynomial, Mat2>> fixtures = {
      {parabolic, Mat2{0.0, 1.0, 0.0, 0.0}},
      {parabolic, Mat2::jordan(0.0)},
      {quarter, Mat2::jordan(0.5)}};
  double mv = 0.0;
  for (const auto& [p, m] : fixtures) {
    const auto period = periodic_check(p, m, 16);
    const MatrixClass mc = classify_matrix(p, m);
    if (!period || !mc.defective) {
      mv = 1.0;
      continue;
    }
    if (mc.tag != MatrixClass::Tag::Julia2) mv = 1.0;
  }
  return row("defective-periodic-julia2", static_cast<int>(fixtures.size()), mv, 0.0);
}

inline PropertyResult prop_z2_dichotomy(const Ctx& c) {
  const Polynomial z2({{0, 0}, {0, 0}, {1, 0}});
  const double band = 1e-3;
  const int n = 10 * c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 18, i);
    const Mat2 m = random_matrix(rng, 3.0);
    const auto [l1, l2] = eigenvalues(m);
    const double a1 = std::abs(l1), a2 = std::abs(l2);
    const double rho = std::max(a1, a2);
    const auto tag = classify_matrix(z2, m).tag;
    if (a1 < 1.0 - band && a2 < 1.0 - band)
      return tag == MatrixClass::Tag::FatouBounded ? 0.0 : 1.0;
    if (rho > 1.0 + band) return tag == MatrixClass::Tag::FatouEscaping ? 0.0 : 1.0;
    return 0.0;  // inside the band: no claim
  });
  return row("z2-dichotomy", n, mv, 0.0);
}

inline PropertyResult prop_commuting_julia(const Ctx& c) {
  const Polynomial z2({{0, 0}, {0, 0}, {1, 0}});
  const Polynomial z4({{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}});
  SliceSpec slice;
  slice.mode = SliceSpec::Mode::EigenPlane;
  slice.lambda_fixed = {0.5, 0.0};
  slice.nx = slice.ny = 200;
  slice.window = {0.0, 0.0, 4.0, 4.0};
  auto is_julia = [](MatrixClass::Tag t) {
    return t == MatrixClass::Tag::Julia1 || t == MatrixClass::Tag::Julia2;
  };
  const int n = slice.nx * slice.ny;
  double mv = parallel_max(n, c.jobs, [&](int k) {
    const int i = k % slice.nx, j = k / slice.nx;
    const cdouble st = pixel_to_parameter(slice, i, j);
    if (std::abs(std::abs(st) - 1.0) <= 1e-3) return 0.0;  // ambiguity band
    const Mat2 m = pixel_to_matrix(slice, i, j);
    return is_julia(classify_matrix(z2, m).tag) == is_julia(classify_matrix(z4, m).tag)
               ? 0.0
               : 1.0;
  });
  return row("commuting-julia-agreement", n, mv, 0.0);
}

// --- green / boettcher -----------------------------------------------------

inline PropertyResult prop_green_route_agreement(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 20, i);
    const auto& p = polys[i % polys.size()];
    const Mat2 m = random_matrix(rng, 2.5);
    const MatrixGreen gd = green_direct(p, m, 20);
    const MatrixGreen gm = green_matrix(p, m);
    return std::max(0.0, std::abs(gd.value - gm.value) - (gd.error_bound + gm.error_bound));
  });
  return row("green-route-agreement", n, mv, 0.0);
}

inline PropertyResult prop_green_functional_matrix(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 21, i);
    const auto& p = polys[i % polys.size()];
    const Mat2 m = random_matrix(rng, 2.5);
    const MatrixGreen g = green_matrix(p, m);
    const MatrixGreen gp = green_matrix(p, eval_P(p, m));
    const double bounds = gp.error_bound + p.degree() * g.error_bound;
    return std::max(0.0, std::abs(gp.value - p.degree() * g.value) - bounds);
  });
  return row("green-functional-eq", n, mv, 1e-6);
}

inline PropertyResult prop_log_growth_z2(const Ctx& c) {
  const Polynomial z2({{0, 0}, {0, 0}, {1, 0}});
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 22, i);
    const Mat2 m = random_matrix(rng, 3.0);
    const double rho = spectral_radius(m);
    if (rho <= 1.0) return 0.0;
    return std::abs(green_matrix(z2, m).value - std::log(rho));
  });
  return row("log-growth-z2", n, mv, 1e-9);
}

/// Empirical bound B_p for |G - log rho| beyond the escape radius, computed
/// once from the scalar oracle: max over sampled circles of |G_p - log|z||
/// plus the max of G_p on the radius-R circle (the slack from the max over
/// a mixed spectrum).
inline double log_growth_constant(const Polynomial& p) {
  const double R = p.escape_radius();
  double drift = 0.0, rim = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    const double r = R * std::pow(1e6 / R, k / 2000.0);
    const double th = 6.283185307179586 * (k % 64) / 64.0;
    const cdouble z{r * std::cos(th), r * std::sin(th)};
    drift = std::max(drift, std::abs(green_scalar(p, z, 2000).value - std::log(r)));
  }
  for (int k = 0; k < 256; ++k) {
    const double th = 6.283185307179586 * k / 256.0;
    const cdouble z{(R + 1e-9) * std::cos(th), (R + 1e-9) * std::sin(th)};
    rim = std::max(rim, green_scalar(p, z, 2000).value);
  }
  return drift + rim + 1e-9;
}

inline PropertyResult prop_log_growth_chebyshev(const Ctx& c) {
  const Polynomial cheb({{-2, 0}, {0, 0}, {1, 0}});
  const double bound = log_growth_constant(cheb);
  const double R = cheb.escape_radius();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 23, i);
    const Mat2 q = random_conjugator(rng, 30.0);
    const Mat2 m = conjugate(
        q, Mat2::diagonal(rng.annulus(R * 1.001, 1e6), rng.complex_box(2.0)));
    const double rho = spectral_radius(m);
    if (!(rho > R && rho < 1e6)) return 0.0;
    return std::max(0.0, std::abs(green_matrix(cheb, m).value - std::log(rho)) - bound);
  });
  return row("log-growth-chebyshev", n, mv, 0.0);
}

inline PropertyResult prop_vanishing_on_kbar(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 24, i);
    const std::size_t pi = i % polys.size();
    const auto& p = polys[pi];
    Mat2 m;
    if (pi == 2) {
      // z^2 - 2: the filled Julia set is the segment [-2, 2] with empty
      // interior, so sample exactly on it (real arithmetic keeps the orbit
      // on the segment); conjugation would push the eigenvalues off K
      m = Mat2::diagonal(rng.uniform(-1.8, 1.8), rng.uniform(-1.8, 1.8));
    } else {
      const Mat2 q = random_conjugator(rng, 50.0);
      m = conjugate(q, Mat2::diagonal(rng.annulus(0.0, 0.15), rng.annulus(0.0, 0.15)));
    }
    if (in_closure_KP(p, m) != Ternary::Yes) return 1.0;
    return green_matrix(p, m).value;
  });
  return row("green-vanishing-on-closure", n, mv, 0.0);
}

inline Mat2 omega_sample(Rng& rng, const Polynomial& p, double max_cond) {
  const double R = p.escape_radius();
  const Mat2 q = random_conjugator(rng, max_cond);
  return conjugate(q, Mat2::diagonal(rng.annulus(R * 1.05, R * 3.0),
                                     rng.annulus(R * 1.05, R * 3.0)));
}

inline PropertyResult prop_boettcher_semiconjugacy(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 25, i);
    const auto& p = polys[i % polys.size()];
    const Mat2 m = omega_sample(rng, p, 50.0);
    const Spectrum s = eigen_decompose(m);
    const Mat2 phi = boettcher_matrix(p, m);
    const Mat2 lhs = boettcher_matrix(p, eval_P(p, m));
    const Mat2 rhs = matrix_power(phi, p.degree());
    const double scale = std::max(1.0, std::pow(frobenius_norm(phi), p.degree()));
    return frobenius_norm(lhs - rhs) / (s.cond_Q * s.cond_Q * scale);
  });
  return row("boettcher-semiconjugacy", n, mv, 1e-7);
}

inline PropertyResult prop_green_boettcher_link(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 26, i);
    const auto& p = polys[i % polys.size()];
    const Mat2 m = omega_sample(rng, p, 50.0);
    const double g = green_matrix(p, m).value;
    return std::abs(g - std::log(spectral_radius(boettcher_matrix(p, m))));
  });
  return row("green-boettcher-link", n, mv, 1e-8);
}

inline PropertyResult prop_phi_equivariance(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = c.count;
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 27, i);
    const auto& p = polys[i % polys.size()];
    const double R = p.escape_radius();
    // solid split keeps both routes in the Distinct branch
    const cdouble l1 = rng.annulus(R * 1.1, R * 1.8);
    const cdouble l2 = rng.annulus(R * 2.2, R * 3.0);
    const Mat2 m = conjugate(random_conjugator(rng, 20.0), Mat2::diagonal(l1, l2));
    const Mat2 q = random_conjugator(rng, 20.0);
    const double cond = condition_number(q);
    const Mat2 lhs = boettcher_matrix(p, conjugate(q, m));
    const Mat2 rhs = conjugate(q, boettcher_matrix(p, m));
    return frobenius_norm(lhs - rhs) / (cond * cond * std::max(1.0, frobenius_norm(rhs)));
  });
  return row("phi-conjugacy-equivariance", n, mv, 1e-6);
}

inline PropertyResult prop_harmonic_mean_value(const Ctx& c) {
  const auto polys = fixture_polynomials();
  const int n = std::max(10, c.count / 10);
  double mv = parallel_max(n, c.jobs, [&](int i) {
    Rng rng = rng_for(c.seed, 28, i);
    const auto& p = polys[i % polys.size()];
    const double R = p.escape_radius();
    const Mat2 m0 = conjugate(random_conjugator(rng, 10.0),
                              Mat2::diagonal(rng.annulus(R * 2.0, R * 4.0),
                                             rng.annulus(0.0, 0.3)));
    Mat2 dir = random_matrix(rng, 1.0);
    dir = (1.0 / frobenius_norm(dir)) * dir;
    const double r = 1e-2;
    double avg = 0.0;
    const int K = 64;
    for (int k = 0; k < K; ++k) {
      const double th = 6.283185307179586 * k / K;
      const cdouble zeta{r * std::cos(th), r * std::sin(th)};
      avg += green_matrix(p, m0 + zeta * dir).value;
    }
    avg /= K;
    return std::abs(avg - green_matrix(p, m0).value);
  });
  return row("green-harmonic-mean-value", n, mv, 1e-4);
}

}  // namespace detail

using detail::bounded_sample;
using detail::classification_fixtures;
using detail::log_growth_constant;
using detail::omega_sample;

struct SuiteEntry {
  const char* name;
  PropertyResult (*fn)(const detail::Ctx&);
};

inline const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> reg = {
      {"boettcher-functional-eq", detail::prop_boettcher_functional_eq},
      {"green-consistency", detail::prop_green_consistency},
      {"green-functional-eq-scalar", detail::prop_green_functional_scalar},
      {"derivative-growth-identity", detail::prop_derivative_growth},
      {"laurent-series-agreement", detail::prop_laurent_agreement},
      {"censoring-soundness", detail::prop_censoring_soundness},
      {"eigen-reconstruction", detail::prop_eigen_reconstruction},
      {"spectral-radius-similarity", detail::prop_rho_similarity},
      {"norm-dominates-spectral-radius", detail::prop_norm_dominates_rho},
      {"det-trace-consistency", detail::prop_det_trace},
      {"lift-direct-agreement", detail::prop_lift_direct},
      {"evalP-conjugacy-equivariance", detail::prop_evalP_equivariance},
      {"iterate-semigroup", detail::prop_semigroup},
      {"verdict-conjugation-invariance", detail::prop_verdict_conjugation},
      {"green-conjugation-invariance", detail::prop_green_conjugation},
      {"complete-invariance", detail::prop_complete_invariance},
      {"defective-periodic-julia2", detail::prop_defective_periodic},
      {"z2-dichotomy", detail::prop_z2_dichotomy},
      {"commuting-julia-agreement", detail::prop_commuting_julia},
      {"green-route-agreement", detail::prop_green_route_agreement},
      {"green-functional-eq", detail::prop_green_functional_matrix},
      {"log-growth-z2", detail::prop_log_growth_z2},
      {"log-growth-chebyshev", detail::prop_log_growth_chebyshev},
      {"green-vanishing-on-closure", detail::prop_vanishing_on_kbar},
      {"boettcher-semiconjugacy", detail::prop_boettcher_semiconjugacy},
      {"green-boettcher-link", detail::prop_green_boettcher_link},
      {"phi-conjugacy-equivariance", detail::prop_phi_equivariance},
      {"green-harmonic-mean-value", detail::prop_harmonic_mean_value},
  };
  return reg;
}

/// Runs one named suite, or all of them.  Deterministic in (seed, count),
/// independent of jobs.
inline VerifyReport run_verify(const std::string& suite, std::uint64_t seed, int count,
                               int jobs) {
  detail::Ctx ctx{seed, count, jobs};
  VerifyReport report;
  report.seed = seed;
  bool matched = false;
  for (const auto& entry : suite_registry()) {
    if (suite != "all" && suite != entry.name) continue;
    matched = true;
    report.rows.push_back(entry.fn(ctx));
  }
  if (!matched) throw std::invalid_argument("unknown verify suite: " + suite);
  return report;
}

inline std::string to_csv(const VerifyReport& report) {
  std::string out = "property,samples,max_violation,tolerance,pass\n";
  char buf[160];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.9e,%.9e,%s\n", r.name.c_str(), r.samples,
                  r.max_violation, r.tolerance, r.pass ? "true" : "false");
    out += buf;
  }
  return out;
}

}  // namespace matjul::verify
