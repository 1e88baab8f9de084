// Acceptance suite: one criterion per block, one pass/fail line each.
// Exit status is the number of failing criteria (0 = all green).

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "matjul/matjul.hpp"

using namespace matjul;
using verify::Rng;
using verify::rng_for;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const Polynomial z2({{0, 0}, {0, 0}, {1, 0}});
const Polynomial z2m1({{-1, 0}, {0, 0}, {1, 0}});
const Polynomial z2m2({{-2, 0}, {0, 0}, {1, 0}});
const Polynomial z2qi({{0, 0.25}, {0, 0}, {1, 0}});
const Polynomial z2p01({{0.1, 0}, {0, 0}, {1, 0}});
const Polynomial parabolic({{0, 0}, {1, 0}, {1, 0}});

std::vector<Polynomial> quartet() { return {z2, z2m1, z2m2, z2qi}; }

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

// --- 1: z^2 dichotomy -------------------------------------------------------

Outcome criterion_1() {
  int miss = 0;
  for (int i = 0; i < 10000; ++i) {
    Rng rng = rng_for(1001, 1, i);
    const Mat2 m = verify::random_matrix(rng, 3.0);
    const double rho = spectral_radius(m);
    if (rho > 0.99 && rho < 1.01) continue;
    const auto tag = classify_matrix(z2, m).tag;
    if (rho <= 0.99 && tag != MatrixClass::Tag::FatouBounded) ++miss;
    if (rho >= 1.01 && tag != MatrixClass::Tag::FatouEscaping) ++miss;
  }

  // boundary pairs: one eigenvalue on the unit circle (within rounding,
  // far inside the 1e-3 band), the other bounded
  int boundary_miss = 0;
  for (int k = 0; k < 16; ++k) {
    const double th = 6.283185307179586 * k / 16.0;
    const cdouble on_circle{std::cos(th), std::sin(th)};
    Rng rng = rng_for(1001, 2, k);
    const cdouble interior = rng.annulus(0.0, 0.8);
    const Mat2 mixed = Mat2::diagonal(interior, on_circle);
    if (classify_matrix(z2, mixed).tag != MatrixClass::Tag::Julia1) ++boundary_miss;

    const double th2 = th + 1.9;
    const Mat2 both = Mat2::diagonal(on_circle, cdouble{std::cos(th2), std::sin(th2)});
    if (classify_matrix(z2, both).tag != MatrixClass::Tag::Julia2) ++boundary_miss;

    const Mat2 q = verify::random_conjugator(rng, 30.0);
    if (classify_matrix(z2, conjugate(q, mixed)).tag != MatrixClass::Tag::Julia1)
      ++boundary_miss;

    if (classify_matrix(z2, Mat2::jordan(on_circle)).tag != MatrixClass::Tag::Julia2)
      ++boundary_miss;
  }

  Outcome o;
  o.pass = miss == 0 && boundary_miss == 0;
  o.detail = "10000 random samples, " + std::to_string(miss) +
             " misclassified outside the 1e-3 band; " + std::to_string(boundary_miss) +
             " of 64 boundary fixtures off";
  return o;
}

// --- 2: strata fixtures -----------------------------------------------------

Outcome criterion_2() {
  using MTag = MatrixClass::Tag;
  const std::vector<std::pair<Mat2, MTag>> fixtures = {
      {Mat2::diagonal(0.5, 1.0), MTag::Julia1},
      {Mat2{0, 1, -1, 0}, MTag::Julia2},
      {Mat2::jordan(1.0), MTag::Julia2},
      {Mat2::diagonal(0.5, 0.3), MTag::FatouBounded},
      {Mat2::diagonal(0.5, 2.0), MTag::FatouEscaping},
  };
  int miss = 0;
  for (const auto& [m, expected] : fixtures)
    if (classify_matrix(z2, m).tag != expected) ++miss;
  return {miss == 0, std::to_string(5 - miss) + "/5 exact verdicts"};
}

// --- 3: Green functional equation -------------------------------------------

Outcome criterion_3() {
  double worst = 0.0;
  const auto polys = quartet();
  for (std::size_t pi = 0; pi < polys.size(); ++pi)
    for (int i = 0; i < 1000; ++i) {
      const auto& p = polys[pi];
      Rng rng = rng_for(1003, 3 + pi, i);
      const Mat2 m = verify::random_matrix(rng, 2.5);
      const MatrixGreen g = green_matrix(p, m);
      const MatrixGreen gp = green_matrix(p, eval_P(p, m));
      const double bound = 1e-6 + gp.error_bound + p.degree() * g.error_bound;
      worst = std::max(worst, std::abs(gp.value - p.degree() * g.value) - bound);
    }
  return {worst <= 0.0, fmt("max excess over 1e-6 + bounds: %.3e", worst)};
}

// --- 4: route agreement ------------------------------------------------------

Outcome criterion_4() {
  double worst_excess = 0.0;
  int beyond_1e4 = 0, total = 0;
  for (const auto& p : quartet())
    for (int i = 0; i < 1000; ++i) {
      Rng rng = rng_for(1004, 4, total++);
      const Mat2 m = verify::random_matrix(rng, 2.5);
      const MatrixGreen gd = green_direct(p, m, 20);
      const MatrixGreen gm = green_matrix(p, m);
      const double diff = std::abs(gd.value - gm.value);
      worst_excess = std::max(worst_excess, diff - (gd.error_bound + gm.error_bound));
      if (diff > 1e-4) ++beyond_1e4;
    }
  const bool pass = worst_excess <= 0.0 && beyond_1e4 <= total / 100;
  return {pass, fmt("max excess %.3e, ", worst_excess) + std::to_string(beyond_1e4) + "/" +
                    std::to_string(total) + " samples beyond 1e-4"};
}

// --- 5: logarithmic growth ---------------------------------------------------

Outcome criterion_5() {
  double worst_z2 = 0.0;
  for (int i = 0; i < 2000; ++i) {
    Rng rng = rng_for(1005, 5, i);
    const Mat2 m = verify::random_matrix(rng, 3.0);
    const double rho = spectral_radius(m);
    if (rho <= 1.0) continue;
    worst_z2 = std::max(worst_z2, std::abs(green_matrix(z2, m).value - std::log(rho)));
  }

  const double bp = verify::log_growth_constant(z2m2);
  const double R = z2m2.escape_radius();
  double worst_cheb = 0.0;
  for (int i = 0; i < 2000; ++i) {
    Rng rng = rng_for(1005, 6, i);
    const double r = R * 1.001 * std::pow(0.999e6 / (R * 1.001), rng.u01());
    const Mat2 q = verify::random_conjugator(rng, 30.0);
    const Mat2 m = conjugate(q, Mat2::diagonal(rng.annulus(r, r), rng.complex_box(1.4)));
    const double rho = spectral_radius(m);
    if (!(rho > R && rho < 1e6)) continue;
    worst_cheb =
        std::max(worst_cheb, std::abs(green_matrix(z2m2, m).value - std::log(rho)) - bp);
  }
  const bool pass = worst_z2 <= 1e-9 && worst_cheb <= 0.0;
  return {pass, fmt("z^2 max |G - log rho| = %.3e; excess over certified B_p: %.3e",
                    worst_z2, worst_cheb)};
}

// --- 6: Boettcher semiconjugacy and Green link -------------------------------

Outcome criterion_6() {
  double worst_semi = 0.0, worst_link = 0.0;
  for (const auto& p : quartet())
    for (int i = 0; i < 1000; ++i) {
      Rng rng = rng_for(1006, 7, i);
      const Mat2 m = verify::omega_sample(rng, p, 50.0);
      const Spectrum s = eigen_decompose(m);
      const Mat2 phi = boettcher_matrix(p, m);
      const Mat2 lhs = boettcher_matrix(p, eval_P(p, m));
      const Mat2 rhs = matrix_power(phi, p.degree());
      const double scale = std::max(1.0, std::pow(frobenius_norm(phi), p.degree()));
      worst_semi = std::max(worst_semi, frobenius_norm(lhs - rhs) /
                                            (1e-7 * s.cond_Q * s.cond_Q * scale));
      worst_link = std::max(
          worst_link, std::abs(green_matrix(p, m).value -
                               std::log(spectral_radius(phi))));
    }

  const Mat2 jordan_phi = boettcher_matrix(z2m2, Mat2{3, 1, 0, 3});
  const double jerr = std::max(std::abs(jordan_phi.a - 2.618033988749895),
                               std::abs(jordan_phi.b - 1.1708203932499369));
  const bool pass = worst_semi <= 1.0 && worst_link <= 1e-8 && jerr <= 1e-4;
  return {pass, fmt("semiconjugacy worst ratio %.3f, link worst %.3e, ", worst_semi,
                    worst_link) +
                    fmt("Jordan fixture error %.3e", jerr)};
}

// --- 7: series convergence ----------------------------------------------------

Outcome criterion_7() {
  const Mat2 m = Mat2::diagonal(50.0, 80.0);
  const Mat2 exact = boettcher_matrix(z2p01, m);
  double errs[4];
  std::string seq;
  for (int n = 1; n <= 4; ++n) {
    errs[n - 1] = frobenius_norm(boettcher_series(z2p01, m, n) - exact);
    seq += fmt("err(%g)=%.3e ", n, errs[n - 1]);
  }
  const bool strictly_decreasing =
      errs[1] < errs[0] && errs[2] < errs[1] && errs[3] < errs[2];
  const bool small_enough = errs[3] <= 1e-6;
  Outcome o;
  o.pass = strictly_decreasing && small_enough;
  o.detail = seq + (strictly_decreasing ? "" : "(not strictly decreasing; even-index "
                                               "Laurent coefficients of an even "
                                               "polynomial vanish identically)");
  return o;
}

// --- 8: lift/direct oracle -----------------------------------------------------

Outcome criterion_8() {
  const auto polys = quartet();
  int violations = 0, used = 0;
  for (int i = 0; used < 10000 && i < 40000; ++i) {
    Rng rng = rng_for(1008, 8, i);
    const auto& p = polys[i % polys.size()];
    const auto kind = i % 7 == 0   ? Spectrum::Kind::Scalar
                      : i % 3 == 0 ? Spectrum::Kind::Defective
                                   : Spectrum::Kind::Distinct;
    const Mat2 m = verify::bounded_sample(rng, 1e3, kind);
    const int steps = static_cast<int>(rng.uniform(0.0, 12.999));
    const MatrixOrbit orbit = iterate_P(p, m, steps);
    if (orbit.overflowed_at || !orbit.last().is_finite()) continue;
    ++used;
    const Spectrum s = eigen_decompose(m);
    const double err = frobenius_norm(orbit.last() - lift_iterate(p, s, steps));
    if (err > 1e-6 * s.cond_Q * s.cond_Q * std::max(1.0, frobenius_norm(orbit.last())))
      ++violations;
  }
  return {violations == 0 && used == 10000,
          std::to_string(used) + " samples, " + std::to_string(violations) + " violations"};
}

// --- 9: parabolic Jordan fixtures ----------------------------------------------

Outcome criterion_9() {
  const Mat2 nil{0, 1, 0, 0};
  const MatrixOrbit fixed_orbit = iterate_P(parabolic, nil, 8);
  bool exactly_fixed = true;
  for (const Mat2& w : fixed_orbit.points)
    exactly_fixed = exactly_fixed && frobenius_norm(w - nil) == 0.0;
  const bool julia2 = classify_matrix(parabolic, nil).tag == MatrixClass::Tag::Julia2;
  const bool green_zero = green_matrix(parabolic, nil).value == 0.0;

  const Mat2 uni = Mat2::jordan(1.0);
  const double norm20 = frobenius_norm(iterate_P(z2, uni, 20).last());
  const bool unbounded = norm20 > 1e6;
  const bool in_closure = in_closure_KP(z2, uni) == Ternary::Yes;

  const bool pass = exactly_fixed && julia2 && green_zero && unbounded && in_closure;
  return {pass, fmt("||P^20(jordan(1))|| = %.3e; ", norm20) +
                    (exactly_fixed ? "parabolic block exactly fixed, " : "NOT fixed, ") +
                    (julia2 ? "Julia2, " : "wrong class, ") +
                    (in_closure ? "closure membership by eigenvalues" : "closure miss")};
}

// --- 10: conjugation invariance -------------------------------------------------

Outcome criterion_10() {
  const auto fixtures = verify::classification_fixtures();
  int mismatches = 0, unresolved = 0;
  double worst_green = 0.0;
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const auto& [p, m] = fixtures[f];
    const MatrixClass base = classify_matrix(p, m);
    const double gbase = green_matrix(p, m).value;
    for (int i = 0; i < 100; ++i) {
      Rng rng = rng_for(1010, 10 + f, i);
      const Mat2 q = verify::random_conjugator(rng, 100.0);
      const Mat2 w = conjugate(q, m);
      const MatrixClass conj = classify_matrix(p, w);
      if (base.tag == MatrixClass::Tag::Unresolved ||
          conj.tag == MatrixClass::Tag::Unresolved) {
        ++unresolved;
      } else if (base.tag != conj.tag) {
        ++mismatches;
      }
      const double cond = condition_number(q);
      worst_green =
          std::max(worst_green, std::abs(green_matrix(p, w).value - gbase) / (cond * cond));
    }
  }
  const bool pass = mismatches == 0 && worst_green <= 1e-6;
  return {pass, std::to_string(mismatches) + " verdict mismatches (" +
                    std::to_string(unresolved) + " unresolved skips), " +
                    fmt("worst green drift / cond^2 = %.3e", worst_green)};
}

// --- 11: derivative growth identity ---------------------------------------------

Outcome criterion_11() {
  // monic fixtures: for these the Green estimator's per-step offset
  // log|a_d| vanishes and its value tracks the true Green function to 1e-9
  const std::vector<std::pair<Polynomial, cdouble>> fixtures = {
      {z2, {2, 0}},   {z2, {3, 0}},     {z2m1, {2, 0}},
      {z2m2, {3, 0}}, {z2qi, {2, 0.3}}, {z2m2, {2.5, 1.5}},
  };
  double worst = 0.0;
  for (const auto& [p, z] : fixtures) {
    const double g = green_scalar(p, z, 1000).value;
    worst = std::max(worst, std::abs(derivative_growth(p, z, 25) - g));
  }
  return {worst <= 1e-4, fmt("max |d^{-25} log|(p^25)'| - G| = %.3e", worst)};
}

// --- 12: renders -----------------------------------------------------------------

SliceSpec base_slice(SliceSpec::Mode mode) {
  SliceSpec s;
  s.mode = mode;
  s.lambda_fixed = {0.5, 0.0};
  s.nx = s.ny = 64;
  s.window = {0.0, 0.0, 4.0, 4.0};
  if (mode == SliceSpec::Mode::Affine) {
    s.origin = Mat2::zero();
    s.basis1 = Mat2::diagonal(1.0, 0.0);
    s.basis2 = Mat2::diagonal(0.0, 1.0);
  }
  return s;
}

bool worker_invariant(RenderJob job, std::string& bytes) {
  job.jobs = 1;
  bytes = encode_pgm(render(job));
  job.jobs = 2;
  if (encode_pgm(render(job)) != bytes) return false;
  job.jobs = 8;
  return encode_pgm(render(job)) == bytes;
}

Outcome criterion_12() {
  int bad_pixels = 0;
  bool deterministic = true;

  {  // eigen plane: white outside the circle, black inside, band excluded
    RenderJob job{z2, base_slice(SliceSpec::Mode::EigenPlane)};
    std::string bytes;
    deterministic = worker_invariant(job, bytes) && deterministic;
    const RenderResult r = render(job);
    const double px = job.slice.window.width / job.slice.nx;
    for (int j = 0; j < r.ny; ++j)
      for (int i = 0; i < r.nx; ++i) {
        const double a = std::abs(pixel_to_parameter(job.slice, i, j));
        if (std::abs(a - 1.0) <= px) continue;
        const std::uint8_t expected = a > 1.0 ? 255 : 0;
        if (r.pixels[static_cast<std::size_t>(j) * r.nx + i] != expected) ++bad_pixels;
      }
  }

  {  // jordan plane: same reference through the defective branch
    RenderJob job{z2, base_slice(SliceSpec::Mode::JordanPlane)};
    std::string bytes;
    deterministic = worker_invariant(job, bytes) && deterministic;
    const RenderResult r = render(job);
    const double px = job.slice.window.width / job.slice.nx;
    for (int j = 0; j < r.ny; ++j)
      for (int i = 0; i < r.nx; ++i) {
        const double a = std::abs(pixel_to_parameter(job.slice, i, j));
        if (std::abs(a - 1.0) <= px) continue;
        const std::uint8_t expected = a > 1.0 ? 255 : 0;
        if (r.pixels[static_cast<std::size_t>(j) * r.nx + i] != expected) ++bad_pixels;
      }
  }

  {  // affine green: max(log^+|s|, log^+|t|) scaled onto [0, 255]
    RenderJob job{z2, base_slice(SliceSpec::Mode::Affine)};
    job.quantity = RenderJob::Quantity::Green;
    std::string bytes;
    deterministic = worker_invariant(job, bytes) && deterministic;
    const RenderResult r = render(job);
    const double px = job.slice.window.width / job.slice.nx;
    double vmax = 0.0;
    std::vector<double> ref(r.raw.size());
    for (int j = 0; j < r.ny; ++j)
      for (int i = 0; i < r.nx; ++i) {
        const cdouble st = pixel_to_parameter(job.slice, i, j);
        const double v = std::max(
            {std::log(std::abs(st.real())), std::log(std::abs(st.imag())), 0.0});
        ref[static_cast<std::size_t>(j) * r.nx + i] = v;
        vmax = std::max(vmax, v);
      }
    for (int j = 0; j < r.ny; ++j)
      for (int i = 0; i < r.nx; ++i) {
        const cdouble st = pixel_to_parameter(job.slice, i, j);
        const double band_dist = std::min(std::abs(std::abs(st.real()) - 1.0),
                                          std::abs(std::abs(st.imag()) - 1.0));
        if (band_dist <= px) continue;
        const std::size_t k = static_cast<std::size_t>(j) * r.nx + i;
        const auto expected = static_cast<std::uint8_t>(
            std::lround(255.0 * ref[k] / vmax));
        if (r.pixels[k] != expected) ++bad_pixels;
      }
  }

  const bool pass = bad_pixels == 0 && deterministic;
  return {pass, std::to_string(bad_pixels) + " pixels off the analytic reference; " +
                    (deterministic ? "byte-identical across 1/2/8 workers"
                                   : "NOT worker-invariant")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"z^2 dichotomy", criterion_1},
      {"strata fixtures", criterion_2},
      {"Green functional equation", criterion_3},
      {"Green route agreement", criterion_4},
      {"logarithmic growth", criterion_5},
      {"Boettcher semiconjugacy and Green link", criterion_6},
      {"Laurent series convergence", criterion_7},
      {"lift/direct oracle", criterion_8},
      {"parabolic Jordan fixtures", criterion_9},
      {"conjugation invariance", criterion_10},
      {"derivative growth identity", criterion_11},
      {"renders against analytic references", criterion_12},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Outcome o = criteria[k].second();
    std::printf("[%s] %02zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
