#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "matjul/matrix_polynomial.hpp"
#include "matjul/polynomial.hpp"
#include "matjul/scalar_dynamics.hpp"
#include "matjul/spectrum.hpp"

namespace matjul {

/// Budgets and bands for the numerical stratification.  The first block is
/// the orbit machinery; the borderline bands below decide when a verdict is
/// too close to the boundary to certify:
///   - an escape whose Green value is below green_floor is indistinguishable
///     from the rounding drift of a Julia-set eigenvalue and is demoted to
///     BoundedUnresolved;
///   - an attracting cycle reached only after transient_cap iterations would
///     certify points within ~2^-transient_cap of the boundary, below what
///     double precision can distinguish, and is demoted likewise;
///   - eigenvalue pairs split by less than near_defective_band sit in the
///     numeric ambiguity zone of the Jordan dichotomy; if their verdicts
///     disagree the matrix is reported Unresolved.
struct ClassifyParams {
  int budget = 1000;
  int max_period = 64;
  double recurrence_tol = 1e-9;
  double multiplier_margin = 1e-6;
  double green_floor = 1e-10;
  int transient_cap = 36;
  double near_defective_band = 1e-5;
  TolerancePolicy tol{};
};

/// Verdict for one eigenvalue.  BoundedUnresolved is the operational
/// stand-in for "in K_p, possibly on J_p": nothing was certified within
/// budget.  borderline marks demotions by the bands above.
struct PointClass {
  enum class Tag { Escaping, InteriorAttracting, BoundedUnresolved };
  Tag tag = Tag::BoundedUnresolved;
  GreenEstimate green{};
  int period = 0;
  double multiplier_modulus = 0.0;
  bool borderline = false;
};

/// Verdict for a matrix, per the stratification of the matrix Julia set:
/// F-infinity (some eigenvalue escapes), bounded Fatou part, J_1 (one
/// eigenvalue on J_p paired with interior), J_2 (both on J_p, or a
/// defective boundary eigenvalue).
struct MatrixClass {
  enum class Tag { FatouEscaping, FatouBounded, Julia1, Julia2, Unresolved };
  Tag tag = Tag::Unresolved;
  std::array<PointClass, 2> eigen_verdicts{};
  bool defective = false;
  bool near_defective = false;
  Spectrum spectrum{};
};

enum class Ternary { Yes, No, Unresolved };

inline PointClass classify_eigenvalue(const Polynomial& p, cdouble lambda,
                                      const ClassifyParams& params = {}) {
  PointClass pc;
  const double radius = p.escape_radius();

  std::vector<cdouble> orbit;
  orbit.reserve(static_cast<std::size_t>(params.budget) + 1);
  orbit.push_back(lambda);
  bool escaped = std::abs(lambda) > radius;
  for (int k = 1; k <= params.budget && !escaped; ++k) {
    orbit.push_back(p(orbit.back()));
    escaped = std::abs(orbit.back()) > radius;
  }

  if (escaped) {
    pc.green = green_scalar(p, lambda, params.budget);
    if (pc.green.value > params.green_floor) {
      pc.tag = PointClass::Tag::Escaping;
    } else {
      pc.tag = PointClass::Tag::BoundedUnresolved;
      pc.borderline = true;
    }
    return pc;
  }

  const auto cycle = detect_attracting_cycle(p, orbit, params.max_period,
                                             params.recurrence_tol,
                                             params.multiplier_margin);
  if (cycle.found) {
    if (cycle.transient <= params.transient_cap) {
      pc.tag = PointClass::Tag::InteriorAttracting;
      pc.period = cycle.period;
      pc.multiplier_modulus = cycle.multiplier_modulus;
    } else {
      pc.tag = PointClass::Tag::BoundedUnresolved;
      pc.borderline = true;
    }
    return pc;
  }

  pc.tag = PointClass::Tag::BoundedUnresolved;
  return pc;
}

inline MatrixClass classify_matrix(const Polynomial& p, const Mat2& m,
                                   const ClassifyParams& params = {}) {
  MatrixClass mc;
  mc.spectrum = eigen_decompose(m, params.tol);
  mc.defective = mc.spectrum.defective();

  mc.eigen_verdicts[0] = classify_eigenvalue(p, mc.spectrum.lambda1, params);
  mc.eigen_verdicts[1] = mc.defective || mc.spectrum.kind == Spectrum::Kind::Scalar
                             ? mc.eigen_verdicts[0]
                             : classify_eigenvalue(p, mc.spectrum.lambda2, params);

  const auto t1 = mc.eigen_verdicts[0].tag;
  const auto t2 = mc.eigen_verdicts[1].tag;
  using T = PointClass::Tag;

  if (mc.spectrum.kind == Spectrum::Kind::Distinct) {
    const double split = std::abs(mc.spectrum.lambda1 - mc.spectrum.lambda2);
    mc.near_defective =
        split <= params.near_defective_band * std::max(1.0, std::abs(trace(m)));
    if (mc.near_defective && t1 != t2) {
      mc.tag = MatrixClass::Tag::Unresolved;
      return mc;
    }
  }

  if (t1 == T::Escaping || t2 == T::Escaping) {
    mc.tag = MatrixClass::Tag::FatouEscaping;
    return mc;
  }

  if (mc.defective) {
    mc.tag = (t1 == T::InteriorAttracting) ? MatrixClass::Tag::FatouBounded
                                           : MatrixClass::Tag::Julia2;
    return mc;
  }
  if (t1 == T::InteriorAttracting && t2 == T::InteriorAttracting)
    mc.tag = MatrixClass::Tag::FatouBounded;
  else if (t1 == T::BoundedUnresolved && t2 == T::BoundedUnresolved)
    mc.tag = MatrixClass::Tag::Julia2;
  else
    mc.tag = MatrixClass::Tag::Julia1;
  return mc;
}

/// Membership in the closure of K_P, which is decided by the eigenvalues
/// alone: yes iff neither escapes within budget (censored, like everything
/// downstream of bounded-within-budget).
inline Ternary in_closure_KP(const Polynomial& p, const Mat2& m,
                             const ClassifyParams& params = {}) {
  const Spectrum s = eigen_decompose(m, params.tol);
  const auto any_escapes = [&](cdouble lambda) {
    return orbit_classify(p, lambda, params.budget, p.escape_radius()).escaped;
  };
  if (any_escapes(s.lambda1)) return Ternary::No;
  if (s.kind == Spectrum::Kind::Distinct && any_escapes(s.lambda2)) return Ternary::No;
  return Ternary::Yes;
}

/// Smallest n <= n_max with ||P^n(M) - M|| within tolerance.  For defective
/// spectra the analytic criterion p^n(l) = l, (p^n)'(l) = 1 is verified as
/// well (a Jordan block is periodic only at parabolic points).
inline std::optional<int> periodic_check(const Polynomial& p, const Mat2& m,
                                         int n_max, double tol = 1e-9) {
  const Spectrum s = eigen_decompose(m);
  const double scale = std::max(1.0, frobenius_norm(m));
  Mat2 w = m;
  for (int n = 1; n <= n_max; ++n) {
    if (!w.is_finite() || max_entry_modulus(w) > kOverflowCutoff) return std::nullopt;
    w = eval_P(p, w);
    if (frobenius_norm(w - m) <= tol * scale) {
      if (s.defective()) {
        const auto [pn, dpn] = iterate_with_derivative(p, s.lambda1, n);
        const bool fixed = std::abs(pn - s.lambda1) <= tol * std::max(1.0, std::abs(s.lambda1));
        const bool unit_deriv = std::abs(dpn - 1.0) <= tol * 1e3;
        if (!(fixed && unit_deriv)) continue;
      }
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace matjul
