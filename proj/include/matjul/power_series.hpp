#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "matjul/polynomial.hpp"

namespace matjul::series {

/// Dense truncated power series in one formal variable: c[k] is the t^k
/// coefficient, all series share a fixed truncation length.
using Series = std::vector<cdouble>;

inline Series zero(std::size_t len) { return Series(len, cdouble{0.0, 0.0}); }

inline Series one(std::size_t len) {
  Series s = zero(len);
  s[0] = 1.0;
  return s;
}

inline Series mul(const Series& a, const Series& b) {
  const std::size_t len = a.size();
  Series out = zero(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == cdouble{}) continue;
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// 1/a for a with nonzero constant term.
inline Series inverse(const Series& a) {
  if (a[0] == cdouble{}) throw std::invalid_argument("series inverse: zero constant term");
  const std::size_t len = a.size();
  Series out = zero(len);
  out[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    cdouble acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

/// log(a) for a with constant term 1, via (log a)' = a'/a.
inline Series log(const Series& a) {
  if (a[0] != cdouble{1.0, 0.0})
    throw std::invalid_argument("series log: constant term must be 1");
  const std::size_t len = a.size();
  const Series ia = inverse(a);
  Series out = zero(len);
  for (std::size_t k = 1; k < len; ++k) {
    // [a' * (1/a)]_{k-1} ; a'_j = (j+1) a_{j+1}
    cdouble acc{};
    for (std::size_t j = 0; j < k; ++j)
      if (j + 1 < len) acc += static_cast<double>(j + 1) * a[j + 1] * ia[k - 1 - j];
    out[k] = acc / static_cast<double>(k);
  }
  return out;
}

/// exp(g) for g with zero constant term, via E' = E g'.
inline Series exp(const Series& g) {
  if (g[0] != cdouble{})
    throw std::invalid_argument("series exp: constant term must be 0");
  const std::size_t len = g.size();
  Series out = zero(len);
  out[0] = 1.0;
  for (std::size_t k = 1; k < len; ++k) {
    cdouble acc{};
    for (std::size_t j = 0; j < k; ++j)
      if (k - j < len) acc += out[j] * static_cast<double>(k - j) * g[k - j];
    out[k] = acc / static_cast<double>(k);
  }
  return out;
}

/// a^alpha for a with constant term 1.
inline Series pow(const Series& a, double alpha) {
  Series l = log(a);
  for (auto& c : l) c *= alpha;
  return exp(l);
}

/// u(s) where s has zero coefficients below t^v, v >= 1.  Only u_j with
/// j*v < len contribute, so the composition terminates quickly.
inline Series compose(const Series& u, const Series& s, std::size_t valuation) {
  if (valuation < 1) throw std::invalid_argument("series compose: valuation must be >= 1");
  const std::size_t len = u.size();
  Series out = zero(len);
  Series spow = one(len);
  for (std::size_t j = 0; j < len; ++j) {
    if (u[j] != cdouble{})
      for (std::size_t k = 0; k < len; ++k) out[k] += u[j] * spow[k];
    if ((j + 1) * valuation >= len) break;
    spow = mul(spow, s);
  }
  return out;
}

}  // namespace matjul::series
