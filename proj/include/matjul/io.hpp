#pragma once

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "matjul/classification.hpp"
#include "matjul/green_boettcher.hpp"
#include "matjul/mat2.hpp"
#include "matjul/polynomial.hpp"
#include "matjul/slice.hpp"

namespace matjul::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// complex literals: "1.5", "-2i", "1+2i", "0.5-0.25i", "i", "-i"

inline cdouble parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_part = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad numeric literal: " + t);
    return v;
  };

  if (s.back() == 'i' || s.back() == 'I') {
    const std::string body = s.substr(0, s.size() - 1);
    // find the split between real and imaginary parts: the last +/- that is
    // not an exponent sign and not the leading sign
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') &&
          body[k - 1] != 'e' && body[k - 1] != 'E') {
        return {parse_part(body.substr(0, k)), parse_part(body.substr(k))};
      }
    }
    return {0.0, parse_part(body)};
  }
  return {parse_part(s), 0.0};
}

inline std::string format_complex(cdouble z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real();
  if (z.imag() >= 0.0 || std::isnan(z.imag())) os << "+";
  os << z.imag() << "i";
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON forms: complex as [re, im]; polynomial as ascending array of pairs;
// matrix as [[pair, pair], [pair, pair]]

inline json to_json(cdouble z) { return json::array({z.real(), z.imag()}); }

inline cdouble complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex JSON must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const Polynomial& p) {
  json arr = json::array();
  for (cdouble c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

inline Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<cdouble> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(complex_from_json(c));
  return Polynomial(std::move(coeffs));
}

inline json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}),
                      json::array({to_json(m.c), to_json(m.d)})});
}

inline Mat2 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::invalid_argument("matrix JSON must be [[a,b],[c,d]] of [re,im] pairs");
  return {complex_from_json(j[0][0]), complex_from_json(j[0][1]),
          complex_from_json(j[1][0]), complex_from_json(j[1][1])};
}

// ---------------------------------------------------------------------------
// CLI shorthands

/// Ascending comma list "a0,a1,...,ad" of complex literals, or "@file.json".
inline Polynomial parse_polynomial(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw std::invalid_argument("cannot open polynomial file: " + text.substr(1));
    json j;
    f >> j;
    return polynomial_from_json(j);
  }
  std::vector<cdouble> coeffs;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) coeffs.push_back(parse_complex(item));
  return Polynomial(std::move(coeffs));
}

/// Row-major "a;b;c;d" of complex literals.
inline Mat2 parse_matrix(const std::string& text) {
  std::vector<cdouble> entries;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ';')) entries.push_back(parse_complex(item));
  if (entries.size() != 4)
    throw std::invalid_argument("matrix shorthand must have four entries a;b;c;d");
  return {entries[0], entries[1], entries[2], entries[3]};
}

// ---------------------------------------------------------------------------
// slice files

inline SliceSpec slice_from_json(const json& j) {
  SliceSpec s;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "eigen-plane") s.mode = SliceSpec::Mode::EigenPlane;
  else if (mode == "jordan-plane") s.mode = SliceSpec::Mode::JordanPlane;
  else if (mode == "affine") s.mode = SliceSpec::Mode::Affine;
  else throw std::invalid_argument("slice mode must be eigen-plane, jordan-plane or affine");

  if (j.contains("lambda_fixed")) s.lambda_fixed = complex_from_json(j["lambda_fixed"]);
  if (j.contains("vary")) s.vary = j["vary"].get<int>();
  if (j.contains("Q")) s.conjugator = matrix_from_json(j["Q"]);
  if (j.contains("M0")) s.origin = matrix_from_json(j["M0"]);
  if (j.contains("V1")) s.basis1 = matrix_from_json(j["V1"]);
  if (j.contains("V2")) s.basis2 = matrix_from_json(j["V2"]);

  if (j.contains("window")) {
    const auto& w = j["window"];
    if (w.contains("center")) {
      s.window.center_s = w["center"][0].get<double>();
      s.window.center_t = w["center"][1].get<double>();
    }
    s.window.width = w.at("width").get<double>();
    s.window.height = w.at("height").get<double>();
  }
  if (j.contains("resolution")) {
    s.nx = j["resolution"][0].get<int>();
    s.ny = j["resolution"][1].get<int>();
  }
  s.validate();
  return s;
}

inline SliceSpec load_slice(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open slice file: " + path);
  json j;
  f >> j;
  return slice_from_json(j);
}

// ---------------------------------------------------------------------------
// verdict serialization

inline const char* tag_name(PointClass::Tag t) {
  switch (t) {
    case PointClass::Tag::Escaping: return "escaping";
    case PointClass::Tag::InteriorAttracting: return "interior-attracting";
    case PointClass::Tag::BoundedUnresolved:
    default: return "bounded-unresolved";
  }
}

inline const char* tag_name(MatrixClass::Tag t) {
  switch (t) {
    case MatrixClass::Tag::FatouEscaping: return "FatouEscaping";
    case MatrixClass::Tag::FatouBounded: return "FatouBounded";
    case MatrixClass::Tag::Julia1: return "Julia1";
    case MatrixClass::Tag::Julia2: return "Julia2";
    case MatrixClass::Tag::Unresolved:
    default: return "Unresolved";
  }
}

inline json to_json(const PointClass& pc) {
  json j;
  j["tag"] = tag_name(pc.tag);
  j["borderline"] = pc.borderline;
  switch (pc.tag) {
    case PointClass::Tag::Escaping:
      j["green"] = {{"value", pc.green.value},
                    {"error_bound", pc.green.error_bound},
                    {"iterations_used", pc.green.iterations_used}};
      break;
    case PointClass::Tag::InteriorAttracting:
      j["period"] = pc.period;
      j["multiplier_modulus"] = pc.multiplier_modulus;
      break;
    default:
      break;
  }
  return j;
}

inline json to_json(const MatrixClass& mc, const ClassifyParams& params) {
  json j;
  j["class"] = tag_name(mc.tag);
  j["eigenvalues"] = {to_json(mc.spectrum.lambda1), to_json(mc.spectrum.lambda2)};
  j["eigen_verdicts"] = {to_json(mc.eigen_verdicts[0]), to_json(mc.eigen_verdicts[1])};
  j["defective"] = mc.defective;
  j["near_defective"] = mc.near_defective;
  j["budgets"] = {{"iterations", params.budget},
                  {"max_period", params.max_period},
                  {"transient_cap", params.transient_cap}};
  j["epistemic"] = {{"bounded_is_censored", true},
                    {"green_floor", params.green_floor},
                    {"near_defective_band", params.near_defective_band}};
  return j;
}

inline json to_json(const MatrixGreen& g) {
  json j;
  j["value"] = g.value;
  j["error_bound"] = g.error_bound;
  j["route"] = g.route == MatrixGreen::Route::Direct ? "direct" : "eigen-max";
  if (g.route == MatrixGreen::Route::Direct) j["steps"] = g.direct_steps;
  return j;
}

}  // namespace matjul::io
