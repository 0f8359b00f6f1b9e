// laurent_poly.hpp
//
// Sparse univariate Laurent polynomials with degrees bounded below by -3.
// Zero coefficients are never stored, so equality is structural.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "krallm1/errors.hpp"
#include "krallm1/scalar.hpp"

namespace krallm1 {

template <class Scalar>
class LaurentPoly {
 public:
  static constexpr int kMinDegree = -3;

  using Terms = std::map<int, Scalar>;

  LaurentPoly() = default;

  /// Constant polynomial.
  explicit LaurentPoly(Scalar c) { set(0, std::move(c)); }

  explicit LaurentPoly(const Terms& terms) {
    for (const auto& [d, c] : terms) set(d, c);
  }

  static LaurentPoly monomial(int degree, Scalar c = Scalar(1)) {
    LaurentPoly p;
    p.set(degree, std::move(c));
    return p;
  }

  static LaurentPoly x() { return monomial(1); }

  /// Builds sum_i coeffs[i] x^i from ascending coefficients.
  template <class Range>
  static LaurentPoly from_ascending(const Range& coeffs) {
    LaurentPoly p;
    int d = 0;
    for (const auto& c : coeffs) p.set(d++, Scalar(c));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  std::optional<int> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  Scalar leading_coeff() const {
    return terms_.empty() ? Scalar(0) : terms_.rbegin()->second;
  }

  bool is_proper() const { return terms_.empty() || terms_.begin()->first >= 0; }

  /// Dense ascending coefficients of a proper polynomial.
  std::vector<Scalar> ascending_coeffs() const {
    if (!is_proper()) {
      throw NonPolynomialOutput("polynomial has negative-degree terms");
    }
    std::vector<Scalar> out(terms_.empty() ? 0 : terms_.rbegin()->first + 1,
                            Scalar(0));
    for (const auto& [d, c] : terms_) out[d] = c;
    return out;
  }

  /// Sets the coefficient at `degree`, erasing it when c == 0.
  void set(int degree, Scalar c) {
    check_degree(degree);
    if (c == 0) {
      terms_.erase(degree);
    } else {
      terms_[degree] = std::move(c);
    }
  }

  void add_term(int degree, const Scalar& c) {
    check_degree(degree);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }

  LaurentPoly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
  }

  LaurentPoly& operator/=(const Scalar& s) {
    for (auto& [d, c] : terms_) c /= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Scalar(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& s) { return a *= s; }
  friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator/(LaurentPoly a, const Scalar& s) { return a /= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [da, ca] : a.terms_) {
      for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  LaurentPoly pow(unsigned e) const {
    LaurentPoly r(Scalar(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [d, c] : terms_) r.set(d + k, c);
    return r;
  }

  LaurentPoly derivative() const {
    LaurentPoly r;
    for (const auto& [d, c] : terms_) {
      if (d != 0) r.set(d - 1, c * Scalar(d));
    }
    return r;
  }

  LaurentPoly derivative(unsigned order) const {
    LaurentPoly r = *this;
    for (unsigned i = 0; i < order; ++i) r = r.derivative();
    return r;
  }

  /// R p(x) = p(-x).
  LaurentPoly reflect() const {
    LaurentPoly r = *this;
    for (auto& [d, c] : r.terms_) {
      if (d % 2 != 0) c = -c;
    }
    return r;
  }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (const auto& [d, c] : terms_) acc += c * ipow(x, d);
    return acc;
  }

  /// Coefficient-wise conversion to another scalar type.
  template <class Other, class Convert>
  LaurentPoly<Other> convert(Convert&& fn) const {
    LaurentPoly<Other> r;
    for (const auto& [d, c] : terms_) r.set(d, fn(c));
    return r;
  }

 private:
  static void check_degree(int degree) {
    if (degree < kMinDegree) throw DegreeUnderflow(degree);
  }

  Terms terms_;
};

using RationalPoly = LaurentPoly<Rational>;
using FloatPoly = LaurentPoly<PrecisionFloat>;

inline FloatPoly to_float(const RationalPoly& p) {
  return p.convert<PrecisionFloat>([](const Rational& c) { return to_float(c); });
}

/// {"degree": "coefficient", ...}, degrees descending.
inline nlohmann::ordered_json to_json(const RationalPoly& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    j[std::to_string(it->first)] = to_string(it->second);
  }
  return j;
}

inline nlohmann::ordered_json to_json(const FloatPoly& p, unsigned digits) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    j[std::to_string(it->first)] = to_string(it->second, digits);
  }
  return j;
}

inline RationalPoly rational_poly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ParseError("polynomial JSON must be an object");
  RationalPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int degree = 0;
    try {
      degree = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw ParseError("bad degree key '" + key + "'");
    if (!value.is_string()) throw ParseError("coefficient must be a string");
    p.add_term(degree, parse_rational(value.get<std::string>()));
  }
  return p;
}

/// Human-readable rendering, highest degree first, e.g. "x^2 - 1/3*x + 2".
inline std::string to_display(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [d, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1 && d != 0;
    if (!unit) out += to_string(mag);
    if (d != 0) {
      if (!unit) out += "*";
      out += "x";
      if (d != 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace krallm1
