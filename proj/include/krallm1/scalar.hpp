// scalar.hpp
//
// The two scalar fields of the library: Rational (exact, GMP) and
// PrecisionFloat (MPFR, runtime precision in significant decimal digits).

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cctype>
#include <cstdlib>
#include <ios>
#include <string>
#include <string_view>

#include "krallm1/errors.hpp"

namespace krallm1 {

namespace mp = boost::multiprecision;

using Integer = mp::mpz_int;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using PrecisionFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr unsigned kDefaultDigits = 60;
inline constexpr unsigned kMinDigits = 30;

/// Sets the working precision for PrecisionFloat values created in the
/// current thread and restores the previous one on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits)
      : saved_(PrecisionFloat::default_precision()) {
    PrecisionFloat::default_precision(digits);
  }
  ~PrecisionScope() { PrecisionFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

namespace detail {

inline bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace detail

/// Parses "p/q" or "p" with integer p and positive integer q. The result is
/// canonical (reduced, positive denominator).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!detail::is_integer_literal(num_text, true)) {
    throw ParseError("not a rational \"p/q\": '" + std::string(text) + "'");
  }
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!detail::is_integer_literal(den_text, false)) {
      throw ParseError("denominator must be a positive integer: '" +
                       std::string(text) + "'");
    }
    den = detail::parse_integer(den_text);
    if (den == 0) {
      throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
  }
  return Rational(detail::parse_integer(num_text), den);
}

/// "p/q", or "p" when q = 1; the sign sits on the numerator.
inline std::string to_string(const Rational& r) { return r.str(); }

inline PrecisionFloat to_float(const Rational& r) {
  return PrecisionFloat(mp::numerator(r)) / PrecisionFloat(mp::denominator(r));
}

inline PrecisionFloat parse_float(std::string_view text) {
  try {
    return PrecisionFloat(std::string(text));
  } catch (const std::exception&) {
    throw ParseError("not a decimal number: '" + std::string(text) + "'");
  }
}

/// Scientific notation with exactly `digits` significant digits.
inline std::string to_string(const PrecisionFloat& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

/// Shortest scientific form that parses back to the same value.
inline std::string to_string(const PrecisionFloat& x) {
  return x.str(0, std::ios_base::scientific);
}

/// Integer power with negative exponents allowed (x must then be nonzero).
template <class T>
T ipow(const T& x, int e) {
  if (e < 0) return T(1) / ipow(x, -e);
  T result(1);
  T base = x;
  for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
    if (k & 1u) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

template <class T>
bool is_zero(const T& x) {
  return x == 0;
}

}  // namespace krallm1
