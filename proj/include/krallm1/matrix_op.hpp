// matrix_op.hpp
//
// Even/odd splitting of the -1 family and the 2x2 matrix orthogonal
// polynomials it induces.
//
// With E_n the even part of P~_n and sigma_n = sqrt(u~_1 ... u~_n), the
// renormalized F_n = E_n / sigma_n satisfy the symmetric five-term relation
//
//   x^2 F_n = c_{n,0} F_n + c_{n,1} F_{n-1} + c_{n+1,1} F_{n+1}
//           + c_{n,2} F_{n-2} + c_{n+2,2} F_{n+2},
//
// and P_n = [[R_{2,0}(F_{2n}), R_{2,1}(F_{2n})], [R_{2,0}(F_{2n+1}), R_{2,1}(F_{2n+1})]]
// satisfy  y P_n = D_{n+1} P_{n+1} + E_n P_n + D_n^T P_{n-1}  in y = x^2.
// Conventions: u~_0 = 0 and b~_{-1} = 0, so every coefficient touching a
// negative index vanishes.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "krallm1/errors.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/minus_one.hpp"
#include "krallm1/moments.hpp"
#include "krallm1/report.hpp"
#include "krallm1/scalar.hpp"

namespace krallm1 {

/// (E, O) with E = (p + Rp)/2 and O = (p - Rp)/2.
template <class T>
std::pair<LaurentPoly<T>, LaurentPoly<T>> split_even_odd(const LaurentPoly<T>& p) {
  LaurentPoly<T> even;
  LaurentPoly<T> odd;
  for (const auto& [d, c] : p.terms()) {
    if (d % 2 == 0) {
      even.set(d, c);
    } else {
      odd.set(d, c);
    }
  }
  return {std::move(even), std::move(odd)};
}

/// R_{N,m}(p)(x) = sum_n p^{(nN+m)}(0)/(nN+m)! x^n.
template <class T>
LaurentPoly<T> r_nm(const LaurentPoly<T>& p, int big_n, int m) {
  if (big_n < 1 || m < 0 || m >= big_n) {
    throw DegenerateParameters("r_nm needs N >= 1 and 0 <= m < N");
  }
  if (!p.is_proper()) throw NonPolynomialOutput("r_nm needs a proper polynomial");
  LaurentPoly<T> out;
  for (const auto& [d, c] : p.terms()) {
    if (d % big_n == m) out.set(d / big_n, c);
  }
  return out;
}

/// q(x^N).
template <class T>
LaurentPoly<T> substitute_power(const LaurentPoly<T>& q, int big_n) {
  LaurentPoly<T> out;
  for (const auto& [d, c] : q.terms()) out.set(d * big_n, c);
  return out;
}

struct FiveTermCoeffs {
  std::vector<PrecisionFloat> c0;
  std::vector<PrecisionFloat> c1;
  std::vector<PrecisionFloat> c2;
  std::vector<PrecisionFloat> sigma;

  int max_index() const { return static_cast<int>(c0.size()) - 1; }
};

using Matrix2 = std::array<std::array<PrecisionFloat, 2>, 2>;

struct MatrixPoly2 {
  std::array<std::array<FloatPoly, 2>, 2> entries;
};

/// Exact data and MPFR coefficients for indices 0..max_index.
class FiveTermSystem {
 public:
  static FiveTermSystem build(const MinusOneParams& p, int max_index, unsigned digits) {
    FiveTermSystem sys;
    sys.digits_ = digits;
    sys.family_ = MinusOneFamily::build(p, max_index + 2);
    for (int i = 1; i <= max_index + 1; ++i) {
      if (sys.family_.u(i) <= 0) throw NotPositiveDefinite(i, to_string(sys.family_.u(i)));
    }

    PrecisionScope scope(digits);
    auto u = [&](int i) { return i <= 0 ? PrecisionFloat(0) : to_float(sys.family_.u(i)); };
    auto b = [&](int i) { return i < 0 ? PrecisionFloat(0) : to_float(sys.family_.b(i)); };
    auto& c = sys.coeffs_;
    PrecisionFloat sigma(1);
    for (int n = 0; n <= max_index; ++n) {
      if (n > 0) sigma *= sqrt(u(n));
      c.sigma.push_back(sigma);
      c.c0.push_back(u(n + 1) + u(n) + b(n) * b(n));
      c.c1.push_back((b(n - 1) + b(n)) * sqrt(u(n)));
      c.c2.push_back(sqrt(u(n) * u(n - 1)));
    }
    for (int n = 0; n <= max_index; ++n) {
      const auto [even, odd] = split_even_odd(sys.family_.poly(n));
      sys.f_.push_back(to_float(even) / c.sigma[static_cast<std::size_t>(n)]);
    }
    return sys;
  }

  unsigned digits() const noexcept { return digits_; }
  const MinusOneFamily& family() const noexcept { return family_; }
  const FiveTermCoeffs& coeffs() const noexcept { return coeffs_; }
  int max_index() const { return coeffs_.max_index(); }

  const PrecisionFloat& c0(int n) const { return coeffs_.c0.at(index(n)); }
  PrecisionFloat c1(int n) const {
    return n < 0 ? PrecisionFloat(0) : coeffs_.c1.at(index(n));
  }
  PrecisionFloat c2(int n) const {
    return n < 0 ? PrecisionFloat(0) : coeffs_.c2.at(index(n));
  }

  /// F_n; zero for negative n.
  FloatPoly f(int n) const { return n < 0 ? FloatPoly() : f_.at(index(n)); }

  /// max |coefficient| of the five-term residual at n (n + 2 <= max_index).
  PrecisionFloat five_term_residual(int n) const {
    PrecisionScope scope(digits_);
    FloatPoly r = f(n).shifted(2);
    r -= c0(n) * f(n);
    r -= c1(n) * f(n - 1);
    r -= c1(n + 1) * f(n + 1);
    r -= c2(n) * f(n - 2);
    r -= c2(n + 2) * f(n + 2);
    return max_abs_coeff(r);
  }

  MatrixPoly2 matrix_poly(int n) const {
    MatrixPoly2 m;
    if (n < 0) return m;
    for (int row = 0; row < 2; ++row) {
      const FloatPoly fn = f(2 * n + row);
      for (int col = 0; col < 2; ++col) {
        m.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
            r_nm(fn, 2, col);
      }
    }
    return m;
  }

  /// D_n = [[c_{2n,2}, 0], [c_{2n,1}, c_{2n+1,2}]].
  Matrix2 d_matrix(int n) const {
    return {{{c2(2 * n), PrecisionFloat(0)}, {c1(2 * n), c2(2 * n + 1)}}};
  }

  /// E_n = [[c_{2n,0}, c_{2n+1,1}], [c_{2n+1,1}, c_{2n+1,0}]].
  Matrix2 e_matrix(int n) const {
    const PrecisionFloat off = c1(2 * n + 1);
    return {{{c0(2 * n), off}, {off, c0(2 * n + 1)}}};
  }

  /// Entrywise max |coefficient| of y P_n - D_{n+1}P_{n+1} - E_n P_n - D_n^T P_{n-1}.
  PrecisionFloat matrix_residual(int n) const {
    PrecisionScope scope(digits_);
    const auto pn = matrix_poly(n);
    const auto next = apply(d_matrix(n + 1), matrix_poly(n + 1));
    const auto mid = apply(e_matrix(n), pn);
    const auto prev = apply(transpose(d_matrix(n)), matrix_poly(n - 1));
    PrecisionFloat worst(0);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        FloatPoly res = pn.entries[r][c].shifted(1);
        res -= next.entries[r][c];
        res -= mid.entries[r][c];
        res -= prev.entries[r][c];
        worst = std::max<PrecisionFloat>(worst, max_abs_coeff(res));
      }
    }
    return worst;
  }

  static Matrix2 transpose(const Matrix2& m) {
    return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
  }

  static MatrixPoly2 apply(const Matrix2& a, const MatrixPoly2& p) {
    MatrixPoly2 out;
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        out.entries[r][c] = a[r][0] * p.entries[0][c] + a[r][1] * p.entries[1][c];
      }
    }
    return out;
  }

  static PrecisionFloat max_abs_coeff(const FloatPoly& p) {
    PrecisionFloat m(0);
    for (const auto& [d, c] : p.terms()) m = std::max<PrecisionFloat>(m, abs(c));
    return m;
  }

 private:
  static std::size_t index(int n) { return static_cast<std::size_t>(n); }

  unsigned digits_ = kDefaultDigits;
  MinusOneFamily family_;
  FiveTermCoeffs coeffs_;
  std::vector<FloatPoly> f_;
};

inline FiveTermCoeffs five_term_coeffs(int max_index, const MinusOneParams& p,
                                       unsigned digits) {
  return FiveTermSystem::build(p, max_index, digits).coeffs();
}

/// First candidate whose Hankel determinants up to `order` are positive and
/// whose u~_1..u~_order are positive.
inline MinusOneParams select_positive_point(int order) {
  static const std::array<std::pair<int, int>, 8> kBeta = {
      {{1, 1}, {1, 2}, {3, 1}, {2, 1}, {0, 1}, {5, 2}, {3, 2}, {4, 1}}};
  static const std::array<std::pair<int, int>, 6> kMass = {
      {{-1, 1}, {-1, 4}, {-2, 1}, {-1, 2}, {-3, 1}, {-1, 8}}};
  for (const auto& [bn, bd] : kBeta) {
    for (const auto& [mn, md] : kMass) {
      const MinusOneParams p{Rational(bn, bd), Rational(mn, md)};
      try {
        if (!is_positive_definite(hankel_dets(order, p))) continue;
        const auto family = MinusOneFamily::build(p, order + 1);
        bool ok = true;
        for (int i = 1; i <= order && ok; ++i) ok = family.u(i) > 0;
        if (ok) return p;
      } catch (const Error&) {
        continue;
      }
    }
  }
  throw NotPositiveDefinite(0, "no candidate parameter point is positive definite");
}

/// Nested arrays of decimal strings that parse back to the same values.
inline nlohmann::ordered_json to_json(const Matrix2& m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& row : m) j.push_back({to_string(row[0]), to_string(row[1])});
  return j;
}

inline CheckResult five_term_check(int n, const FiveTermSystem& sys,
                                   const PrecisionFloat& tol) {
  const PrecisionFloat res = sys.five_term_residual(n);
  CheckResult r;
  r.check = "five_term";
  r.params = to_json(sys.family().params());
  r.n = n;
  r.pass = res <= tol;
  r.lhs = "x^2 F_n";
  r.rhs = "c_{n,0}F_n + c_{n,1}F_{n-1} + c_{n+1,1}F_{n+1} + c_{n,2}F_{n-2} + c_{n+2,2}F_{n+2}";
  r.residual = to_string(res, 6);
  r.detail = {{"tol", to_string(tol, 6)}};
  return r;
}

/// Matrix three-term recurrence at n, plus the exact structural facts
/// E_n = E_n^T and (D_n)_{01} = 0.
inline CheckResult matrix_recurrence_check(int n, const FiveTermSystem& sys,
                                           const PrecisionFloat& tol) {
  const PrecisionFloat res = sys.matrix_residual(n);
  const Matrix2 e = sys.e_matrix(n);
  const Matrix2 d = sys.d_matrix(n);
  const bool symmetric = e[0][1] == e[1][0];
  const bool d_upper_zero = d[0][1] == 0;
  CheckResult r;
  r.check = "matrix_recurrence";
  r.params = to_json(sys.family().params());
  r.n = n;
  r.pass = res <= tol && symmetric && d_upper_zero;
  r.lhs = "y P_n";
  r.rhs = "D_{n+1} P_{n+1} + E_n P_n + D_n^T P_{n-1}";
  r.residual = to_string(res, 6);
  r.detail = {{"tol", to_string(tol, 6)},
              {"E_symmetric", symmetric},
              {"D_upper_right_zero", d_upper_zero},
              {"D", to_json(d)},
              {"E", to_json(e)}};
  return r;
}

}  // namespace krallm1
