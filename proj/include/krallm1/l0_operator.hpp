// l0_operator.hpp
//
// The third-order differential-difference operator L0 with the reflection
// R f(x) = f(-x), in two independent realizations:
//
//  * monomial action  L0 x^n = c0(n) x^n + c1(n) x^{n-1} + c2(n) x^{n-2} + c3(n) x^{n-3},
//    with parity entering through theta_n;
//  * operator form    sum of Laurent coefficient functions times d^k R and d^k,
//    plus a (1 - R) tail, evaluated in the Laurent workspace.
//
// d^k R means d^k applied to f(-x).

#pragma once

#include <array>
#include <string>

#include "krallm1/errors.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/minus_one.hpp"
#include "krallm1/pochhammer.hpp"
#include "krallm1/report.hpp"

namespace krallm1 {

/// The four bracket coefficients of L0 x^n (index k multiplies x^{n-k}).
inline std::array<Rational, 4> l0_monomial_brackets(int n, const MinusOneParams& p) {
  const Rational& be = p.beta;
  const Rational& M = p.M;
  const Rational N(n);
  const Rational N2 = N * N;
  const Rational N3 = N2 * N;
  const Rational t = theta(static_cast<unsigned>(n));
  const Rational be2 = be * be;
  const Rational be3 = be2 * be;

  std::array<Rational, 4> c;
  c[0] = -8 * M * N * (N + 2) * (N + 1 + be) + 8 * N * (be + 1) * (be + 3) +
         t * (16 * M * N3 + (24 * be * M + 48 * M) * N2 +
              (32 * M - 16 * be2 + 8 * be2 * M - 48 + 48 * be * M - 64 * be) * N -
              48 * be2 - 8 * be3 + 16 * be * M + 8 * be2 * M - 48 - 88 * be);
  c[1] = 8 * M * N3 + (24 * M + 8 * be * M) * N2 +
         (16 * M + 16 * be * M - 8 * be2 - 32 * be - 24) * N +
         t * (-16 * M * N3 - (24 * M + 16 * be * M) * N2 +
              (64 * be + 48 + 16 * be2 - 16 * be * M - 8 * M) * N + 32 * be + 24 +
              8 * be2 + 8 * be * M);
  c[2] = 8 * M * N3 - 32 * M * N +
         t * (-16 * M * N3 - 8 * be * M * N2 + 40 * M * N + 8 * be * M);
  c[3] = -8 * M * N3 + 32 * M * N + t * (16 * M * N3 - 24 * M * N2 - 40 * M * N + 24 * M);
  return c;
}

inline RationalPoly apply_L0_monomial(const RationalPoly& poly, const MinusOneParams& p) {
  if (!poly.is_proper()) {
    throw NonPolynomialOutput("apply_L0_monomial needs a proper polynomial");
  }
  RationalPoly out;
  for (const auto& [n, coeff] : poly.terms()) {
    const auto c = l0_monomial_brackets(n, p);
    for (int k = 0; k < 4; ++k) out.add_term(n - k, coeff * c[static_cast<std::size_t>(k)]);
  }
  return out;
}

/// Laurent coefficient functions of L0, keyed by the derivative they multiply.
struct L0Coefficients {
  RationalPoly d3_reflected;   // multiplies d^3 R
  RationalPoly d2_reflected;   // multiplies d^2 R
  RationalPoly d2;             // multiplies d^2
  RationalPoly d1_reflected;   // multiplies d R
  RationalPoly d1;             // multiplies d
  RationalPoly odd_projector;  // multiplies (1 - R)
};

inline L0Coefficients l0_coefficients(const MinusOneParams& p) {
  const Rational& be = p.beta;
  const Rational& M = p.M;
  const Rational be2 = be * be;
  const Rational be3 = be2 * be;
  using Terms = RationalPoly::Terms;

  L0Coefficients c;
  c.d3_reflected = RationalPoly(Terms{{0, -8 * M}, {1, 8 * M}, {2, 8 * M}, {3, -8 * M}});
  c.d2_reflected = RationalPoly(Terms{{-1, -12 * M},
                                      {0, 24 * M + 4 * be * M},
                                      {1, 36 * M + 8 * be * M},
                                      {2, -(12 * be * M + 48 * M)}});
  c.d2 = RationalPoly(Terms{{-1, -12 * M}, {0, -4 * be * M}, {1, 12 * M}, {2, 4 * be * M}});
  c.d1_reflected = RationalPoly(
      Terms{{-2, 24 * M},
            {-1, (4 * be - 12) * M},
            {0, 24 * M + 16 * be * M - 8 * be2 - 32 * be - 24},
            {1, 8 * be2 - 36 * be * M - 48 * M - 4 * be2 * M + 32 * be + 24}});
  c.d1 = RationalPoly(Terms{{-1, -(12 + 4 * be) * M},
                            {0, 24 * M + 8 * be * M},
                            {1, 4 * be2 * M + 12 * be * M}});
  c.odd_projector = RationalPoly(
      Terms{{-3, 12 * M},
            {-2, 4 * be * M},
            {-1, 12 + 4 * be2 + 4 * be * M + 16 * be},
            {0, 8 * be * M + 4 * be2 * M - 44 * be - 24 - 4 * be3 - 24 * be2}});
  return c;
}

/// Applies the operator form term by term. Every negative-degree coefficient
/// must cancel; a leftover one raises NonPolynomialOutput.
inline RationalPoly apply_L0_operator(const RationalPoly& poly, const MinusOneParams& p) {
  if (!poly.is_proper()) {
    throw NonPolynomialOutput("apply_L0_operator needs a proper polynomial");
  }
  const auto c = l0_coefficients(p);
  const RationalPoly reflected = poly.reflect();

  RationalPoly out = c.d3_reflected * reflected.derivative(3);
  out += c.d2_reflected * reflected.derivative(2);
  out += c.d2 * poly.derivative(2);
  out += c.d1_reflected * reflected.derivative(1);
  out += c.d1 * poly.derivative(1);
  out += c.odd_projector * (poly - reflected);

  if (!out.is_proper()) {
    throw NonPolynomialOutput("L0 left a term of degree " + std::to_string(*out.min_degree()) +
                              " on " + to_display(poly));
  }
  return out;
}

/// Checks L0 P~_n = lambda~_n P~_n exactly.
inline CheckResult verify_eigen_m1(int n, const MinusOneFamily& family) {
  const auto& params = family.params();
  const auto& poly = family.poly(n);
  const RationalPoly lhs = apply_L0_operator(poly, params);
  const RationalPoly rhs = lambda_tilde(n, params) * poly;
  const RationalPoly residual = lhs - rhs;
  CheckResult r;
  r.check = "eigen_m1";
  r.params = to_json(params);
  r.n = n;
  r.pass = residual.is_zero();
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.residual = to_json(residual);
  return r;
}

inline CheckResult verify_eigen_m1(int n, const MinusOneParams& p) {
  return verify_eigen_m1(n, MinusOneFamily::build(p, n));
}

}  // namespace krallm1
