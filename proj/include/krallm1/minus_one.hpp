// minus_one.hpp
//
// The -1 Krall-Jacobi family: the q -> -1 limits of the representation
// coefficients (q = -e^eps, b = -e^{beta eps}, j = 2, scaled by eps^3), the
// limiting recurrence coefficients, and the monic polynomials P~_n^(-1)
// generated from them.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "krallm1/errors.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/minus_one_params.hpp"
#include "krallm1/moments.hpp"
#include "krallm1/qjacobi.hpp"

namespace krallm1 {

/// lim A_n^(s) / eps^3 for s = 0..3; zero for s > 3.
inline Rational limit_rep_coeff(int n, int s, const MinusOneParams& p) {
  const Rational& be = p.beta;
  const Rational& M = p.M;
  const Rational N(n);
  const bool even = n % 2 == 0;
  switch (s) {
    case 0:
      return even ? -8 * M * N * (N + 2) * (N + 1 + be) + 8 * N * (be + 1) * (be + 3)
                  : 8 * M * (N + 1) * (N + be) * (N + 2 + be) -
                        8 * (N + 2 + be) * (be + 1) * (be + 3);
    case 1:
      return even ? 8 * M * N * (N + 2) * (N + 1 + be) - 8 * N * (be + 1) * (be + 3)
                  : 8 * (be + 1) * (be + 3) * (N + 1) - 8 * M * (N * N - 1) * (N + be);
    case 2:
      return even ? 8 * M * N * (N + 2) * (N - 2) : -8 * M * (N + 1) * (N - 1) * (N + be);
    case 3:
      return even ? -8 * M * N * (N + 2) * (N - 2) : 8 * M * (N + 1) * (N - 1) * (N - 3);
    default:
      return 0;
  }
}

/// Eigenvalue of L0 on P~_n^(-1).
inline Rational lambda_tilde(int n, const MinusOneParams& p) {
  return limit_rep_coeff(n, 0, p);
}

/// (u_n, b_n) of the untransformed q -> -1 limit of little q-Jacobi at a = q^2.
inline RecurrenceCoeffs<Rational> base_recurrence_m1(int n, const MinusOneParams& p) {
  const Rational den = (2 * n + 1 + p.beta) * (2 * n + 3 + p.beta);
  if (den == 0) {
    throw DegenerateParameters("(2n+1+beta)(2n+3+beta) vanishes at n=" + std::to_string(n));
  }
  if (n % 2 == 0) return {Rational(-n * (n + 2)) / den, Rational(1)};
  return {-(n + p.beta) * (n + 2 + p.beta) / den, Rational(-1)};
}

/// lim_{q -> -1} Phi_n / Phi_{n-1}, n >= 1.
inline Rational limit_B(int n, const MinusOneParams& p) {
  const Rational& be = p.beta;
  const Rational c = (3 + be) * (1 + be);
  const bool even = n % 2 == 0;
  const Rational num_d = even ? Rational((n + 2)) * (n + 1 + be) : (n + 1) * (n + 2 + be);
  const Rational den_d = even ? Rational(n) * (n + 1 + be) : (n + 1) * (n + be);
  const Rational lead = even ? Rational(n + 2) : -(n + 2 + be);
  const Rational lead_den = 2 * n + 1 + be;
  if (num_d == 0 || den_d == 0 || lead_den == 0) {
    throw DegenerateParameters("limit_B denominator vanishes at n=" + std::to_string(n));
  }
  const Rational psi = p.M - c / den_d;
  if (psi == 0) {
    throw GeronimusDegenerate(
        n, "M = (3+beta)(1+beta)/" + to_string(den_d) + " makes Phi_" +
               std::to_string(n - 1) + " vanish in the limit");
  }
  return lead / lead_den * (p.M - c / num_d) / psi;
}

/// (u~_n, b~_n) of the transformed -1 recurrence; u~_0 is reported as 0.
/// u~_1 comes from the moment functional, u~_1 = <P~_1, P~_1>/<1, 1>.
inline RecurrenceCoeffs<Rational> transformed_recurrence_m1(int n, const MinusOneParams& p) {
  if (n == 0) return {Rational(0), base_recurrence_m1(0, p).b + limit_B(1, p)};
  RecurrenceCoeffs<Rational> r;
  if (n == 1) {
    const Rational b0 = transformed_recurrence_m1(0, p).b;
    const auto mu = moments(2, p);
    if (mu[0] == 0) throw GeronimusDegenerate(1, "mu_0 = 0");
    r.u = (mu[2] - 2 * b0 * mu[1] + b0 * b0 * mu[0]) / mu[0];
  } else {
    const Rational prev = limit_B(n - 1, p);
    if (prev == 0) {
      throw GeronimusDegenerate(n, "lim B_" + std::to_string(n - 1) + " = 0");
    }
    r.u = base_recurrence_m1(n - 1, p).u * limit_B(n, p) / prev;
  }
  r.b = base_recurrence_m1(n, p).b + limit_B(n + 1, p) - limit_B(n, p);
  return r;
}

/// P~_0..P~_N of the -1 family with the recurrence coefficients used to
/// build them (b~_0..b~_{N-1}, u~_1..u~_{N-1}; u[0] = 0).
class MinusOneFamily {
 public:
  static MinusOneFamily build(const MinusOneParams& p, int max_n) {
    MinusOneFamily f;
    f.params_ = p;
    f.polys_.push_back(RationalPoly(Rational(1)));
    const auto x = RationalPoly::x();
    for (int n = 0; n < max_n; ++n) {
      const auto rc = transformed_recurrence_m1(n, p);
      f.u_.push_back(rc.u);
      f.b_.push_back(rc.b);
      RationalPoly next = x * f.polys_.back() - rc.b * f.polys_.back();
      if (n > 0) next -= rc.u * f.polys_[static_cast<std::size_t>(n - 1)];
      f.polys_.push_back(std::move(next));
    }
    return f;
  }

  const MinusOneParams& params() const noexcept { return params_; }
  int max_n() const { return static_cast<int>(polys_.size()) - 1; }
  const RationalPoly& poly(int n) const { return polys_.at(static_cast<std::size_t>(n)); }
  const std::vector<RationalPoly>& polys() const noexcept { return polys_; }
  const Rational& u(int n) const { return u_.at(static_cast<std::size_t>(n)); }
  const Rational& b(int n) const { return b_.at(static_cast<std::size_t>(n)); }

 private:
  MinusOneParams params_;
  std::vector<RationalPoly> polys_;
  std::vector<Rational> u_;
  std::vector<Rational> b_;
};

inline RationalPoly gen_poly_m1(int n, const MinusOneParams& p) {
  return MinusOneFamily::build(p, n).poly(n);
}

/// Gram matrix <P~_i, P~_j>, i, j = 0..max_n, under the moment functional.
inline std::vector<std::vector<Rational>> gram_matrix(const MinusOneFamily& family,
                                                      const MomentSequence& mu) {
  const auto size = static_cast<std::size_t>(family.max_n()) + 1;
  std::vector<std::vector<Rational>> g(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      g[i][j] = inner_product(family.polys()[i], family.polys()[j], mu);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

inline std::vector<std::vector<Rational>> gram_matrix(int max_n, const MinusOneParams& p) {
  return gram_matrix(MinusOneFamily::build(p, max_n), moments(2 * max_n, p));
}

}  // namespace krallm1
