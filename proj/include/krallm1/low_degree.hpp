// low_degree.hpp
//
// Closed forms of the degree 1..3 eigensolutions of L0 and their
// eigenvalues, used as an independent check on the recurrence-generated
// family.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krallm1/errors.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/minus_one.hpp"
#include "krallm1/moments.hpp"
#include "krallm1/report.hpp"

namespace krallm1 {

/// Factored eigenvalues for n = 1, 2, 3.
inline Rational lambda_tilde_factored(int n, const MinusOneParams& p) {
  const Rational& be = p.beta;
  const Rational& M = p.M;
  switch (n) {
    case 1: return (be + 1) * (be + 3) * (16 * M - 8 * (be + 3));
    case 2: return (be + 3) * (16 * be + 16 - 64 * M);
    case 3: return (3 + be) * (5 + be) * (32 * M - 8 - 8 * be);
    default:
      throw DegenerateParameters("factored eigenvalue only for n = 1, 2, 3");
  }
}

/// b~_0 = 2 / (3 + beta - 2M), so P~_1 = x - b~_0.
inline Rational first_recurrence_shift(const MinusOneParams& p) {
  const Rational den = 3 + p.beta - 2 * p.M;
  if (den == 0) throw DegenerateParameters("3+beta-2M vanishes");
  return 2 / den;
}

inline RationalPoly closed_form_p2(const MinusOneParams& p) {
  const Rational& be = p.beta;
  const Rational& M = p.M;
  const Rational den = (5 + be) * (2 * M - be - 1);
  if (den == 0) throw DegenerateParameters("(5+beta)(2M-beta-1) vanishes");
  return RationalPoly(RationalPoly::Terms{
      {2, Rational(1)}, {1, -2 * (4 * M - be - 1) / den}, {0, 2 * (be + 1) / den}});
}

inline RationalPoly closed_form_p3(const MinusOneParams& p) {
  const Rational& be = p.beta;
  const Rational& M = p.M;
  const Rational tail = -4 * M + be + 1;
  if ((7 + be) * (5 + be) * tail == 0) {
    throw DegenerateParameters("(7+beta)(5+beta)(1+beta-4M) vanishes");
  }
  return RationalPoly(RationalPoly::Terms{{3, Rational(1)},
                                          {2, -4 * (-2 * M + 1 + be) / ((7 + be) * tail)},
                                          {1, -4 / (7 + be)},
                                          {0, 8 * (1 + be) / ((7 + be) * (5 + be) * tail)}});
}

/// Compares the generated P~_1..P~_3, lambda~_1..3 and b~_0 against the
/// closed forms, and b~_0 against mu_1/mu_0.
inline std::vector<CheckResult> verify_low_degree(const MinusOneFamily& family) {
  const auto& p = family.params();
  std::vector<CheckResult> out;
  auto record = [&](std::string check, std::optional<int> n, nlohmann::ordered_json lhs,
                    nlohmann::ordered_json rhs, bool pass) {
    CheckResult r;
    r.check = std::move(check);
    r.params = to_json(p);
    r.n = n;
    r.pass = pass;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.residual = pass ? "0" : "nonzero";
    out.push_back(std::move(r));
  };

  const Rational b0 = first_recurrence_shift(p);
  record("low_degree_b0", 0, to_string(family.b(0)), to_string(b0), family.b(0) == b0);
  const auto mu = moments(1, p);
  if (mu[0] != 0) {
    const Rational ratio = mu[1] / mu[0];
    record("b0_moment_ratio", 0, to_string(family.b(0)), to_string(ratio),
           family.b(0) == ratio);
  }
  for (int n = 1; n <= 3; ++n) {
    const Rational a = lambda_tilde(n, p);
    const Rational b = lambda_tilde_factored(n, p);
    record("low_degree_lambda", n, to_string(a), to_string(b), a == b);
  }
  if (family.max_n() >= 2) {
    const auto expect = closed_form_p2(p);
    record("low_degree_poly", 2, to_json(family.poly(2)), to_json(expect),
           family.poly(2) == expect);
  }
  if (family.max_n() >= 3) {
    const auto expect = closed_form_p3(p);
    record("low_degree_poly", 3, to_json(family.poly(3)), to_json(expect),
           family.poly(3) == expect);
  }
  return out;
}

}  // namespace krallm1
