// verify.hpp
//
// Verification sweeps that bundle the per-module checks into reports. A
// named krallm1::Error aborts a sweep; the checks gathered before it stay in
// the report and the error is attached.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "krallm1/epsilon_scan.hpp"
#include "krallm1/l0_operator.hpp"
#include "krallm1/low_degree.hpp"
#include "krallm1/matrix_op.hpp"
#include "krallm1/minus_one.hpp"
#include "krallm1/moments.hpp"
#include "krallm1/qjacobi.hpp"
#include "krallm1/quadrature.hpp"
#include "krallm1/rep_coeff.hpp"
#include "krallm1/report.hpp"

namespace krallm1 {

inline nlohmann::ordered_json to_json(const QJacobiParams<Rational>& p) {
  return {{"q", to_string(p.q)}, {"b", to_string(p.b)}, {"j", p.j}, {"M", to_string(p.M)}};
}

/// apply_L0_monomial(x^n) == apply_L0_operator(x^n).
inline CheckResult dual_operator_check(int n, const MinusOneParams& p) {
  const auto mono = RationalPoly::monomial(n);
  const RationalPoly lhs = apply_L0_monomial(mono, p);
  const RationalPoly rhs = apply_L0_operator(mono, p);
  CheckResult r;
  r.check = "dual_operator";
  r.params = to_json(p);
  r.n = n;
  r.pass = lhs == rhs;
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.residual = to_json(lhs - rhs);
  return r;
}

/// Row n of the Gram matrix: zero off the diagonal, mu_0 u~_1...u~_n on it.
inline CheckResult orthogonality_check(int n, const std::vector<std::vector<Rational>>& gram,
                                       const MinusOneFamily& family,
                                       const MomentSequence& mu) {
  const auto row = static_cast<std::size_t>(n);
  Rational norm = mu[0];
  for (int i = 1; i <= n; ++i) {
    norm *= i < family.max_n() ? family.u(i)
                               : transformed_recurrence_m1(i, family.params()).u;
  }
  nlohmann::ordered_json off = nlohmann::ordered_json::array();
  bool pass = gram[row][row] == norm;
  for (std::size_t m = 0; m < gram.size(); ++m) {
    if (m == row || gram[row][m] == 0) continue;
    pass = false;
    off.push_back({{"m", m}, {"value", to_string(gram[row][m])}});
  }
  CheckResult r;
  r.check = "orthogonality";
  r.params = to_json(family.params());
  r.n = n;
  r.pass = pass;
  r.lhs = to_string(gram[row][row]);
  r.rhs = to_string(norm);
  r.residual = to_string(gram[row][row] - norm);
  if (!off.empty()) r.detail = {{"nonzero_off_diagonal", off}};
  return r;
}

namespace detail {

inline void attach(VerificationReport& report, const Error& e) {
  ReportError err{e.kind(), e.what(), std::nullopt};
  if (const auto* g = dynamic_cast<const GeronimusDegenerate*>(&e)) err.n = g->n();
  if (const auto* d = dynamic_cast<const NotPositiveDefinite*>(&e)) err.n = d->index();
  report.set_error(std::move(err));
}

}  // namespace detail

/// Dual-operator agreement, eigen identity, orthogonality and the low-degree
/// closed forms for n = 0..max_n.
inline VerificationReport verify_m1(const MinusOneParams& p, int max_n) {
  VerificationReport report("verify-m1");
  try {
    for (int n = 0; n <= max_n; ++n) report.add(dual_operator_check(n, p));
    const auto family = MinusOneFamily::build(p, max_n);
    for (int n = 0; n <= max_n; ++n) report.add(verify_eigen_m1(n, family));
    const auto mu = moments(2 * max_n, p);
    const auto gram = gram_matrix(family, mu);
    for (int n = 0; n <= max_n; ++n) report.add(orthogonality_check(n, gram, family, mu));
    for (auto& r : verify_low_degree(family)) report.add(std::move(r));
  } catch (const Error& e) {
    detail::attach(report, e);
  }
  return report;
}

/// Closed-form vs reconstructed representation coefficients, the recurrence
/// of the Geronimus family, and the eigen relation L_q P~_n = lambda_n P~_n.
/// Shifts the closed forms do not cover are taken from the reconstruction.
inline VerificationReport verify_q(const QJacobiParams<Rational>& p, int max_n) {
  VerificationReport report("verify-q");
  try {
    const auto closed = rep_coeff_closed_form(p, max_n);
    const auto rebuilt = rep_coeff_reconstruct(p, max_n);
    const auto mismatches = compare_tables(closed, rebuilt);
    for (int n = 0; n <= max_n; ++n) {
      CheckResult r;
      r.check = "rep_table_agreement";
      r.params = to_json(p);
      r.n = n;
      nlohmann::ordered_json bad = nlohmann::ordered_json::array();
      for (const auto& m : mismatches) {
        if (m.n != n) continue;
        bad.push_back({{"s", m.s},
                       {"closed_form", to_string(m.closed_form)},
                       {"reconstructed", to_string(m.reconstructed)}});
      }
      r.pass = bad.empty();
      r.lhs = "closed_form";
      r.rhs = "reconstructed";
      r.residual = bad.size();
      if (!bad.empty()) r.detail = {{"mismatches", bad}};
      report.add(std::move(r));
    }

    RepCoeffTable<Rational> merged(max_n);
    for (const auto& [key, e] : rebuilt.entries()) {
      auto c = closed.lookup(key.first, key.second);
      merged.set(key.first, key.second, c ? *c : e.value,
                 c ? CoeffSource::closed_form : CoeffSource::reconstructed);
    }

    std::vector<RationalPoly> family;
    for (int n = 0; n <= max_n + 1; ++n) family.push_back(geronimus(n, p));
    for (int n = 0; n <= max_n; ++n) {
      const auto rc = transformed_recurrence(n, p);
      const auto& pn = family[static_cast<std::size_t>(n)];
      RationalPoly rhs = family[static_cast<std::size_t>(n + 1)] + rc.b * pn;
      if (n > 0) rhs += rc.u * family[static_cast<std::size_t>(n - 1)];
      const RationalPoly lhs = pn.shifted(1);
      CheckResult r;
      r.check = "recurrence_q";
      r.params = to_json(p);
      r.n = n;
      r.pass = lhs == rhs;
      r.lhs = to_json(lhs);
      r.rhs = to_json(rhs);
      r.residual = to_json(lhs - rhs);
      report.add(std::move(r));
    }
    for (int n = 0; n <= max_n; ++n) {
      const auto& pn = family[static_cast<std::size_t>(n)];
      const RationalPoly lhs = apply_Lq(pn, merged);
      const RationalPoly rhs = merged.lambda(n) * pn;
      CheckResult r;
      r.check = "eigen_q";
      r.params = to_json(p);
      r.n = n;
      r.pass = lhs == rhs;
      r.lhs = to_json(lhs);
      r.rhs = to_json(rhs);
      r.residual = to_json(lhs - rhs);
      report.add(std::move(r));
    }
  } catch (const Error& e) {
    detail::attach(report, e);
  }
  return report;
}

inline VerificationReport limit_scan(const MinusOneParams& p, int max_n, int max_s,
                                     const std::vector<std::string>& eps_list,
                                     unsigned digits, double rel_tol) {
  VerificationReport report("limit-scan");
  try {
    for (auto& r : epsilon_scan_grid(p, max_n, max_s, eps_list, digits, rel_tol)) {
      report.add(std::move(r));
    }
  } catch (const Error& e) {
    detail::attach(report, e);
  }
  return report;
}

/// Five-term relation for n = 0..2 max_n + 1 and the matrix recurrence for
/// n = 0..max_n at a fixed point.
inline VerificationReport matrix_verify(const MinusOneParams& p, int max_n, unsigned digits,
                                        const std::string& tol_text) {
  VerificationReport report("matrix-verify");
  try {
    const auto sys = FiveTermSystem::build(p, 2 * max_n + 3, digits);
    PrecisionScope scope(digits);
    const PrecisionFloat tol = parse_float(tol_text);
    for (int n = 0; n <= 2 * max_n + 1; ++n) report.add(five_term_check(n, sys, tol));
    for (int n = 0; n <= max_n; ++n) report.add(matrix_recurrence_check(n, sys, tol));
  } catch (const Error& e) {
    detail::attach(report, e);
  }
  return report;
}

inline VerificationReport quadrature_verify(const MinusOneParams& p, int max_n,
                                            unsigned digits, const std::string& tol_text) {
  VerificationReport report("quadrature");
  try {
    PrecisionScope scope(digits);
    const PrecisionFloat tol = parse_float(tol_text);
    for (int n = 0; n <= max_n; ++n) report.add(quadrature_moment_check(n, p, tol, digits));
  } catch (const Error& e) {
    detail::attach(report, e);
  }
  return report;
}

}  // namespace krallm1
