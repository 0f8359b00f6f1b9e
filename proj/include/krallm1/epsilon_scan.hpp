// epsilon_scan.hpp
//
// Numerical bridge from the q side to the -1 side. With q = -e^eps,
// b = -e^{beta eps}, j = 2, the reconstructed representation coefficients
// A_n^(s)(eps) / eps^3 are evaluated in MPFR and compared against the exact
// limits limit_rep_coeff(n, s).
//
// The reconstruction cancels O(1) quantities down to O(eps^3), and near a
// degenerate mass it divides by vanishing Phi values, so each table is
// computed twice at different precisions and the working precision is
// doubled until the two agree to half the requested digits.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "krallm1/minus_one.hpp"
#include "krallm1/rep_coeff.hpp"
#include "krallm1/report.hpp"
#include "krallm1/scalar.hpp"

namespace krallm1 {

struct ScaledTable {
  std::map<std::pair<int, int>, PrecisionFloat> values;  // A_n^(s)(eps)/eps^3
  unsigned digits_used = 0;
  double agreement_digits = 0;  // digits shared by the last two precisions
  bool precision_warning = false;
};

namespace detail {

inline std::map<std::pair<int, int>, PrecisionFloat> scaled_table_at(
    const MinusOneParams& p, int max_n, const std::string& eps_text, unsigned digits) {
  PrecisionScope scope(digits);
  const PrecisionFloat eps = parse_float(eps_text);
  QJacobiParams<PrecisionFloat> qp;
  qp.q = -exp(eps);
  qp.b = -exp(to_float(p.beta) * eps);
  qp.j = MinusOneParams::kJ;
  qp.M = to_float(p.M);
  const auto table = rep_coeff_reconstruct(qp, max_n);
  const PrecisionFloat eps3 = eps * eps * eps;
  std::map<std::pair<int, int>, PrecisionFloat> out;
  for (const auto& [key, entry] : table.entries()) out.emplace(key, entry.value / eps3);
  return out;
}

}  // namespace detail

/// A_n^(s)(eps)/eps^3 for all s <= n <= max_n, at no fewer than `digits`
/// significant digits.
inline ScaledTable scaled_rep_table(const MinusOneParams& p, int max_n,
                                    const std::string& eps_text, unsigned digits) {
  constexpr int kMaxRounds = 5;
  const double target = digits / 2.0;
  ScaledTable result;
  unsigned working = digits;
  for (int round = 0; round < kMaxRounds; ++round) {
    const auto lo = detail::scaled_table_at(p, max_n, eps_text, working);
    const unsigned hi_digits = working + std::max(20u, working / 2);
    auto hi = detail::scaled_table_at(p, max_n, eps_text, hi_digits);
    PrecisionScope scope(hi_digits);
    double agreement = hi_digits;
    for (const auto& [key, value] : hi) {
      const PrecisionFloat diff = abs(value - lo.at(key));
      if (diff == 0) continue;
      const PrecisionFloat scale = std::max<PrecisionFloat>(PrecisionFloat(1), abs(value));
      agreement = std::min(agreement, -log10(diff / scale).convert_to<double>());
    }
    result.values = std::move(hi);
    result.digits_used = hi_digits;
    result.agreement_digits = agreement;
    if (agreement >= target) return result;
    working *= 2;
  }
  result.precision_warning = true;
  return result;
}

/// Per-(n, s) scan over eps_list (positive, decreasing): deviations from the
/// limit, empirical convergence orders, and a pass flag requiring
/// non-increasing deviations and a final deviation within rel_tol of |limit|
/// (absolute when the limit is 0). Deviations below 10^{-digits/3} count as 0.
inline std::vector<CheckResult> epsilon_scan_grid(const MinusOneParams& p, int max_n,
                                                  int max_s,
                                                  const std::vector<std::string>& eps_list,
                                                  unsigned digits, double rel_tol = 1e-2) {
  {
    PrecisionScope scope(digits);
    PrecisionFloat last(0);
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
      const PrecisionFloat e = parse_float(eps_list[i]);
      if (e <= 0 || (i > 0 && e >= last)) {
        throw ParseError("eps list must be positive and strictly decreasing");
      }
      last = e;
    }
  }
  std::vector<ScaledTable> tables;
  tables.reserve(eps_list.size());
  for (const auto& eps : eps_list) tables.push_back(scaled_rep_table(p, max_n, eps, digits));

  PrecisionScope scope(digits);
  const PrecisionFloat noise_floor = pow(PrecisionFloat(10), -static_cast<int>(digits / 3));
  std::vector<CheckResult> results;
  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= std::min(n, max_s); ++s) {
      const Rational limit = limit_rep_coeff(n, s, p);
      const PrecisionFloat limit_f = to_float(limit);
      const PrecisionFloat scale = limit == 0 ? PrecisionFloat(1) : abs(limit_f);

      std::vector<PrecisionFloat> deviations;
      nlohmann::ordered_json points = nlohmann::ordered_json::array();
      bool warning = false;
      for (std::size_t i = 0; i < eps_list.size(); ++i) {
        const auto& value = tables[i].values.at({n, s});
        PrecisionFloat dev = abs(value - limit_f);
        if (dev < noise_floor) dev = 0;
        warning = warning || tables[i].precision_warning;
        points.push_back({{"eps", eps_list[i]},
                          {"scaled", to_string(value, 30)},
                          {"deviation", to_string(dev, 6)},
                          {"digits", tables[i].digits_used},
                          {"precision_warning", tables[i].precision_warning}});
        deviations.push_back(std::move(dev));
      }

      bool monotone = true;
      nlohmann::ordered_json orders = nlohmann::ordered_json::array();
      for (std::size_t i = 1; i < deviations.size(); ++i) {
        monotone = monotone && deviations[i] <= deviations[i - 1];
        if (deviations[i] > 0 && deviations[i - 1] > 0) {
          const PrecisionFloat e0 = parse_float(eps_list[i - 1]);
          const PrecisionFloat e1 = parse_float(eps_list[i]);
          orders.push_back(
              to_string(log(deviations[i - 1] / deviations[i]) / log(e0 / e1), 6));
        } else {
          orders.push_back(nullptr);
        }
      }
      const bool within = deviations.empty() || deviations.back() <= rel_tol * scale;

      CheckResult r;
      r.check = "epsilon_scan";
      r.params = to_json(p);
      r.n = n;
      r.pass = monotone && within && !warning;
      r.lhs = deviations.empty() ? "" : to_string(tables.back().values.at({n, s}), 30);
      r.rhs = to_string(limit);
      r.residual = deviations.empty() ? "" : to_string(deviations.back(), 6);
      r.detail = {{"s", s},
                  {"points", points},
                  {"orders", orders},
                  {"monotone", monotone},
                  {"within_tolerance", within},
                  {"precision_warning", warning}};
      results.push_back(std::move(r));
    }
  }
  return results;
}

inline CheckResult epsilon_scan(int n, int s, const MinusOneParams& p,
                                const std::vector<std::string>& eps_list, unsigned digits,
                                double rel_tol = 1e-2) {
  auto all = epsilon_scan_grid(p, n, s, eps_list, digits, rel_tol);
  for (auto& r : all) {
    if (*r.n == n && r.detail["s"] == s) return r;
  }
  throw DegenerateParameters("epsilon_scan: (n, s) = (" + std::to_string(n) + ", " +
                             std::to_string(s) + ") is outside 0 <= s <= n");
}

}  // namespace krallm1
