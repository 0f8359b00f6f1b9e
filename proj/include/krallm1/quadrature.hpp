// quadrature.hpp
//
// Continuous weight of the -1 Krall-Jacobi family,
//
//     w(x) = k~ ( |x| (1-x^2)^{(beta-1)/2} (1+x) - 4M/((1+beta)(3+beta)) delta(x) ),
//     k~ = (beta+1)/2,
//
// and a quadrature check of its moments against the exact moment sequence.
// The integral is split at the kink x = 0; each half carries the endpoint
// factor (1-x)^{(beta-1)/2}, which a Gauss-Jacobi rule absorbs exactly.

#pragma once

#include <Eigen/Eigenvalues>

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "krallm1/errors.hpp"
#include "krallm1/minus_one_params.hpp"
#include "krallm1/moments.hpp"
#include "krallm1/report.hpp"
#include "krallm1/scalar.hpp"

namespace krallm1 {

struct QuadratureRule {
  std::vector<PrecisionFloat> nodes;
  std::vector<PrecisionFloat> weights;
};

namespace detail {

/// P_n^{(alpha,beta)}(x) and its derivative by the three-term recurrence.
inline std::pair<PrecisionFloat, PrecisionFloat> jacobi_value_and_derivative(
    unsigned n, const PrecisionFloat& alpha, const PrecisionFloat& beta,
    const PrecisionFloat& x) {
  const PrecisionFloat ab = alpha + beta;
  PrecisionFloat prev(1);
  PrecisionFloat cur = (alpha - beta + (ab + 2) * x) / 2;
  if (n == 0) return {prev, PrecisionFloat(0)};
  for (unsigned k = 2; k <= n; ++k) {
    const PrecisionFloat kk(k);
    const PrecisionFloat c = 2 * kk + ab;
    const PrecisionFloat a1 = 2 * kk * (kk + ab) * (c - 2);
    const PrecisionFloat a2 = (c - 1) * (alpha * alpha - beta * beta);
    const PrecisionFloat a3 = (c - 2) * (c - 1) * c;
    const PrecisionFloat a4 = 2 * (kk + alpha - 1) * (kk + beta - 1) * c;
    PrecisionFloat next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const PrecisionFloat nn(n);
  const PrecisionFloat c = 2 * nn + ab;
  const PrecisionFloat deriv =
      (nn * (alpha - beta - c * x) * cur + 2 * (nn + alpha) * (nn + beta) * prev) /
      (c * (1 - x * x));
  return {cur, deriv};
}

/// Golub-Welsch nodes in double precision, used as Newton seeds.
inline std::vector<double> jacobi_seed_nodes(unsigned n, double alpha, double beta) {
  Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
  const double ab = alpha + beta;
  for (unsigned k = 0; k < n; ++k) {
    const double c = 2.0 * k + ab;
    jm(k, k) = k == 0 ? (beta - alpha) / (ab + 2.0)
                      : (beta * beta - alpha * alpha) / (c * (c + 2.0));
    if (k + 1 < n) {
      const double m = k + 1.0;
      const double cm = 2.0 * m + ab;
      const double sq = m == 1.0
                            ? 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
                            : 4.0 * m * (m + alpha) * (m + beta) * (m + ab) /
                                  (cm * cm * (cm + 1.0) * (cm - 1.0));
      jm(k, k + 1) = jm(k + 1, k) = std::sqrt(sq);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jm, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace detail

/// Gauss-Jacobi rule for int_{-1}^{1} (1-t)^alpha (1+t)^beta f(t) dt at the
/// current PrecisionFloat working precision.
inline QuadratureRule gauss_jacobi(unsigned n, const PrecisionFloat& alpha,
                                   const PrecisionFloat& beta) {
  if (alpha <= -1 || beta <= -1) {
    throw IntegrabilityError("Gauss-Jacobi exponents must exceed -1");
  }
  const auto seeds = detail::jacobi_seed_nodes(n, alpha.convert_to<double>(),
                                               beta.convert_to<double>());
  const PrecisionFloat eps =
      pow(PrecisionFloat(10), -static_cast<int>(PrecisionFloat::default_precision()) + 2);
  const PrecisionFloat nn(n);
  const PrecisionFloat norm =
      pow(PrecisionFloat(2), alpha + beta + 1) * boost::math::tgamma(nn + alpha + 1) *
      boost::math::tgamma(nn + beta + 1) /
      (boost::math::tgamma(nn + alpha + beta + 1) * boost::math::tgamma(nn + 1));

  QuadratureRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  for (double seed : seeds) {
    PrecisionFloat x(seed);
    PrecisionFloat deriv;
    for (int iter = 0; iter < 100; ++iter) {
      auto [value, d] = detail::jacobi_value_and_derivative(n, alpha, beta, x);
      const PrecisionFloat step = value / d;
      x -= step;
      deriv = std::move(d);
      if (abs(step) <= eps * abs(x) + eps) break;
    }
    deriv = detail::jacobi_value_and_derivative(n, alpha, beta, x).second;
    rule.weights.push_back(norm / ((1 - x * x) * deriv * deriv));
    rule.nodes.push_back(std::move(x));
  }
  return rule;
}

inline PrecisionFloat weight_normalizer(const MinusOneParams& p) {
  return (to_float(p.beta) + 1) / 2;
}

/// Continuous part of the weight at x in (-1, 1), x != 0.
inline PrecisionFloat weight_density(const PrecisionFloat& x, const MinusOneParams& p) {
  if (p.beta <= -1) throw IntegrabilityError("weight needs beta > -1");
  if (x <= -1 || x >= 1 || x == 0) {
    throw IntegrabilityError("density is evaluated on (-1,0) and (0,1)");
  }
  const PrecisionFloat power = (to_float(p.beta) - 1) / 2;
  return weight_normalizer(p) * abs(x) * pow(1 - x * x, power) * (1 + x);
}

/// Point mass at the origin, -k~ 4M / ((1+beta)(3+beta)).
inline Rational point_mass(const MinusOneParams& p) {
  return -(p.beta + 1) / 2 * 4 * p.M / ((1 + p.beta) * (3 + p.beta));
}

/// int_{-1}^{1} w(x) x^n dx with a Gauss-Jacobi rule of `nodes` points on
/// each half of the interval.
inline PrecisionFloat weight_moment(int n, const MinusOneParams& p, unsigned nodes) {
  if (p.beta <= -1) throw IntegrabilityError("weight needs beta > -1");
  const PrecisionFloat power = (to_float(p.beta) - 1) / 2;
  const auto rule = gauss_jacobi(nodes, power, PrecisionFloat(0));
  // x in [0,1] = (1+t)/2; the -x half is folded in via (-x)^n (1-x).
  PrecisionFloat sum(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const PrecisionFloat x = (1 + rule.nodes[i]) / 2;
    const PrecisionFloat xn = pow(x, n);
    const PrecisionFloat folded = (1 + x) * xn + (1 - x) * (n % 2 == 0 ? xn : PrecisionFloat(-xn));
    sum += rule.weights[i] * x * pow(1 + x, power) * folded;
  }
  PrecisionFloat integral = weight_normalizer(p) * sum / pow(PrecisionFloat(2), power + 1);
  if (n == 0) integral += to_float(point_mass(p));
  return integral;
}

/// Adaptive moment quadrature: doubles the node count until two successive
/// estimates agree to tol/100, then compares with mu_n.
inline CheckResult quadrature_moment_check(int n, const MinusOneParams& p,
                                           const PrecisionFloat& tol, unsigned digits) {
  PrecisionScope scope(digits);
  const auto mu = moments(n, p);
  const PrecisionFloat exact = to_float(mu[static_cast<std::size_t>(n)]);
  const PrecisionFloat scale = exact == 0 ? PrecisionFloat(1) : std::max<PrecisionFloat>(PrecisionFloat(1), abs(exact));

  unsigned nodes = 8;
  PrecisionFloat estimate = weight_moment(n, p, nodes);
  for (nodes = 16; nodes <= 1024; nodes *= 2) {
    PrecisionFloat refined = weight_moment(n, p, nodes);
    const bool settled = abs(refined - estimate) <= tol * scale / 100;
    estimate = std::move(refined);
    if (settled) break;
  }
  const PrecisionFloat residual = abs(estimate - exact) / scale;

  CheckResult r;
  r.check = "quadrature_moment";
  r.params = to_json(p);
  r.n = n;
  r.pass = residual <= tol;
  const unsigned shown = std::min(digits, 40u);
  r.lhs = to_string(estimate, shown);
  r.rhs = to_string(mu[static_cast<std::size_t>(n)]);
  r.residual = to_string(residual, 6);
  r.detail = {{"nodes_per_half", std::min(nodes, 1024u)}, {"tol", to_string(tol, 6)}};
  return r;
}

}  // namespace krallm1
