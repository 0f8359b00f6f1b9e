// moments.hpp
//
// Moment functional of the -1 Krall-Jacobi family with normalization k = 1:
//
//     mu_0 = 1 - 2M/(3+beta),
//     mu_{2n} = mu_{2n-1} = (1)_n / (beta/2 + 3/2)_n,   n >= 1,
//
// the induced bilinear form on polynomials, and Hankel determinants.

#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "krallm1/errors.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/minus_one_params.hpp"
#include "krallm1/pochhammer.hpp"

namespace krallm1 {

struct MomentSequence {
  std::vector<Rational> values;
  Rational k{1};

  int max_index() const { return static_cast<int>(values.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return values.at(i); }
};

inline MomentSequence moments(int max_index, const MinusOneParams& p) {
  if (p.beta + 3 == 0) throw DegenerateParameters("3+beta vanishes");
  const Rational shift = p.beta / 2 + Rational(3, 2);
  MomentSequence mu;
  mu.values.reserve(static_cast<std::size_t>(max_index) + 1);
  mu.values.push_back(1 - 2 * p.M / (3 + p.beta));
  Rational rising = 1;  // (beta/2 + 3/2)_n
  Rational factorial = 1;
  for (int i = 1; i <= max_index; ++i) {
    const int n = (i + 1) / 2;
    if (i % 2 == 1) {
      const Rational factor = shift + (n - 1);
      if (factor == 0) {
        throw DegenerateParameters("beta/2+3/2+" + std::to_string(n - 1) + " vanishes");
      }
      rising *= factor;
      factorial *= n;
    }
    mu.values.push_back(factorial / rising);
  }
  return mu;
}

/// <p, r> = sum_{i,j} p_i r_j mu_{i+j}.
inline Rational inner_product(const RationalPoly& p, const RationalPoly& r,
                              const MomentSequence& mu) {
  if (!p.is_proper() || !r.is_proper()) {
    throw NonPolynomialOutput("inner_product needs proper polynomials");
  }
  if (p.is_zero() || r.is_zero()) return 0;
  const int needed = *p.degree() + *r.degree();
  if (needed > mu.max_index()) throw InsufficientMoments(needed, mu.max_index());
  Rational acc = 0;
  for (const auto& [i, a] : p.terms()) {
    for (const auto& [j, b] : r.terms()) {
      acc += a * b * mu[static_cast<std::size_t>(i + j)];
    }
  }
  return acc;
}

/// Exact determinant by Gaussian elimination over the rationals.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return det;
}

/// det(mu_{i+j})_{i,j=0..m} for m = 0..max_order.
inline std::vector<Rational> hankel_dets(int max_order, const MomentSequence& mu) {
  if (2 * max_order > mu.max_index()) {
    throw InsufficientMoments(2 * max_order, mu.max_index());
  }
  std::vector<Rational> dets;
  for (int m = 0; m <= max_order; ++m) {
    const auto size = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<Rational>> h(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) h[i][j] = mu[i + j];
    }
    dets.push_back(determinant(std::move(h)));
  }
  return dets;
}

inline std::vector<Rational> hankel_dets(int max_order, const MinusOneParams& p) {
  return hankel_dets(max_order, moments(2 * max_order, p));
}

inline bool is_positive_definite(const std::vector<Rational>& dets) {
  for (const auto& d : dets) {
    if (d <= 0) return false;
  }
  return true;
}

/// CSV "n,mu" with one row per moment.
inline std::string to_csv(const MomentSequence& mu) {
  std::ostringstream os;
  os << "n,mu\n";
  for (std::size_t i = 0; i < mu.values.size(); ++i) {
    os << i << ',' << to_string(mu.values[i]) << '\n';
  }
  return os.str();
}

}  // namespace krallm1
