// qjacobi.hpp
//
// Monic little q-Jacobi polynomials P_n(x; a, b), the values of their
// second-kind functions at the origin, and the Geronimus transform at c = 0
// with mass parameter M for a = q^j.
//
// Everything is templated on the scalar so the same code path serves exact
// rational checks and the high-precision q -> -1 scan.

#pragma once

#include <string>

#include "krallm1/errors.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/pochhammer.hpp"
#include "krallm1/scalar.hpp"

namespace krallm1 {

/// Little q-Jacobi parameters with independent a.
template <class T>
struct LittleQJacobiParams {
  T q;
  T a;
  T b;
};

/// Parameters of the transformed family: a = q^j, Geronimus mass M.
template <class T>
struct QJacobiParams {
  T q;
  T b;
  int j = 1;
  T M;

  T a() const { return ipow(q, j); }
  LittleQJacobiParams<T> base() const { return {q, a(), b}; }

  /// 0 < aq < 1 and b < 1/q. Advisory only; nothing enforces it.
  bool in_classical_window() const {
    const T aq = a() * q;
    return aq > 0 && aq < 1 && q > 0 && b < T(1) / q;
  }

  void validate() const {
    if (q == 0 || q == 1 || q == -1) {
      throw DegenerateParameters("q must avoid 0, 1 and -1");
    }
    if (j < 1) throw DegenerateParameters("j must be a positive integer");
    if (b == 0) throw DegenerateParameters("b must be nonzero");
  }
};

template <class T>
struct RecurrenceCoeffs {
  T u;
  T b;
};

namespace detail {

template <class T>
void require_nonzero(const T& value, const std::string& what) {
  if (value == 0) throw DegenerateParameters(what + " vanishes");
}

}  // namespace detail

/// B_n^(s): coefficient of x^{n-s} in the monic P_n(x; a, b).
template <class T>
T lqj_coeff(int n, int s, const LittleQJacobiParams<T>& p) {
  if (s < 0 || s > n) return T(0);
  if (s == 0) return T(1);
  const auto su = static_cast<unsigned>(s);
  detail::require_nonzero(p.a, "a");
  detail::require_nonzero(p.b, "b");
  const T qn_inv = ipow(p.q, -n);
  const T den1 = qpoch(p.q, p.q, su);
  detail::require_nonzero(den1, "(q;q)_" + std::to_string(s));
  const T den2 = qpoch(ipow(p.q, -2 * n) / (p.a * p.b), p.q, su);
  detail::require_nonzero(den2, "(a^-1 b^-1 q^-2n;q)_" + std::to_string(s) +
                                    " at n=" + std::to_string(n));
  const T num = qpoch(qn_inv, p.q, su) * qpoch(qn_inv / p.a, p.q, su);
  return ipow(p.b, -s) * num / (den1 * den2);
}

template <class T>
LaurentPoly<T> lqj_poly(int n, const LittleQJacobiParams<T>& p) {
  LaurentPoly<T> poly;
  for (int s = 0; s <= n; ++s) poly.set(n - s, lqj_coeff(n, s, p));
  return poly;
}

/// u_n = A_{n-1} C_n and b_n = A_n + C_n of x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}.
template <class T>
RecurrenceCoeffs<T> lqj_recurrence(int n, const LittleQJacobiParams<T>& p) {
  const T& q = p.q;
  const T ab = p.a * p.b;
  auto big_a = [&](int m) {
    const T den = (T(1) - ab * ipow(q, 2 * m + 1)) * (T(1) - ab * ipow(q, 2 * m + 2));
    detail::require_nonzero(den, "(1-abq^{2n+1})(1-abq^{2n+2}) at n=" + std::to_string(m));
    return ipow(q, m) * (T(1) - p.a * ipow(q, m + 1)) * (T(1) - ab * ipow(q, m + 1)) / den;
  };
  auto big_c = [&](int m) {
    if (m == 0) return T(0);
    const T den = (T(1) - ab * ipow(q, 2 * m + 1)) * (T(1) - ab * ipow(q, 2 * m));
    detail::require_nonzero(den, "(1-abq^{2n+1})(1-abq^{2n}) at n=" + std::to_string(m));
    return p.a * ipow(q, m) * (T(1) - ipow(q, m)) * (T(1) - p.b * ipow(q, m)) / den;
  };
  const T cn = big_c(n);
  RecurrenceCoeffs<T> r{T(0), big_a(n) + cn};
  if (n > 0) r.u = big_a(n - 1) * cn;
  return r;
}

/// Q_n(0; a, b), closed form of -sum_k P_n(q^k) w_k / q^k.
template <class T>
T qn_zero(int n, const LittleQJacobiParams<T>& p) {
  const T& q = p.q;
  const T ab = p.a * p.b;
  const auto nu = static_cast<unsigned>(n);
  detail::require_nonzero(T(1) - p.a, "1-a");
  const T den = qpoch(ab * q, q, nu) * qpoch(ab * ipow(q, n + 1), q, nu);
  detail::require_nonzero(den, "(abq;q)_n (abq^{n+1};q)_n at n=" + std::to_string(n));
  const T sign = n % 2 == 0 ? T(-1) : T(1);
  return sign * ipow(p.a, n) * ipow(q, n * (n - 1) / 2) * (T(1) - ab * q) /
         (T(1) - p.a) * qpoch(q, q, nu) * qpoch(p.b * q, q, nu) / den;
}

template <class T>
T qn_zero(int n, const QJacobiParams<T>& p) {
  return qn_zero(n, p.base());
}

/// Phi_n = Q_n(0; q^j, b) + M P_n(0; q^j, b) in closed form.
template <class T>
T phi(int n, const QJacobiParams<T>& p) {
  const T& q = p.q;
  const auto nu = static_cast<unsigned>(n);
  const auto ju = static_cast<unsigned>(p.j);
  const T qj = ipow(q, p.j);
  detail::require_nonzero(T(1) - qj, "1-q^j");
  const T outer_den = qpoch(p.b * ipow(q, n + p.j + 1), q, nu);
  detail::require_nonzero(outer_den, "(bq^{n+j+1};q)_n at n=" + std::to_string(n));
  const T inner_den = (T(1) - qj) * qpoch(ipow(q, n + 1), q, ju) *
                      qpoch(p.b * ipow(q, n + 1), q, ju);
  detail::require_nonzero(inner_den,
                          "(1-q^j)(q^{n+1};q)_j(bq^{n+1};q)_j at n=" + std::to_string(n));
  const T sign = n % 2 == 0 ? T(1) : T(-1);
  const T pole = ipow(q, n * p.j) * (T(1) - p.b * ipow(q, p.j + 1)) *
                 qpoch(p.b * q, q, ju) * qpoch(q, q, ju) / inner_den;
  return sign * ipow(q, n * (n - 1) / 2) * qpoch(ipow(q, p.j + 1), q, nu) /
         outer_den * (p.M - pole);
}

/// Phi_n / Phi_{n-1}, n >= 1.
template <class T>
T geronimus_ratio(int n, const QJacobiParams<T>& p) {
  const T prev = phi(n - 1, p);
  if (prev == 0) {
    throw GeronimusDegenerate(n, "Phi_" + std::to_string(n - 1) + " = 0");
  }
  return phi(n, p) / prev;
}

/// P~_n = P_n - (Phi_n / Phi_{n-1}) P_{n-1}; P~_0 = 1.
template <class T>
LaurentPoly<T> geronimus(int n, const QJacobiParams<T>& p) {
  const auto base = p.base();
  if (n == 0) return LaurentPoly<T>(T(1));
  return lqj_poly(n, base) - geronimus_ratio(n, p) * lqj_poly(n - 1, base);
}

/// Recurrence x P~_n = P~_{n+1} + b~_n P~_n + u~_n P~_{n-1} of the transformed
/// family; u~_0 is reported as 0.
template <class T>
RecurrenceCoeffs<T> transformed_recurrence(int n, const QJacobiParams<T>& p) {
  const auto base = p.base();
  if (n == 0) {
    return {T(0), lqj_recurrence(0, base).b + geronimus_ratio(1, p)};
  }
  RecurrenceCoeffs<T> r;
  r.b = lqj_recurrence(n, base).b + geronimus_ratio(n + 1, p) - geronimus_ratio(n, p);
  if (n == 1) {
    const T phi0 = phi(0, p);
    if (phi0 == 0) throw GeronimusDegenerate(1, "Phi_0 = 0");
    r.u = phi(1, p) / (phi0 * phi0);
  } else {
    const T prev = geronimus_ratio(n - 1, p);
    if (prev == 0) {
      throw GeronimusDegenerate(n, "Phi_" + std::to_string(n - 1) + " = 0");
    }
    r.u = lqj_recurrence(n - 1, base).u * geronimus_ratio(n, p) / prev;
  }
  return r;
}

}  // namespace krallm1
