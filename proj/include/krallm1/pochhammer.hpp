// pochhammer.hpp
//
// Rising factorial, q-shifted factorial and the parity indicator.

#pragma once

#include "krallm1/scalar.hpp"

namespace krallm1 {

/// (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
template <class T>
T poch(const T& x, unsigned n) {
  T result(1);
  for (unsigned i = 0; i < n; ++i) result *= x + T(i);
  return result;
}

/// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); (a;q)_0 = 1.
template <class T>
T qpoch(const T& a, const T& q, unsigned n) {
  T result(1);
  T term = a;
  for (unsigned i = 0; i < n; ++i) {
    result *= T(1) - term;
    term *= q;
  }
  return result;
}

/// (1 - (-1)^n)/2.
inline Rational theta(unsigned n) { return Rational(n % 2); }

}  // namespace krallm1
