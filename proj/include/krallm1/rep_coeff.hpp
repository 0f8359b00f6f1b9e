// rep_coeff.hpp
//
// Representation coefficients A_n^(s) of the q-difference operator L_q
// whose eigenfunctions are the Geronimus-transformed little q-Jacobi
// polynomials:
//
//     L_q x^n = sum_s A_n^(s) x^{n-s},   A_n^(0) = lambda_n.
//
// Two independent sources fill a RepCoeffTable: the closed forms for
// s = 0, 1, 2 (with A_n^(s) = 0 for s >= j+2), and an exact inversion of the
// eigen relation L_q P~_n = lambda_n P~_n that recovers every entry.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krallm1/errors.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/qjacobi.hpp"

namespace krallm1 {

enum class CoeffSource { closed_form, reconstructed, zero, absent };

inline const char* to_string(CoeffSource s) {
  switch (s) {
    case CoeffSource::closed_form: return "closed_form";
    case CoeffSource::reconstructed: return "reconstructed";
    case CoeffSource::zero: return "zero";
    case CoeffSource::absent: return "absent";
  }
  return "absent";
}

template <class T>
class RepCoeffTable {
 public:
  struct Entry {
    T value;
    CoeffSource source;
  };

  RepCoeffTable() = default;
  explicit RepCoeffTable(int max_n) : max_n_(max_n) {}

  int max_n() const noexcept { return max_n_; }

  /// Largest shift actually stored.
  int max_s() const {
    int m = 0;
    for (const auto& [key, e] : entries_) m = std::max(m, key.second);
    return m;
  }

  /// Entries with s >= shift are identically zero beyond what is stored.
  void set_zero_from(int shift) { zero_from_ = shift; }
  std::optional<int> zero_from() const noexcept { return zero_from_; }

  void set(int n, int s, T value, CoeffSource source) {
    entries_[{n, s}] = Entry{std::move(value), source};
  }

  void mark_absent(int n, int s) { entries_[{n, s}] = Entry{T(0), CoeffSource::absent}; }

  bool has(int n, int s) const {
    auto it = entries_.find({n, s});
    if (it != entries_.end()) return it->second.source != CoeffSource::absent;
    return zero_from_ && s >= *zero_from_;
  }

  bool is_absent(int n, int s) const {
    auto it = entries_.find({n, s});
    return it != entries_.end() && it->second.source == CoeffSource::absent;
  }

  std::optional<T> lookup(int n, int s) const {
    auto it = entries_.find({n, s});
    if (it != entries_.end()) {
      if (it->second.source == CoeffSource::absent) return std::nullopt;
      return it->second.value;
    }
    if (zero_from_ && s >= *zero_from_) return T(0);
    return std::nullopt;
  }

  T at(int n, int s) const {
    auto v = lookup(n, s);
    if (!v) throw IncompleteTable({{n, s}});
    return *v;
  }

  /// The eigenvalue lambda_n = A_n^(0).
  T lambda(int n) const { return at(n, 0); }

  const std::map<std::pair<int, int>, Entry>& entries() const noexcept {
    return entries_;
  }

 private:
  int max_n_ = 0;
  std::optional<int> zero_from_;
  std::map<std::pair<int, int>, Entry> entries_;
};

/// lambda_n = A_n^(0) in closed form.
template <class T>
T rep_coeff_lambda(int n, const QJacobiParams<T>& p) {
  const T& q = p.q;
  const auto j = p.j;
  const T qn = ipow(q, n);
  const T first = p.M * (q - T(1)) * ipow(q, -n * (j + 1) - 1) *
                  qpoch(qn, q, static_cast<unsigned>(j + 1)) *
                  qpoch(p.b * qn, q, static_cast<unsigned>(j + 1)) /
                  (T(1) - ipow(q, -j - 1));
  const T second = (ipow(q, -n) - T(1)) * (T(1) - p.b * ipow(q, n + j)) *
                   qpoch(p.b * q, q, static_cast<unsigned>(j + 1)) *
                   qpoch(q, q, static_cast<unsigned>(j - 1));
  return first - second;
}

template <class T>
T rep_coeff_shift1(int n, const QJacobiParams<T>& p) {
  const T& q = p.q;
  const auto ju = static_cast<unsigned>(p.j);
  const T mass_part = p.M * ipow(q, p.j * (1 - n)) * qpoch(ipow(q, n + 1), q, ju) *
                      qpoch(p.b * ipow(q, n), q, ju) * (T(1) - ipow(q, n - 1));
  const T base_part = qpoch(q, q, ju - 1) * qpoch(p.b * q, q, ju + 1) *
                      (T(1) - ipow(q, n + p.j - 1));
  return (T(1) - ipow(q, -n)) * (mass_part - base_part);
}

template <class T>
T rep_coeff_shift2(int n, const QJacobiParams<T>& p) {
  const T& q = p.q;
  const auto j = p.j;
  return p.M * (q - T(1)) * ipow(q, (2 - n) * (j + 1) - 1) * (T(1) - ipow(q, -j)) *
         qpoch(ipow(q, n - 2), q, static_cast<unsigned>(j + 3)) *
         qpoch(p.b * ipow(q, n), q, static_cast<unsigned>(j - 1)) / qpoch(q, q, 2u);
}

/// Closed-form table for n <= max_n: A^(0), A^(1), A^(2) as stated, zeros
/// for s >= j+2, and ABSENT for the unstated shifts 2 < s < j+2.
template <class T>
RepCoeffTable<T> rep_coeff_closed_form(const QJacobiParams<T>& p, int max_n) {
  p.validate();
  RepCoeffTable<T> table(max_n);
  table.set_zero_from(p.j + 2);
  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= n; ++s) {
      if (s >= p.j + 2) {
        table.set(n, s, T(0), CoeffSource::zero);
        continue;
      }
      switch (s) {
        case 0: table.set(n, 0, rep_coeff_lambda(n, p), CoeffSource::closed_form); break;
        case 1: table.set(n, 1, rep_coeff_shift1(n, p), CoeffSource::closed_form); break;
        case 2: table.set(n, 2, rep_coeff_shift2(n, p), CoeffSource::closed_form); break;
        default: table.mark_absent(n, s); break;
      }
    }
  }
  return table;
}

/// Recovers every A_n^(r), r <= n, from lambda_n and the Geronimus
/// polynomials by the triangular system
///     A_n^(r) = lambda_n B~_n^(r) - sum_{t=1}^{r} B~_n^(t) A_{n-t}^(r-t).
template <class T>
RepCoeffTable<T> rep_coeff_reconstruct(const QJacobiParams<T>& p, int max_n) {
  p.validate();
  RepCoeffTable<T> table(max_n);
  std::vector<LaurentPoly<T>> family;
  family.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) family.push_back(geronimus(n, p));
  for (int n = 0; n <= max_n; ++n) {
    const T lambda = rep_coeff_lambda(n, p);
    const auto& poly = family[static_cast<std::size_t>(n)];
    for (int r = 0; r <= n; ++r) {
      T value = lambda * poly.coeff(n - r);
      for (int t = 1; t <= r; ++t) {
        value -= poly.coeff(n - t) * table.at(n - t, r - t);
      }
      table.set(n, r, std::move(value), CoeffSource::reconstructed);
    }
  }
  return table;
}

/// Linear extension of L_q x^n = sum_s A_n^(s) x^{n-s}.
template <class T>
LaurentPoly<T> apply_Lq(const LaurentPoly<T>& poly, const RepCoeffTable<T>& table) {
  if (!poly.is_proper()) {
    throw NonPolynomialOutput("apply_Lq needs a proper polynomial");
  }
  std::vector<std::pair<int, int>> missing;
  LaurentPoly<T> out;
  for (const auto& [n, c] : poly.terms()) {
    for (int s = 0; s <= n; ++s) {
      auto a = table.lookup(n, s);
      if (!a) {
        missing.emplace_back(n, s);
        continue;
      }
      out.add_term(n - s, c * *a);
    }
  }
  if (!missing.empty()) throw IncompleteTable(std::move(missing));
  return out;
}

template <class T>
struct TableMismatch {
  int n;
  int s;
  T closed_form;
  T reconstructed;
};

/// Entries where both tables carry a value and disagree exactly.
template <class T>
std::vector<TableMismatch<T>> compare_tables(const RepCoeffTable<T>& closed_form,
                                             const RepCoeffTable<T>& reconstructed) {
  std::vector<TableMismatch<T>> out;
  for (const auto& [key, entry] : closed_form.entries()) {
    if (entry.source == CoeffSource::absent) continue;
    auto other = reconstructed.lookup(key.first, key.second);
    if (other && *other != entry.value) {
      out.push_back({key.first, key.second, entry.value, *other});
    }
  }
  return out;
}

/// CSV with header "n,s,value,source"; ABSENT entries have an empty value.
inline std::string to_csv(const RepCoeffTable<Rational>& table) {
  std::ostringstream os;
  os << "n,s,value,source\n";
  for (const auto& [key, e] : table.entries()) {
    os << key.first << ',' << key.second << ','
       << (e.source == CoeffSource::absent ? std::string() : to_string(e.value))
       << ',' << to_string(e.source) << '\n';
  }
  return os.str();
}

}  // namespace krallm1
