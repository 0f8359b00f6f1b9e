#include <gtest/gtest.h>

#include <vector>

#include "generators.hpp"
#include "krallm1/qjacobi.hpp"
#include "krallm1/rep_coeff.hpp"

namespace krallm1 {
namespace {

using testing::Gen;

Rational R(const char* s) { return parse_rational(s); }

QJacobiParams<Rational> qparams(const char* q, const char* b, int j, const char* M) {
  QJacobiParams<Rational> p;
  p.q = R(q);
  p.b = R(b);
  p.j = j;
  p.M = R(M);
  return p;
}

// Oracle: expand p_n(x) = 2phi1(q^-n, abq^{n+1}; aq; q; qx) term by term and
// normalize to monic. Shares nothing with the closed-form coefficients.
template <class T>
T plain_qpoch(const T& a, const T& q, int n) {
  T r(1);
  T qi(1);
  for (int i = 0; i < n; ++i) {
    r *= T(1) - a * qi;
    qi *= q;
  }
  return r;
}

template <class T>
std::vector<T> series_monic_coeffs(int n, const T& q, const T& a, const T& b) {
  std::vector<T> c(static_cast<std::size_t>(n) + 1);
  T qn_inv(1);
  for (int i = 0; i < n; ++i) qn_inv /= q;
  T top(1);
  for (int i = 0; i < n + 1; ++i) top *= q;
  for (int k = 0; k <= n; ++k) {
    T qk(1);
    for (int i = 0; i < k; ++i) qk *= q;
    c[static_cast<std::size_t>(k)] = plain_qpoch(qn_inv, q, k) * plain_qpoch(a * b * top, q, k) /
                                     (plain_qpoch(a * q, q, k) * plain_qpoch(q, q, k)) * qk;
  }
  const T lead = c.back();
  for (auto& v : c) v /= lead;
  return c;  // ascending degree
}

TEST(LittleQJacobi, MonicLeadingCoefficient) {
  const LittleQJacobiParams<Rational> p{R("2"), R("4"), R("3")};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(lqj_coeff(n, 0, p), 1);
  EXPECT_EQ(lqj_poly(0, p), RationalPoly(Rational(1)));
}

TEST(LittleQJacobi, CoefficientsMatchSeries) {
  struct Point {
    const char* q;
    const char* b;
    int j;
  };
  for (const auto& pt : {Point{"2", "3", 2}, Point{"1/2", "1/3", 1}, Point{"-3/2", "5/7", 3}}) {
    const Rational q = R(pt.q);
    const LittleQJacobiParams<Rational> p{q, ipow(q, pt.j), R(pt.b)};
    for (int n = 0; n <= 7; ++n) {
      const auto oracle = series_monic_coeffs(n, p.q, p.a, p.b);
      for (int s = 0; s <= n; ++s) {
        EXPECT_EQ(lqj_coeff(n, s, p), oracle[static_cast<std::size_t>(n - s)])
            << "n=" << n << " s=" << s << " q=" << pt.q;
      }
    }
  }
  // Spot values frozen from the series oracle.
  const LittleQJacobiParams<Rational> p1{R("2"), R("4"), R("3")};
  EXPECT_EQ(lqj_coeff(1, 1, p1), series_monic_coeffs(1, p1.q, p1.a, p1.b)[0]);
  const LittleQJacobiParams<Rational> p2{R("1/2"), R("1/2"), R("1/3")};
  EXPECT_EQ(lqj_coeff(3, 2, p2), series_monic_coeffs(3, p2.q, p2.a, p2.b)[1]);
}

TEST(LittleQJacobi, RecurrenceReplay) {
  Gen gen(17);
  for (int trial = 0; trial < 5; ++trial) {
    const LittleQJacobiParams<Rational> p{gen.nonzero_rational(9, 5), gen.nonzero_rational(),
                                          gen.nonzero_rational()};
    if (p.q == 1 || p.q == -1) continue;
    try {
      for (int n = 0; n <= 8; ++n) {
        const auto rc = lqj_recurrence(n, p);
        RationalPoly rhs = lqj_poly(n + 1, p) + rc.b * lqj_poly(n, p);
        if (n > 0) rhs += rc.u * lqj_poly(n - 1, p);
        EXPECT_EQ(lqj_poly(n, p).shifted(1), rhs) << "n=" << n;
      }
    } catch (const DegenerateParameters&) {
    }
  }
}

TEST(LittleQJacobi, RecurrenceEdgeValues) {
  const LittleQJacobiParams<Rational> p{R("2"), R("2"), R("3")};
  EXPECT_EQ(lqj_recurrence(0, p).u, 0);
  // u_n > 0 inside the classical window
  const LittleQJacobiParams<Rational> w{R("1/2"), R("1/2"), R("1/2")};
  for (int n = 1; n <= 10; ++n) EXPECT_GT(lqj_recurrence(n, w).u, 0) << n;
}

TEST(LittleQJacobi, DegenerateDenominator) {
  // (q;q)_s vanishes at q = 1
  const LittleQJacobiParams<Rational> p{R("1"), R("1/2"), R("1/3")};
  EXPECT_THROW(lqj_coeff(2, 1, p), DegenerateParameters);
  EXPECT_THROW(qparams("1", "2", 1, "0").validate(), DegenerateParameters);
  EXPECT_THROW(qparams("-1", "2", 1, "0").validate(), DegenerateParameters);
}

TEST(QnZero, ClosedFormAtZero) {
  const auto p = qparams("2", "3", 1, "0");
  const Rational a = p.a();
  EXPECT_EQ(qn_zero(0, p), -(1 - a * p.b * p.q) / (1 - a));
}

// Q_n(0) = -sum_k P_n(q^k) w_k / q^k with the little q-Jacobi weights
// w_k = (aq;q)_inf/(abq^2;q)_inf (bq;q)_k/(q;q)_k (aq)^k.
PrecisionFloat qn_zero_series(int n, const QJacobiParams<Rational>& p, int terms) {
  const PrecisionFloat q = to_float(p.q);
  const PrecisionFloat b = to_float(p.b);
  const PrecisionFloat a = to_float(p.a());
  const auto coeffs = series_monic_coeffs(n, q, a, b);
  const PrecisionFloat norm = plain_qpoch(a * q, q, 400) / plain_qpoch(a * b * q * q, q, 400);
  PrecisionFloat total(0);
  PrecisionFloat qk(1);
  PrecisionFloat ratio(1);  // (bq;q)_k/(q;q)_k (aq)^k
  for (int k = 0; k < terms; ++k) {
    PrecisionFloat value(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * qk + *it;
    total -= value * norm * ratio / qk;
    ratio *= (1 - b * q * qk) / (1 - q * qk) * a * q;
    qk *= q;
  }
  return total;
}

TEST(QnZero, MatchesTruncatedSeries) {
  PrecisionScope scope(60);
  const PrecisionFloat tol("1e-30");
  for (const auto& p : {qparams("1/3", "1/5", 2, "0"), qparams("1/2", "1/3", 1, "0"),
                        qparams("-1/3", "1/2", 2, "0")}) {
    for (int n = 0; n <= 4; ++n) {
      const PrecisionFloat closed = to_float(qn_zero(n, p));
      const PrecisionFloat series = qn_zero_series(n, p, 300);
      EXPECT_LE(abs(closed - series), tol * std::max<PrecisionFloat>(1, abs(closed)))
          << "n=" << n << " closed=" << closed << " series=" << series;
    }
  }
}

TEST(Phi, ConsistentWithQnZeroAndConstantTerm) {
  for (const auto& p : {qparams("2", "3", 2, "1/7"), qparams("1/3", "1/5", 2, "2/9"),
                        qparams("-3/2", "5/7", 3, "-4/3")}) {
    for (int n = 0; n <= 10; ++n) {
      const Rational constant = lqj_poly(n, p.base()).coeff(0);
      EXPECT_EQ(phi(n, p), qn_zero(n, p) + p.M * constant) << "n=" << n;
    }
  }
  auto p0 = qparams("2", "3", 2, "0");
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(phi(n, p0), qn_zero(n, p0));
}

TEST(Geronimus, MonicFamily) {
  Gen gen(23);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = qparams("2", "3", 2, "1/7");
    p.q = gen.nonzero_rational(7, 3);
    p.b = gen.nonzero_rational();
    p.M = gen.rational();
    if (p.q == 1 || p.q == -1) continue;
    try {
      EXPECT_EQ(geronimus(0, p), RationalPoly(Rational(1)));
      for (int n = 1; n <= 10; ++n) {
        const auto g = geronimus(n, p);
        EXPECT_EQ(*g.degree(), n);
        EXPECT_EQ(g.leading_coeff(), 1);
      }
    } catch (const Error&) {
    }
  }
}

TEST(Geronimus, DegenerateWhenPhi1Vanishes) {
  auto p = qparams("2", "3", 2, "0");
  const Rational phi_at_0 = phi(1, p);
  p.M = 1;
  const Rational slope = phi(1, p) - phi_at_0;
  p.M = -phi_at_0 / slope;
  ASSERT_EQ(phi(1, p), 0);
  EXPECT_NO_THROW(geronimus(1, p));
  try {
    geronimus(2, p);
    FAIL() << "expected GeronimusDegenerate";
  } catch (const GeronimusDegenerate& e) {
    EXPECT_EQ(e.n(), 2);
    EXPECT_NE(std::string(e.what()).find("GeronimusDegenerate(2)"), std::string::npos);
  }
}

TEST(TransformedRecurrence, Replay) {
  Gen gen(31);
  int checked = 0;
  while (checked < 5) {
    auto p = qparams("2", "3", 2, "0");
    p.q = gen.nonzero_rational(7, 3);
    p.b = gen.nonzero_rational();
    p.j = gen.integer(1, 3);
    p.M = gen.rational();
    if (p.q == 1 || p.q == -1) continue;
    try {
      std::vector<RationalPoly> f;
      for (int n = 0; n <= 9; ++n) f.push_back(geronimus(n, p));
      for (int n = 0; n <= 8; ++n) {
        const auto rc = transformed_recurrence(n, p);
        RationalPoly rhs = f[n + 1] + rc.b * f[n];
        if (n > 0) rhs += rc.u * f[n - 1];
        EXPECT_EQ(f[n].shifted(1), rhs) << "n=" << n;
      }
      ++checked;
    } catch (const Error&) {
    }
  }
}

TEST(TransformedRecurrence, MassFreeShift) {
  const auto p = qparams("1/2", "1/3", 2, "0");
  const auto base = p.base();
  EXPECT_EQ(transformed_recurrence(0, p).b,
            lqj_recurrence(0, base).b + qn_zero(1, p) / qn_zero(0, p));
  const auto q = qparams("1/2", "1/3", 2, "1/5");
  const auto rc = transformed_recurrence(2, q);
  EXPECT_EQ(rc.u, lqj_recurrence(1, q.base()).u * geronimus_ratio(2, q) / geronimus_ratio(1, q));
}

TEST(RepCoeff, ClosedFormTableShape) {
  const auto p = qparams("2", "3", 2, "1/7");
  const auto table = rep_coeff_closed_form(p, 8);
  EXPECT_EQ(table.at(0, 0), 0);
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(table.at(n, 4), 0);
  EXPECT_TRUE(table.is_absent(3, 3));
  EXPECT_FALSE(table.lookup(5, 3).has_value());
  EXPECT_EQ(table.lookup(9, 6), Rational(0));
  EXPECT_EQ(table.at(1, 1), rep_coeff_shift1(1, p));
}

TEST(RepCoeff, ReconstructionAgreesWithClosedForms) {
  Gen gen(41);
  int checked = 0;
  while (checked < 5) {
    auto p = qparams("2", "3", 2, "0");
    p.q = gen.nonzero_rational(7, 3);
    p.b = gen.nonzero_rational();
    p.M = gen.nonzero_rational();
    if (p.q == 1 || p.q == -1) continue;
    try {
      const auto closed = rep_coeff_closed_form(p, 8);
      const auto rebuilt = rep_coeff_reconstruct(p, 8);
      const auto bad = compare_tables(closed, rebuilt);
      for (const auto& m : bad) {
        ADD_FAILURE() << "(n,s)=(" << m.n << "," << m.s << ") closed_form=" << m.closed_form
                      << " reconstructed=" << m.reconstructed;
      }
      for (int n = 0; n <= 8; ++n) EXPECT_EQ(rebuilt.at(n, 0), rep_coeff_lambda(n, p));
      bool has_nonzero_s3 = false;
      for (int n = 3; n <= 8; ++n) has_nonzero_s3 = has_nonzero_s3 || rebuilt.at(n, 3) != 0;
      EXPECT_TRUE(has_nonzero_s3);
      ++checked;
    } catch (const Error&) {
    }
  }
}

TEST(RepCoeff, EigenRelationWithReconstructedTable) {
  for (const auto& p : {qparams("2", "3", 2, "1/7"), qparams("1/2", "1/3", 1, "1/5")}) {
    const auto table = rep_coeff_reconstruct(p, 8);
    for (int n = 0; n <= 8; ++n) {
      const auto g = geronimus(n, p);
      EXPECT_EQ(apply_Lq(g, table), rep_coeff_lambda(n, p) * g) << "n=" << n;
    }
  }
}

TEST(RepCoeff, ClosedFormTableIsCompleteForJ1) {
  const auto p = qparams("2", "3", 1, "1/7");
  const auto table = rep_coeff_closed_form(p, 8);
  for (int n = 0; n <= 8; ++n) {
    const auto g = geronimus(n, p);
    EXPECT_EQ(apply_Lq(g, table), rep_coeff_lambda(n, p) * g) << "n=" << n;
  }
}

TEST(RepCoeff, ApplyLqLinearAndIncomplete) {
  const auto p = qparams("2", "3", 2, "1/7");
  const auto rebuilt = rep_coeff_reconstruct(p, 6);
  EXPECT_EQ(apply_Lq(RationalPoly(Rational(1)), rebuilt), RationalPoly(rebuilt.at(0, 0)));
  Gen gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = gen.poly(6);
    const auto b = gen.poly(6);
    EXPECT_EQ(apply_Lq(a + b, rebuilt), apply_Lq(a, rebuilt) + apply_Lq(b, rebuilt));
  }
  const auto closed = rep_coeff_closed_form(p, 6);
  try {
    apply_Lq(geronimus(4, p), closed);
    FAIL() << "expected IncompleteTable";
  } catch (const IncompleteTable& e) {
    const auto& missing = e.missing();
    EXPECT_NE(std::find(missing.begin(), missing.end(), std::make_pair(3, 3)), missing.end());
    EXPECT_NE(std::find(missing.begin(), missing.end(), std::make_pair(4, 3)), missing.end());
  }
}

TEST(RepCoeff, CsvExport) {
  const auto p = qparams("2", "3", 2, "1/7");
  const auto csv = to_csv(rep_coeff_closed_form(p, 3));
  EXPECT_EQ(csv.rfind("n,s,value,source\n0,0,0,closed_form\n", 0), 0u);
  EXPECT_NE(csv.find("3,3,,absent\n"), std::string::npos);
}

}  // namespace
}  // namespace krallm1
