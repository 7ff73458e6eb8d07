#pragma once

#include <cstdint>
#include <vector>

#include "exact.hpp"

namespace quartic {

// The polynomial family P_m(a) = sum_{l=0}^{m} d_l(m) a^l attached to the
// quartic integral N(a;m) = integral_0^inf dx / (x^4 + 2ax^2 + 1)^{m+1}
// via P_m(a) = (2^{m+3/2}/pi) (a+1)^{m+1/2} N(a;m). Every d_l(m) is a
// positive dyadic rational. This module computes them by independent
// routes that must agree exactly; the redundancy is the point.

struct CoeffRecord {
    unsigned m = 0;
    unsigned l = 0;
    DyadicRational value;
    PadicValuation nu2;
    PadicValuation nu3;
    BigInt numerator_odd_part;
    unsigned long numerator_digits = 0;
};

struct PolynomialP {
    unsigned m = 0;
    std::vector<DyadicRational> coeffs;  // index l = 0..m
};

// Triple sum over (j, s, k) with alternating signs and 2^{-3k} weights.
DyadicRational d_triple(unsigned m, unsigned l);

// Single sum 2^{-2m} sum_k 2^k C(2m-2k, m-k) C(m+k, m) C(k, l).
DyadicRational d_single(unsigned m, unsigned l);

// 2^{2m} d_l(m) as an integer: the single sum without its dyadic prefactor.
BigInt d_single_scaled(unsigned m, unsigned l);

// Constant term: prod_{k=1}^{m}(4k-1) / (m! 2^m).
DyadicRational d0_closed(unsigned m);

// Linear coefficient: ((2m+1) prod(4k-1) - prod(4k+1)) / (m! 2^{m+1}).
// The formula degenerates to 0 at m = 0 (no linear term exists).
DyadicRational d1_closed(unsigned m);

PolynomialP p_polynomial(unsigned m);

// Exact evaluation of P_m at a rational point, via the single-sum coefficients.
BigRational p_eval(unsigned m, const BigRational& a);

// Terminating-hypergeometric route:
// 2^{-2m} C(2m,m) * 2F1[-m, m+1; 1/2-m; (1+a)/2] evaluated as a finite
// rational sum. Must equal p_eval(m, a) for every rational a.
BigRational p_via_2f1(unsigned m, const BigRational& a);

// Coefficient vector of P_m recovered from p_via_2f1 alone, by exact
// interpolation at the m+1 points a = 0..m.
std::vector<BigRational> coeffs_via_2f1(unsigned m);

// Power-series identity behind the coefficient family: the expansion of
// sqrt(a + sqrt(1+c)) / sqrt(a+1) in c has coefficient
// (-1)^{k-1} P_{k-1}(a) / (k 2^{k+1} (a+1)^k) at c^k. Both sides are
// computed exactly (truncated series arithmetic over rationals) and
// compared for k = 1..K.
struct TaylorCheckRow {
    unsigned k = 0;
    BigRational lhs;  // series coefficient of c^k
    BigRational rhs;  // predicted value from P_{k-1}(a)
    bool equal = false;
};
std::vector<TaylorCheckRow> taylor_check(const BigRational& a, unsigned K);

CoeffRecord coeff_record(unsigned m, unsigned l);
// All records with 0 <= l <= m <= m_max in (m, l) lexicographic order.
std::vector<CoeffRecord> coeff_table(unsigned m_max);

}  // namespace quartic
