#pragma once

#include <utility>

#include "exact.hpp"
#include "intpoly.hpp"

namespace quartic {

// The split representation
//   d_l(m) = (alpha_l(m) prod(4k-1) - beta_l(m) prod(4k+1)) / (l! m! 2^{m+l})
// with integer polynomials alpha_l (degree l) and beta_l (degree l-1),
// plus the factorial-sum form of the same split and the Leibniz-rule
// reconstruction of P_m^{(l)}(0). Efficient when l is small relative to m.

struct AlphaBetaPair {
    unsigned l = 0;
    IntPolynomial alpha;
    IntPolynomial beta;
};

// alpha_l(m) = sum_t C(l,2t) prod_{v=m+1}^{m+t}(4v-1)
//                          * prod_{v=m-(l-2t-1)}^{m}(2v+1)
//                          * prod_{v=1}^{t-1}(4v+1)
IntPolynomial alpha_poly(unsigned l);
// beta_l(m) = sum_t C(l,2t-1) prod_{v=m+1}^{m+t-1}(4v+1)
//                           * prod_{v=m-(l-2t)}^{m}(2v+1)
//                           * prod_{v=1}^{t-1}(4v-1)
IntPolynomial beta_poly(unsigned l);
AlphaBetaPair alpha_beta(unsigned l);

DyadicRational d_alphabeta(unsigned m, unsigned l);

// A_1(m) = (2m+1) prod(4k-1) - prod(4k+1); the integer numerator of d_1
// up to the factorial and power-of-two denominator.
BigInt a1_of(unsigned long m);
// B_m = prod(4k+1) - 1 and C_m = (2m+1) prod(4k-1) - 1, so that
// A_1(m) = C_m - B_m.
BigInt b_of(unsigned long m);
BigInt c_of(unsigned long m);

// The factorial-quotient form: d_l(m) = X prod(4v-1) - Y prod(4v+1), with
// X = alpha_l(m)/(l! m! 2^{m+l}) and Y likewise for beta.
std::pair<BigRational, BigRational> xy_split(unsigned m, unsigned l);

// P_m^{(l)}(0)/l! assembled term by term from the Leibniz rule applied to
// (a+1)^{m+1/2} N(a;m): derivative j of the integral contributes
// (-1)^j (2j)!/(2^{m+2j} m! j!) prod_{v=1}^m (4v-1+2j) after the pi and
// 2^{3/2} factors cancel against the defining prefactor of P_m.
DyadicRational leibniz_dl(unsigned m, unsigned l);

}  // namespace quartic
