#include "alphabeta.hpp"

#include <stdexcept>

namespace quartic {

namespace {

void require_l_in_range(unsigned m, unsigned l) {
    if (l > m)
        throw std::out_of_range("coefficient index l = " + std::to_string(l) +
                                " outside [0, " + std::to_string(m) + "]");
}

// prod_{v=m+1}^{m+t}(4v+c) as a polynomial in m.
IntPolynomial shifted_quartic_product(long c, unsigned long t) {
    return arithmetic_factor_product(4, 4 + c, t);
}

// prod_{v=m-(count-1)}^{m}(2v+1) as a polynomial in m: factors 2m+1-2i.
IntPolynomial descending_odd_product(long count) {
    if (count <= 0) return IntPolynomial::constant(1);
    IntPolynomial p = IntPolynomial::constant(1);
    for (long i = 0; i < count; ++i) p = p * IntPolynomial::linear(2, 1 - 2 * i);
    return p;
}

}  // namespace

IntPolynomial alpha_poly(unsigned l) {
    IntPolynomial sum;
    for (unsigned t = 0; 2 * t <= l; ++t) {
        IntPolynomial term = shifted_quartic_product(-1, t);
        term = term * descending_odd_product(static_cast<long>(l) - 2 * static_cast<long>(t));
        BigInt scalar = binom(l, static_cast<long>(2 * t));
        if (t >= 1) scalar *= prod4p1(t - 1);
        sum = sum + term * scalar;
    }
    return sum;
}

IntPolynomial beta_poly(unsigned l) {
    IntPolynomial sum;
    for (unsigned t = 1; 2 * t <= l + 1; ++t) {
        IntPolynomial term = shifted_quartic_product(1, t - 1);
        term = term * descending_odd_product(static_cast<long>(l) - 2 * static_cast<long>(t) + 1);
        BigInt scalar = binom(l, static_cast<long>(2 * t - 1));
        scalar *= prod4m1(t - 1);
        sum = sum + term * scalar;
    }
    return sum;
}

AlphaBetaPair alpha_beta(unsigned l) { return {l, alpha_poly(l), beta_poly(l)}; }

DyadicRational d_alphabeta(unsigned m, unsigned l) {
    require_l_in_range(m, l);
    const BigInt bm(static_cast<unsigned long>(m));
    BigInt num = alpha_poly(l).eval(bm) * prod4m1(m) - beta_poly(l).eval(bm) * prod4p1(m);
    BigRational q(num, factorial(l) * factorial(m) * pow2(m + l));
    q.canonicalize();
    return DyadicRational::from_rational(q);
}

BigInt a1_of(unsigned long m) {
    return BigInt(2 * m + 1) * prod4m1(m) - prod4p1(m);
}

BigInt b_of(unsigned long m) { return prod4p1(m) - 1; }

BigInt c_of(unsigned long m) { return BigInt(2 * m + 1) * prod4m1(m) - 1; }

std::pair<BigRational, BigRational> xy_split(unsigned m, unsigned l) {
    require_l_in_range(m, l);
    // Common prefactor (2m+2)! / (2^{m+2l} m! (m+1)!).
    BigRational prefactor(factorial(2 * m + 2), pow2(m + 2 * l) * factorial(m) * factorial(m + 1));

    BigRational x_sum = 0;
    for (unsigned t = 0; 2 * t <= l; ++t) {
        // (m-l+2t+1)! (4t)! / ((2t)!^2 (l-2t)! (2m-2l+4t+2)!)
        BigRational term(factorial(m - l + 2 * t + 1) * factorial(4 * t),
                         factorial(2 * t) * factorial(2 * t) * factorial(l - 2 * t) *
                             factorial(2 * m - 2 * l + 4 * t + 2));
        // prod_{v=m+1}^{m+t}(4v-1) / prod_{v=1}^{t}(4v-1)
        BigInt num = 1, den = 1;
        for (unsigned v = m + 1; v <= m + t; ++v) num *= 4 * v - 1;
        den = prod4m1(t);
        x_sum += term * BigRational(num, den);
    }
    BigRational x = prefactor * x_sum;
    x.canonicalize();

    BigRational y_sum = 0;
    for (unsigned t = 1; 2 * t <= l + 1; ++t) {
        // (m-l+2t)! (4t-2)! / ((2t-1)!^2 (l-2t+1)! (2m-2l+4t)!)
        BigRational term(factorial(m - l + 2 * t) * factorial(4 * t - 2),
                         factorial(2 * t - 1) * factorial(2 * t - 1) * factorial(l - 2 * t + 1) *
                             factorial(2 * m - 2 * l + 4 * t));
        // prod_{v=m+1}^{m+t-1}(4v+1) / prod_{v=1}^{t-1}(4v+1)
        BigInt num = 1, den = 1;
        for (unsigned v = m + 1; v <= m + t - 1; ++v) num *= 4 * v + 1;
        den = prod4p1(t - 1);
        y_sum += term * BigRational(num, den);
    }
    BigRational y = prefactor * y_sum;
    y.canonicalize();

    return {x, y};
}

DyadicRational leibniz_dl(unsigned m, unsigned l) {
    require_l_in_range(m, l);
    BigRational sum = 0;
    for (unsigned j = 0; j <= l; ++j) {
        const unsigned r = l - j;  // derivative order landing on (a+1)^{m+1/2}
        // (d/da)^r (a+1)^{m+1/2} at 0:  2^{-2r} (2m+2)!/(m+1)! * (m-r+1)!/(2m-2r+2)!
        BigRational power_part(factorial(2 * m + 2) * factorial(m - r + 1),
                               pow2(2 * r) * factorial(m + 1) * factorial(2 * m - 2 * r + 2));
        // (d/da)^j N(a;m) at 0, scaled by 2^{m+3/2}/pi:
        // (-1)^j (2j)! / (2^{m+2j} m! j!) * prod_{v=1}^m (4v-1+2j)
        BigInt rolled = 1;
        for (unsigned v = 1; v <= m; ++v) rolled *= 4 * v - 1 + 2 * j;
        BigRational integral_part(factorial(2 * j) * rolled,
                                  pow2(m + 2 * j) * factorial(m) * factorial(j));
        if (j % 2 != 0) integral_part = -integral_part;
        sum += BigRational(binom(l, static_cast<long>(j))) * power_part * integral_part;
    }
    // sum is P_m^{(l)}(0); the coefficient is the divided derivative.
    sum /= BigRational(factorial(l));
    sum.canonicalize();
    return DyadicRational::from_rational(sum);
}

}  // namespace quartic
