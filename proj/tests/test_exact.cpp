#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "exact.hpp"

using namespace quartic;

namespace {

// Oracle: expand x(x+1)...(x+n-1) by direct convolution; values stay small
// for the rows we compare.
std::vector<long long> rising_product_row(unsigned n) {
    std::vector<long long> poly{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<long long> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j] += poly[j] * static_cast<long long>(i);  // * constant term i
            next[j + 1] += poly[j];                          // * x
        }
        poly = std::move(next);
    }
    return poly;
}

// Oracle: valuation by repeated division.
long long nu_by_division(BigInt n, unsigned long p) {
    long long count = 0;
    while (n != 0 && n % static_cast<long>(p) == 0) {
        n /= static_cast<long>(p);
        ++count;
    }
    return count;
}

BigRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 4000);
    BigRational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("binom basics") {
    CHECK(binom(4, 2) == 6);
    for (unsigned long n : {0ul, 1ul, 7ul, 40ul}) CHECK(binom(n, 0) == 1);
    CHECK(binom(2, 3) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("stirling1u against brute-force expansion") {
    for (unsigned n = 0; n <= 12; ++n) {
        auto expanded = rising_product_row(n);
        for (unsigned k = 0; k <= n; ++k)
            CHECK(stirling1u(n, static_cast<long>(k)) == BigInt(static_cast<long>(expanded[k])));
    }
    CHECK(stirling1u(4, 2) == 11);
    CHECK(stirling1u(5, 4) == 10);
    CHECK(stirling1u(5, 4) == binom(5, 2));
    CHECK(stirling1u(3, 5) == 0);
    CHECK(stirling1u(3, -1) == 0);
    for (unsigned n : {1u, 6u, 33u, 60u}) CHECK(stirling1u(n, static_cast<long>(n)) == 1);
}

TEST_CASE("stirling recurrence holds through the public surface") {
    for (unsigned n = 0; n <= 60; ++n)
        for (unsigned k = 0; k <= n + 1; ++k)
            CHECK(stirling1u(n + 1, static_cast<long>(k)) ==
                  stirling1u(n, static_cast<long>(k) - 1) +
                      BigInt(n) * stirling1u(n, static_cast<long>(k)));
}

TEST_CASE("rising factorial") {
    CHECK(rising(BigRational(7, 3), 0) == 1);
    CHECK(rising(BigRational(-1, 2), 1) == BigRational(-1, 2));
    CHECK(rising(BigRational(3), 2) == 12);
    // (-1/2)_3 = (-1/2)(1/2)(3/2)
    CHECK(rising(BigRational(-1, 2), 3) == BigRational(-3, 8));
}

TEST_CASE("quartic products, direct and incremental") {
    CHECK(prod4m1(0) == 1);
    CHECK(prod4p1(0) == 1);
    CHECK(prod4m1(2) == 21);
    CHECK(prod4p1(2) == 45);
    CHECK(prod4m1(3) == 231);
    CHECK(prod4p1(3) == 585);

    Prod4State state;
    for (unsigned long m = 1; m <= 50; ++m) {
        state.step();
        if (m % 7 == 0 || m < 5) {
            CHECK(state.minus() == prod4m1(m));
            CHECK(state.plus() == prod4p1(m));
        }
    }
    CHECK(state.m() == 50);
    CHECK_THROWS_AS(state.advance_to(10), std::invalid_argument);
}

TEST_CASE("nu_p examples and error paths") {
    CHECK(nu_p(BigRational(15, 4), 2) == PadicValuation::finite(-2));
    CHECK(nu_p(BigRational(1), 3) == PadicValuation::finite(0));
    CHECK(nu_p(BigRational(0), 2) == PadicValuation::infinity());
    CHECK(nu_p(BigRational(-24), 2) == PadicValuation::finite(3));
    CHECK(nu_p(BigRational(9, 7), 3) == PadicValuation::finite(2));
    CHECK_THROWS_AS(nu_p(BigRational(5), 1), std::invalid_argument);
    CHECK_THROWS_AS(nu_p(BigRational(5), 4), std::invalid_argument);
    CHECK_THROWS_AS(nu_p(BigRational(5), 91), std::invalid_argument);  // 7 * 13
    CHECK_NOTHROW(nu_p(BigRational(5), 97));
}

TEST_CASE("nu_p on dyadic values uses the stored exponent") {
    DyadicRational d(BigInt(15), -2);
    CHECK(nu_p(d, 2) == PadicValuation::finite(-2));
    CHECK(nu_p(d, 3) == PadicValuation::finite(1));
    CHECK(nu_p(DyadicRational(), 2) == PadicValuation::infinity());
}

TEST_CASE("digit sums") {
    CHECK(digit_sum(4, 2) == 1);
    CHECK(digit_sum(10, 2) == 2);
    CHECK(digit_sum(10, 3) == 2);
    CHECK(digit_sum(0, 2) == 0);
    CHECK(digit_sum(255, 2) == 8);
    CHECK(digit_sum(26, 3) == 6);  // 222 in ternary
}

TEST_CASE("factorial valuations: examples") {
    CHECK(nu_factorial_floorsum(10, 2) == 8);
    CHECK(nu_factorial_floorsum(0, 2) == 0);
    CHECK(nu_factorial_legendre(0, 2) == 0);
    CHECK(nu_factorial_floorsum(9, 3) == 4);
    CHECK(nu_factorial_legendre(9, 3) == 4);
}

TEST_CASE("factorial valuations: floor sum vs Legendre vs direct factoring") {
    for (unsigned long m = 0; m <= 2000; ++m)
        for (unsigned long p : {2ul, 3ul, 5ul})
            CHECK(nu_factorial_floorsum(m, p) == nu_factorial_legendre(m, p));
    // Independent oracle on a sample: factor m! directly.
    for (unsigned long m : {0ul, 1ul, 12ul, 97ul, 256ul}) {
        BigInt f = factorial(m);
        for (unsigned long p : {2ul, 3ul, 5ul})
            CHECK(static_cast<long long>(nu_factorial_floorsum(m, p)) == nu_by_division(f, p));
    }
    for (unsigned long m = 0; m <= 1024; ++m)
        CHECK(nu_factorial_floorsum(m, 2) == m - digit_sum(m, 2));
}

TEST_CASE("dyadic construction and round trips") {
    CHECK_THROWS_AS(DyadicRational(BigInt(6), 0), std::invalid_argument);
    CHECK(DyadicRational(BigInt(0), 12).is_zero());
    CHECK(DyadicRational(BigInt(0), 12).exponent() == 0);
    CHECK_THROWS_AS(DyadicRational::from_rational(BigRational(1, 3)), std::invalid_argument);

    DyadicRational d = DyadicRational::from_rational(BigRational(15, 4));
    CHECK(d.odd_part() == 15);
    CHECK(d.exponent() == -2);
    CHECK(d.str() == "15 * 2^-2");
    CHECK(d.fraction_str() == "15/4");
    CHECK(DyadicRational::from_integer(BigInt(48)).str() == "3 * 2^4");

    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> odd_pick(-2000, 2000);
    std::uniform_int_distribution<int> exp_pick(-40, 40);
    for (int i = 0; i < 500; ++i) {
        long odd = odd_pick(rng) * 2 + 1;
        DyadicRational x(BigInt(odd), exp_pick(rng));
        CHECK(DyadicRational::from_rational(x.to_rational()) == x);
    }
}

TEST_CASE("nu_p is a valuation on random rationals") {
    std::mt19937_64 rng(987654321);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        for (int i = 0; i < 300; ++i) {
            BigRational x = random_rational(rng);
            BigRational y = random_rational(rng);
            PadicValuation vx = nu_p(x, p);
            PadicValuation vy = nu_p(y, p);
            // multiplicativity
            PadicValuation vxy = nu_p(BigRational(x * y), p);
            if (!vx.is_infinite() && !vy.is_infinite())
                CHECK(vxy == PadicValuation::finite(vx.finite_value() + vy.finite_value()));
            else
                CHECK(vxy.is_infinite());
            // ultrametric inequality
            PadicValuation vsum = nu_p(BigRational(x + y), p);
            PadicValuation floor = vx < vy ? vx : vy;
            CHECK(vsum >= floor);
        }
    }
}

TEST_CASE("decimal digit counts") {
    CHECK(decimal_digits(BigInt(0)) == 1);
    CHECK(decimal_digits(BigInt(-9)) == 1);
    CHECK(decimal_digits(BigInt(10)) == 2);
    CHECK(decimal_digits(BigInt("123456789012345678901234567890")) == 30);
}
