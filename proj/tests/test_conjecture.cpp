#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "alphabeta.hpp"
#include "conjecture.hpp"

using namespace quartic;

namespace {

IntPolynomial from_roots(const std::vector<long>& roots) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (long r : roots) p = p * IntPolynomial::linear(1, -r);
    return p;
}

// Oracle: count sign changes of p over a fine grid; equals the number of
// distinct real roots in (0, bound) when p is square-free with integer
// roots and the grid is finer than the root separation.
unsigned grid_sign_changes(const IntPolynomial& p, long bound) {
    unsigned changes = 0;
    int prev = 0;
    for (long step = 1; step <= 4 * bound; ++step) {
        BigRational x(step, 4);
        int s = sgn(p.eval(x));
        if (s == 0) continue;  // grid point exactly on a root: neighbours flip
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

TEST_CASE("shift_half") {
    CHECK(shift_half(IntPolynomial({1, 2})) == IntPolynomial({0, 4}));        // 2m+1 -> 4t
    CHECK(shift_half(IntPolynomial({2, 4, 4})) == IntPolynomial({4, 0, 16})); // -> 4(4t^2+1)
    CHECK(shift_half(IntPolynomial({5})) == IntPolynomial({5}));
    CHECK_THROWS_AS(shift_half(IntPolynomial{}), std::invalid_argument);
    // Root correspondence: p(r) = 0 iff h(r + 1/2) = 0.
    IntPolynomial p = from_roots({-3, 2});
    IntPolynomial h = shift_half(p);
    CHECK(h.eval(BigRational(-5, 2)) == 0);
    CHECK(h.eval(BigRational(5, 2)) == 0);
}

TEST_CASE("parity_check") {
    CHECK(parity_check(IntPolynomial({0, 4})));
    CHECK(parity_check(IntPolynomial({1, 0, 4})));
    CHECK(!parity_check(IntPolynomial({1, 1})));
    CHECK(!parity_check(IntPolynomial({0, 1, 0, 0, 1})));  // t^4 + t
    CHECK(parity_check(IntPolynomial({0, 0, 1, 0, 0, 0, 1})));  // t^6 + t^2
}

TEST_CASE("sturm chain shape") {
    // (v-1)(v-2)(v+3), square-free
    IntPolynomial p = from_roots({1, 2, -3});
    SturmChain chain = sturm_chain(p);
    REQUIRE(chain.polynomials.size() >= 2);
    CHECK(chain.polynomials[0] == p);
    CHECK(chain.polynomials[1] == p.derivative());
    CHECK(chain.polynomials.back().degree() == 0);
}

TEST_CASE("positive root counting with multiplicity") {
    CHECK(count_positive_real_roots(IntPolynomial({1, -4})) == 1);   // -4v+1, root 1/4
    CHECK(count_positive_real_roots(IntPolynomial({1, 0, 1})) == 0); // v^2+1
    CHECK(count_positive_real_roots(IntPolynomial({1, -2, 1})) == 2);  // (v-1)^2
    CHECK(count_positive_real_roots(from_roots({1, 1, 1})) == 3);
    CHECK(count_positive_real_roots(from_roots({2, 2, 2, -1, -1})) == 3);
    CHECK(count_positive_real_roots(from_roots({0, 0, 5})) == 1);  // roots at 0 excluded
    CHECK(count_positive_real_roots(IntPolynomial({7})) == 0);
    CHECK_THROWS_AS(count_positive_real_roots(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("sturm counting matches the grid oracle on random square-free polynomials") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> degree_pick(1, 8);
    for (int trial = 0; trial < 120; ++trial) {
        int deg = degree_pick(rng);
        std::vector<long> all{-8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 8};
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<long> roots(all.begin(), all.begin() + deg);
        IntPolynomial p = from_roots(roots);
        unsigned expected = 0;
        for (long r : roots)
            if (r > 0) ++expected;
        CHECK(count_positive_real_roots(p) == expected);
        CHECK(grid_sign_changes(p, 10) == expected);
    }
}

TEST_CASE("decide_line on the listed families") {
    LineVerdict a1 = decide_line(PolyFamily::Alpha, 1);
    CHECK(a1.verdict == LineStatus::AllOnLine);
    CHECK(a1.parity_holds);
    CHECK(a1.l == 1);
    CHECK(a1.family == PolyFamily::Alpha);
    CHECK(!a1.witness.has_value());

    LineVerdict a2 = decide_line(PolyFamily::Alpha, 2);
    CHECK(a2.verdict == LineStatus::AllOnLine);  // roots -1/2 +- i/2
    CHECK(a2.real_root_count == 1);
    CHECK(a2.expected_real_root_count == 1);

    LineVerdict b3 = decide_line(PolyFamily::Beta, 3);
    CHECK(b3.verdict == LineStatus::AllOnLine);  // roots -1/2 +- i sqrt(3)/2

    for (unsigned l = 1; l <= 12; ++l) {
        CHECK(decide_line(PolyFamily::Alpha, l).verdict == LineStatus::AllOnLine);
        CHECK(decide_line(PolyFamily::Beta, l).verdict == LineStatus::AllOnLine);
    }
}

TEST_CASE("decide_line rejects and flags off-line polynomials") {
    CHECK_THROWS_AS(decide_line(IntPolynomial{}), std::invalid_argument);
    CHECK(decide_line(IntPolynomial({3})).verdict == LineStatus::AllOnLine);  // no roots

    LineVerdict off = decide_line(IntPolynomial({1, 1}));  // m+1, root -1
    CHECK(off.verdict == LineStatus::Violated);
    REQUIRE(off.witness.has_value());
    CHECK(off.witness->lo < BigRational(-1));
    CHECK(BigRational(-1) < off.witness->hi);
    // The witness interval must exclude the line point -1/2.
    CHECK(off.witness->hi <= BigRational(-1, 2));

    // (m+1)(m+2): parity of the shifted polynomial fails
    LineVerdict two = decide_line(from_roots({-1, -2}));
    CHECK(two.verdict == LineStatus::Violated);
    CHECK(!two.parity_holds);
    REQUIRE(two.witness.has_value());

    // t^2 - 1 type: parity holds but roots are real (m = -1/2 +- 1)
    // p(m) = (m + 3/2)(m - 1/2) scaled: (2m+3)(2m-1)
    LineVerdict real_pair = decide_line(IntPolynomial({3, 2}) * IntPolynomial({-1, 2}));
    CHECK(real_pair.parity_holds);
    CHECK(real_pair.verdict == LineStatus::Violated);
    CHECK(real_pair.real_root_count == 0);
    CHECK(real_pair.expected_real_root_count == 1);
    REQUIRE(real_pair.witness.has_value());

    // Mixed: one root on the line, one off
    LineVerdict mixed = decide_line(IntPolynomial({1, 2}) * IntPolynomial({2, 1}));  // (2m+1)(m+2)
    CHECK(mixed.verdict == LineStatus::Violated);
    REQUIRE(mixed.witness.has_value());
    CHECK(mixed.witness->hi < BigRational(-1, 2));
}

TEST_CASE("repeated roots on the line are handled") {
    // (2m+1)^2 (m^2 + m + 1): all roots on Re = -1/2, one double at -1/2
    IntPolynomial p = IntPolynomial({1, 2}) * IntPolynomial({1, 2}) * IntPolynomial({1, 1, 1});
    LineVerdict v = decide_line(p);
    CHECK(v.verdict == LineStatus::AllOnLine);
    // ((2m+1)^2 + 4)^2: double pair of complex roots on the line
    IntPolynomial dbl = IntPolynomial({5, 4, 4}) * IntPolynomial({5, 4, 4});
    CHECK(decide_line(dbl).verdict == LineStatus::AllOnLine);
}

TEST_CASE("numeric roots: known quadratics") {
    NumericRootsResult b3 = numeric_roots(beta_poly(3), 256);
    REQUIRE(b3.roots.size() == 2);
    CHECK(b3.max_offline < std::ldexp(1.0, -128));
    double im0 = std::stod(b3.roots[0].im);
    double im1 = std::stod(b3.roots[1].im);
    CHECK(std::abs(std::abs(im0) - std::sqrt(3.0) / 2.0) < 1e-12);
    CHECK(std::abs(im0 + im1) < 1e-12);
    double re0 = std::stod(b3.roots[0].re);
    CHECK(std::abs(re0 + 0.5) < 1e-30);

    NumericRootsResult a1 = numeric_roots(alpha_poly(1), 64);
    REQUIRE(a1.roots.size() == 1);
    CHECK(std::stod(a1.roots[0].re) == -0.5);

    NumericRootsResult off = numeric_roots(from_roots({-1, -2}), 128);
    CHECK(std::abs(off.max_offline - 1.5) < 1e-20);

    CHECK_THROWS_AS(numeric_roots(IntPolynomial({3}), 256), std::invalid_argument);
    CHECK_THROWS_AS(numeric_roots(alpha_poly(2), 32), std::invalid_argument);
}

TEST_CASE("exact and numeric routes agree for l <= 12") {
    for (unsigned l = 1; l <= 12; ++l) {
        for (PolyFamily family : {PolyFamily::Alpha, PolyFamily::Beta}) {
            IntPolynomial p = (family == PolyFamily::Alpha) ? alpha_poly(l) : beta_poly(l);
            LineVerdict v = decide_line(p);
            if (p.degree() < 1) {
                // beta_1 is constant: no roots, nothing for the numeric side.
                CHECK(v.verdict == LineStatus::AllOnLine);
                continue;
            }
            NumericRootsResult n = numeric_roots(p, 256);
            bool numeric_on_line = n.max_offline < std::ldexp(1.0, -40);
            CHECK(v.verdict == (numeric_on_line ? LineStatus::AllOnLine : LineStatus::Violated));
        }
    }
}
