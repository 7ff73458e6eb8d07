#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coefficients.hpp"
#include "threeadic.hpp"

using namespace quartic;

TEST_CASE("nu3_d1 small values") {
    CHECK(nu3_d1(1) == PadicValuation::finite(0));  // d_1(1) = 1
    CHECK(nu3_d1(2) == PadicValuation::finite(1));  // d_1(2) = 15/4
    CHECK(nu3_d1(3) == PadicValuation::finite(0));  // d_1(3) = 43/4
    CHECK_THROWS_AS(nu3_d1(0), std::invalid_argument);
}

TEST_CASE("nu3_d1 agrees with the single-sum route") {
    for (unsigned long m = 1; m <= 300; ++m)
        CHECK(nu3_d1(m) == nu_p(d_single(static_cast<unsigned>(m), 1), 3));
}

TEST_CASE("q sequence") {
    QSequence q2 = q_sequence(2);
    CHECK(q2.terms == std::vector<std::uint64_t>{2, 7});
    QSequence q5 = q_sequence(5);
    CHECK(q5.terms == std::vector<std::uint64_t>{2, 7, 20, 61, 182});
    CHECK(3 * 7 - 1 == 20);
    // recurrence: alternating +1/-1 correction
    QSequence q10 = q_sequence(10);
    for (std::size_t j = 1; j < q10.terms.size(); ++j) {
        std::uint64_t expected = 3 * q10.terms[j - 1];
        if (j % 2 == 1)
            expected += 1;
        else
            expected -= 1;
        CHECK(q10.terms[j] == expected);
    }
    CHECK_THROWS_AS(q_sequence(0), std::invalid_argument);

    CHECK(in_q_set(2));
    CHECK(in_q_set(182));
    CHECK(!in_q_set(3));
    CHECK(!in_q_set(21));
}

TEST_CASE("scan on a tiny range") {
    ThreeAdicScan result = scan(3);
    CHECK(result.m_max == 3);
    CHECK(result.zeros == std::vector<unsigned long>{1, 3});
    REQUIRE(result.gaps.size() == 1);
    CHECK(result.gaps[0].gap == 2);
    CHECK(result.gaps[0].in_q_set);
    CHECK(result.all_gaps_in_q_set);
    CHECK(result.includes_m_equal_1);
    CHECK_THROWS_AS(scan(1), std::invalid_argument);
}

TEST_CASE("scan matches per-m recomputation and classifies gaps") {
    ThreeAdicScan result = scan(400);
    // zeros really are the zero set
    std::vector<unsigned long> expected_zeros;
    for (unsigned long m = 1; m <= 400; ++m)
        if (nu3_d1(m) == PadicValuation::finite(0)) expected_zeros.push_back(m);
    CHECK(result.zeros == expected_zeros);
    for (std::size_t i = 1; i < result.zeros.size(); ++i)
        CHECK(result.zeros[i] > result.zeros[i - 1]);
    CHECK(result.gaps.size() + 1 == result.zeros.size());
    // Per-gap flags are consistent; not every gap lies in the q-set (the
    // zero set contains adjacent members, e.g. 9 and 10).
    bool any_outside = false;
    for (const auto& g : result.gaps) {
        CHECK(g.gap == g.to_m - g.from_m);
        CHECK(g.in_q_set == in_q_set(g.gap));
        if (!g.in_q_set) any_outside = true;
    }
    CHECK(result.all_gaps_in_q_set == !any_outside);
    CHECK(any_outside);

    // the tracked maximum is attained and correct
    std::int64_t max_nu = -1;
    unsigned long arg = 0;
    for (unsigned long m = 2; m <= 400; ++m) {
        auto nu = nu3_d1(m).finite_value();
        if (nu > max_nu) {
            max_nu = nu;
            arg = m;
        }
    }
    CHECK(result.max_valuation == max_nu);
    CHECK(result.max_m_at == arg);
}

TEST_CASE("incremental products match scratch recomputation") {
    Prod4State state;
    for (unsigned long m = 1; m <= 120; ++m) {
        state.step();
        if (m == 1 || m == 37 || m == 120) {
            CHECK(state.minus() == prod4m1(m));
            CHECK(state.plus() == prod4p1(m));
        }
    }
}
