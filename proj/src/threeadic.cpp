#include "threeadic.hpp"

#include <stdexcept>

#include "alphabeta.hpp"

namespace quartic {

PadicValuation nu3_d1(unsigned long m) {
    if (m < 1) throw std::invalid_argument("nu3_d1 requires m >= 1");
    PadicValuation va = nu_p(a1_of(m), 3);
    if (va.is_infinite()) return va;  // never happens: d_1(m) > 0
    auto vfact = static_cast<std::int64_t>(nu_factorial_legendre(m, 3));
    return PadicValuation::finite(va.finite_value() - vfact);
}

QSequence q_sequence(unsigned j_count) {
    if (j_count < 1) throw std::invalid_argument("q_sequence requires at least one term");
    QSequence q;
    q.terms.reserve(j_count);
    q.terms.push_back(2);
    for (unsigned j = 1; j < j_count; ++j) {
        // q_{j+1} = 3 q_j + (-1)^{j+1}, with j 1-based on the last term.
        std::uint64_t next = 3 * q.terms.back();
        if (j % 2 == 1)
            next += 1;
        else
            next -= 1;
        q.terms.push_back(next);
    }
    return q;
}

bool in_q_set(unsigned long g) {
    std::uint64_t q = 2;
    unsigned j = 1;
    while (q < g) {
        q = 3 * q;
        if (j % 2 == 1)
            q += 1;
        else
            q -= 1;
        ++j;
    }
    return q == g;
}

ThreeAdicScan scan(unsigned long m_max) {
    if (m_max < 2) throw std::invalid_argument("scan requires m_max >= 2");
    ThreeAdicScan result;
    result.m_max = m_max;

    Prod4State products;
    std::int64_t nu3_factorial = 0;  // nu_3(m!), updated by Legendre steps
    const BigInt three = 3;

    for (unsigned long m = 1; m <= m_max; ++m) {
        products.step();
        {
            // nu_3(m!) - nu_3((m-1)!) = nu_3(m)
            unsigned long t = m;
            while (t % 3 == 0) {
                ++nu3_factorial;
                t /= 3;
            }
        }
        BigInt a1 = BigInt(2 * m + 1) * products.minus() - products.plus();
        BigInt odd3;
        auto e3 = static_cast<std::int64_t>(
            mpz_remove(odd3.get_mpz_t(), a1.get_mpz_t(), three.get_mpz_t()));
        std::int64_t nu = e3 - nu3_factorial;

        if (nu == 0) result.zeros.push_back(m);
        if (m >= 2 && (result.max_m_at == 0 || nu > result.max_valuation)) {
            result.max_m_at = m;
            result.max_valuation = nu;
        }
    }

    result.gaps.reserve(result.zeros.size() > 0 ? result.zeros.size() - 1 : 0);
    for (std::size_t i = 1; i < result.zeros.size(); ++i) {
        GapRecord g;
        g.from_m = result.zeros[i - 1];
        g.to_m = result.zeros[i];
        g.gap = g.to_m - g.from_m;
        g.in_q_set = in_q_set(g.gap);
        if (!g.in_q_set) result.all_gaps_in_q_set = false;
        result.gaps.push_back(g);
    }
    result.includes_m_equal_1 = !result.zeros.empty() && result.zeros.front() == 1;
    return result;
}

}  // namespace quartic
