#pragma once

#include <cstdint>
#include <vector>

#include "exact.hpp"

namespace quartic {

// Exploration of nu_3(d_1(m)) over large ranges: where it vanishes, how the
// gaps between consecutive zeros relate to the sequence q_1 = 2,
// q_{j+1} = 3 q_j + (-1)^{j+1}, and how large the valuation gets.

struct QSequence {
    std::vector<std::uint64_t> terms;
};

struct GapRecord {
    unsigned long from_m = 0;
    unsigned long to_m = 0;
    unsigned long gap = 0;
    bool in_q_set = false;
};

struct ThreeAdicScan {
    unsigned long m_max = 0;
    std::vector<unsigned long> zeros;  // m with nu_3(d_1(m)) = 0, ascending
    std::vector<GapRecord> gaps;
    bool all_gaps_in_q_set = true;
    unsigned long max_m_at = 0;    // argmax of nu_3(d_1(m)) over 2 <= m <= m_max
    std::int64_t max_valuation = 0;
    // m = 1 is listed among the zeros; flagged so reports can present the
    // zero positions with or without it.
    bool includes_m_equal_1 = true;
};

// nu_3(d_1(m)) = nu_3(A_1(m)) - nu_3(m!); the power-of-two denominator
// carries no factor of 3.
PadicValuation nu3_d1(unsigned long m);

QSequence q_sequence(unsigned j_count);

// True iff g equals some q_j (the q_j are strictly increasing).
bool in_q_set(unsigned long g);

// Full scan over 1 <= m <= m_max with incrementally maintained products;
// one small multiplication per step, never recomputed from scratch.
ThreeAdicScan scan(unsigned long m_max);

}  // namespace quartic
