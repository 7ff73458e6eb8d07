#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"

namespace quartic {

// Executable suites for every theorem-level statement about the d_l(m):
// valuation formulas, bounds with their equality cases, Stirling-number
// expansions, cross-formula equality, the power-series identity, and the
// quadrature tie-back. Each suite scans its range in increasing order and
// reports the first counterexample it meets, if any.

struct Counterexample {
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite_name;
    unsigned long range_lo = 0;
    unsigned long range_hi = 0;
    bool passed = false;
    std::optional<Counterexample> first_counterexample;
};

// nu_2(d_0(m)) = -(m + nu_2(m!)) = s_2(m) - 2m.
SuiteReport check_thm2(unsigned long m_max);
// nu_2(sum_k 2^k C(2m-2k,m-k) C(m+k,m)) = s_2(m), on the integer sum.
SuiteReport check_cor2(unsigned long m_max);
// nu_2(d_0(m)) >= 1-2m, equality exactly at powers of two.
SuiteReport check_cor3(unsigned long m_max);
// sum_{k>=0} floor(m/2^k) = 2m-1 iff m is a power of two.
SuiteReport check_floorsum_char(unsigned long m_max);
// nu_2(d_1(m)) = 1-2m + nu_2(C(m+1,2)) + s_2(m).
SuiteReport check_thm4(unsigned long m_max);
// nu_2(B_m) = 2 + nu_2(C(m+1,2)) and nu_2(C_m) >= 3 + nu_2(C(m+1,2)).
SuiteReport check_lemma_ab(unsigned long m_max);
// nu_2(d_l(m)) >= l - 2m over the full triangle.
SuiteReport check_nu2_bound(unsigned long m_max);
// The four closed Stirling expansions [m, m-1] .. [m, m-4], plus the
// divisibility of (2k)! [m, m-k] by m(m-1)...(m-k) for k <= 6.
SuiteReport check_stirling_expansions(unsigned long m_max);
// Route equality: triple sum = single sum = alpha/beta split = Leibniz
// reconstruction = interpolation of the 2F1 form, for all l <= m <= m_max;
// closed forms for d_0, d_1 included at l = 0, 1.
SuiteReport check_crossformula(unsigned long m_max);
// Exact series coefficients at a in {0, 1/2, 1, 3}, orders k = 1..15.
SuiteReport check_taylor();
// Quadrature vs exact polynomial at 1e-9 for m <= 8 over the reference
// a-grid, and the two N(0;m) closed-form routes at 1e-12 for m <= 20.
SuiteReport check_quad();

// Registry used by the CLI: names thm2, cor2, cor3, floorsum, thm4,
// lemma-ab, nu2-bound, stirling, crossformula, taylor, quad, all.
bool is_suite_name(const std::string& name);
std::vector<std::string> suite_names();
unsigned long suite_default_range(const std::string& name);
// Runs one suite (or all of them). For "all", an explicit max_m caps each
// suite's default range instead of replacing it.
std::vector<SuiteReport> run_suites(const std::string& name,
                                    std::optional<unsigned long> max_m);

}  // namespace quartic
