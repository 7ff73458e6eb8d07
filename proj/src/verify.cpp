#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "alphabeta.hpp"
#include "coefficients.hpp"
#include "quadrature.hpp"

namespace quartic {

namespace {

// Scan [lo, hi] in order; `check` returns a counterexample or nullopt.
SuiteReport run_scan(std::string name, unsigned long lo, unsigned long hi,
                     const std::function<std::optional<Counterexample>(unsigned long)>& check) {
    SuiteReport report;
    report.suite_name = std::move(name);
    report.range_lo = lo;
    report.range_hi = hi;
    report.passed = true;
    for (unsigned long m = lo; m <= hi; ++m) {
        auto ce = check(m);
        if (ce) {
            report.passed = false;
            report.first_counterexample = std::move(ce);
            break;
        }
    }
    return report;
}

std::string fmt_val(const PadicValuation& v) { return v.str(); }

bool is_power_of_two(unsigned long m) { return m != 0 && (m & (m - 1)) == 0; }

}  // namespace

SuiteReport check_thm2(unsigned long m_max) {
    return run_scan("thm2", 1, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        PadicValuation actual = nu_p(d0_closed(static_cast<unsigned>(m)), 2);
        std::int64_t via_factorial =
            -(static_cast<std::int64_t>(m) + static_cast<std::int64_t>(nu_factorial_floorsum(m, 2)));
        std::int64_t via_digits = static_cast<std::int64_t>(digit_sum(m, 2)) -
                                  2 * static_cast<std::int64_t>(m);
        if (actual == PadicValuation::finite(via_factorial) && via_factorial == via_digits)
            return std::nullopt;
        return Counterexample{"m = " + std::to_string(m),
                              std::to_string(via_factorial) + " and " + std::to_string(via_digits),
                              fmt_val(actual)};
    });
}

SuiteReport check_cor2(unsigned long m_max) {
    return run_scan("cor2", 1, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        BigInt sum = 0;
        for (unsigned long k = 0; k <= m; ++k) {
            BigInt term = binom(2 * (m - k), static_cast<long>(m - k));
            term *= binom(m + k, static_cast<long>(m));
            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k);
            sum += term;
        }
        PadicValuation actual = nu_p(sum, 2);
        auto expected = static_cast<std::int64_t>(digit_sum(m, 2));
        if (actual == PadicValuation::finite(expected)) return std::nullopt;
        return Counterexample{"m = " + std::to_string(m), std::to_string(expected),
                              fmt_val(actual)};
    });
}

SuiteReport check_cor3(unsigned long m_max) {
    return run_scan("cor3", 1, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        PadicValuation nu = nu_p(d0_closed(static_cast<unsigned>(m)), 2);
        std::int64_t bound = 1 - 2 * static_cast<std::int64_t>(m);
        bool at_bound = (nu == PadicValuation::finite(bound));
        if (nu < PadicValuation::finite(bound))
            return Counterexample{"m = " + std::to_string(m), ">= " + std::to_string(bound),
                                  fmt_val(nu)};
        if (at_bound != is_power_of_two(m))
            return Counterexample{
                "m = " + std::to_string(m),
                std::string("equality iff power of two (is ") +
                    (is_power_of_two(m) ? "power" : "not a power") + ")",
                fmt_val(nu) + " vs bound " + std::to_string(bound)};
        return std::nullopt;
    });
}

SuiteReport check_floorsum_char(unsigned long m_max) {
    return run_scan("floorsum", 1, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        // sum_{k>=0} floor(m/2^k) = m + nu_2(m!)
        unsigned long sum = m + nu_factorial_floorsum(m, 2);
        bool hits = (sum == 2 * m - 1);
        if (hits == is_power_of_two(m)) return std::nullopt;
        return Counterexample{"m = " + std::to_string(m),
                              "sum = 2m-1 iff m is a power of two",
                              "sum = " + std::to_string(sum)};
    });
}

SuiteReport check_thm4(unsigned long m_max) {
    return run_scan("thm4", 1, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        PadicValuation actual = nu_p(d1_closed(static_cast<unsigned>(m)), 2);
        PadicValuation binom_nu = nu_p(binom(m + 1, 2), 2);
        std::int64_t expected = 1 - 2 * static_cast<std::int64_t>(m) + binom_nu.finite_value() +
                                static_cast<std::int64_t>(digit_sum(m, 2));
        if (actual == PadicValuation::finite(expected)) return std::nullopt;
        return Counterexample{"m = " + std::to_string(m), std::to_string(expected),
                              fmt_val(actual)};
    });
}

SuiteReport check_lemma_ab(unsigned long m_max) {
    return run_scan("lemma-ab", 1, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        std::int64_t binom_nu = nu_p(binom(m + 1, 2), 2).finite_value();
        PadicValuation nb = nu_p(b_of(m), 2);
        if (nb != PadicValuation::finite(2 + binom_nu))
            return Counterexample{"m = " + std::to_string(m) + " (bound a on B_m)",
                                  std::to_string(2 + binom_nu), fmt_val(nb)};
        PadicValuation nc = nu_p(c_of(m), 2);
        if (nc < PadicValuation::finite(3 + binom_nu))
            return Counterexample{"m = " + std::to_string(m) + " (bound b on C_m)",
                                  ">= " + std::to_string(3 + binom_nu), fmt_val(nc)};
        return std::nullopt;
    });
}

SuiteReport check_nu2_bound(unsigned long m_max) {
    return run_scan("nu2-bound", 0, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        for (unsigned long l = 0; l <= m; ++l) {
            DyadicRational d = d_single(static_cast<unsigned>(m), static_cast<unsigned>(l));
            std::int64_t bound = static_cast<std::int64_t>(l) - 2 * static_cast<std::int64_t>(m);
            if (d.nu2() < PadicValuation::finite(bound))
                return Counterexample{
                    "m = " + std::to_string(m) + ", l = " + std::to_string(l),
                    ">= " + std::to_string(bound), fmt_val(d.nu2())};
        }
        return std::nullopt;
    });
}

SuiteReport check_stirling_expansions(unsigned long m_max) {
    return run_scan("stirling", 4, m_max, [](unsigned long m) -> std::optional<Counterexample> {
        const long lm = static_cast<long>(m);
        const BigInt expansions[4] = {
            binom(m, 2),
            3 * binom(m, 4) + 2 * binom(m, 3),
            15 * binom(m, 6) + 20 * binom(m, 5) + 6 * binom(m, 4),
            105 * binom(m, 8) + 210 * binom(m, 7) + 130 * binom(m, 6) + 24 * binom(m, 5)};
        for (unsigned k = 1; k <= 4; ++k) {
            BigInt actual = stirling1u(m, lm - static_cast<long>(k));
            if (actual != expansions[k - 1])
                return Counterexample{
                    "m = " + std::to_string(m) + ", [m, m-" + std::to_string(k) + "]",
                    expansions[k - 1].get_str(), actual.get_str()};
        }
        // (2k)! [m, m-k] divisible by m(m-1)...(m-k), k <= 6.
        for (unsigned k = 1; k <= 6 && k < m; ++k) {
            BigInt falling = 1;
            for (unsigned long i = 0; i <= k; ++i) falling *= BigInt(m - i);
            BigInt lhs = factorial(2 * k) * stirling1u(m, lm - static_cast<long>(k));
            if (!mpz_divisible_p(lhs.get_mpz_t(), falling.get_mpz_t()))
                return Counterexample{
                    "m = " + std::to_string(m) + ", k = " + std::to_string(k),
                    "(2k)! [m, m-k] divisible by m(m-1)...(m-k)",
                    lhs.get_str() + " not divisible by " + falling.get_str()};
        }
        return std::nullopt;
    });
}

SuiteReport check_crossformula(unsigned long m_max) {
    return run_scan("crossformula", 0, m_max, [](unsigned long mu) -> std::optional<Counterexample> {
        const unsigned m = static_cast<unsigned>(mu);
        std::vector<BigRational> interp = coeffs_via_2f1(m);
        for (unsigned l = 0; l <= m; ++l) {
            const DyadicRational single = d_single(m, l);
            auto mismatch = [&](const char* route, const std::string& got)
                -> std::optional<Counterexample> {
                return Counterexample{"m = " + std::to_string(m) + ", l = " + std::to_string(l) +
                                          " (" + route + ")",
                                      single.fraction_str(), got};
            };
            DyadicRational triple = d_triple(m, l);
            if (triple != single) return mismatch("triple sum", triple.fraction_str());
            DyadicRational split = d_alphabeta(m, l);
            if (split != single) return mismatch("alpha/beta split", split.fraction_str());
            DyadicRational leibniz = leibniz_dl(m, l);
            if (leibniz != single) return mismatch("Leibniz", leibniz.fraction_str());
            BigRational from_2f1 = interp[l];
            if (from_2f1 != single.to_rational())
                return mismatch("2F1 interpolation", from_2f1.get_str());
            if (l == 0) {
                DyadicRational closed = d0_closed(m);
                if (closed != single) return mismatch("d0 closed form", closed.fraction_str());
            }
            if (l == 1) {
                DyadicRational closed = d1_closed(m);
                if (closed != single) return mismatch("d1 closed form", closed.fraction_str());
            }
        }
        return std::nullopt;
    });
}

SuiteReport check_taylor() {
    SuiteReport report;
    report.suite_name = "taylor";
    report.range_lo = 1;
    report.range_hi = 15;
    report.passed = true;
    const BigRational points[4] = {BigRational(0), BigRational(1, 2), BigRational(1),
                                   BigRational(3)};
    for (const auto& a : points) {
        auto rows = taylor_check(a, 15);
        for (const auto& row : rows) {
            if (!row.equal) {
                report.passed = false;
                report.first_counterexample =
                    Counterexample{"a = " + a.get_str() + ", k = " + std::to_string(row.k),
                                   row.rhs.get_str(), row.lhs.get_str()};
                return report;
            }
        }
    }
    return report;
}

SuiteReport check_quad() {
    SuiteReport report;
    report.suite_name = "quad";
    report.range_lo = 0;
    report.range_hi = 8;
    report.passed = true;
    const double grid[7] = {-0.9, -0.5, 0.0, 0.5, 1.0, 3.0, 10.0};
    for (unsigned m = 0; m <= 8; ++m) {
        for (double a : grid) {
            PolyIdentityCheck check = check_poly_identity(a, m, 1e-9);
            if (!check.ok) {
                report.passed = false;
                report.first_counterexample = Counterexample{
                    "m = " + std::to_string(m) + ", a = " + std::to_string(a),
                    "relative error <= 1e-9",
                    "rel_error = " + std::to_string(check.rel_error)};
                return report;
            }
        }
    }
    for (unsigned m = 0; m <= 20; ++m) {
        auto [beta_route, product_route] = n04_zero_closed(m);
        double rel = std::abs(beta_route - product_route) / std::abs(product_route);
        if (!(rel <= 1e-12)) {
            report.passed = false;
            report.first_counterexample =
                Counterexample{"m = " + std::to_string(m) + " (N(0;m) closed forms)",
                               "relative agreement <= 1e-12", "rel = " + std::to_string(rel)};
            return report;
        }
    }
    return report;
}

namespace {

struct SuiteEntry {
    const char* name;
    unsigned long default_range;
    SuiteReport (*ranged)(unsigned long);
    SuiteReport (*fixed)();
};

const SuiteEntry kSuites[] = {
    {"thm2", 2000, check_thm2, nullptr},
    {"cor2", 2000, check_cor2, nullptr},
    {"cor3", 2000, check_cor3, nullptr},
    {"floorsum", 2000, check_floorsum_char, nullptr},
    {"thm4", 1000, check_thm4, nullptr},
    {"lemma-ab", 1000, check_lemma_ab, nullptr},
    {"nu2-bound", 60, check_nu2_bound, nullptr},
    {"stirling", 100, check_stirling_expansions, nullptr},
    {"crossformula", 30, check_crossformula, nullptr},
    {"taylor", 0, nullptr, check_taylor},
    {"quad", 0, nullptr, check_quad},
};

}  // namespace

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    for (const auto& s : kSuites)
        if (name == s.name) return true;
    return false;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& s : kSuites) names.emplace_back(s.name);
    names.emplace_back("all");
    return names;
}

unsigned long suite_default_range(const std::string& name) {
    for (const auto& s : kSuites)
        if (name == s.name) return s.default_range;
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& name,
                                    std::optional<unsigned long> max_m) {
    std::vector<SuiteReport> reports;
    if (name == "all") {
        for (const auto& s : kSuites) {
            if (s.fixed) {
                reports.push_back(s.fixed());
            } else {
                unsigned long range = s.default_range;
                if (max_m) range = std::min(range, *max_m);
                reports.push_back(s.ranged(range));
            }
        }
        return reports;
    }
    for (const auto& s : kSuites) {
        if (name != s.name) continue;
        if (s.fixed)
            reports.push_back(s.fixed());
        else
            reports.push_back(s.ranged(max_m.value_or(s.default_range)));
        return reports;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace quartic
