#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intpoly.hpp"

namespace quartic {

// Exact decision of whether every root of an integer polynomial lies on
// the vertical line Re(m) = -1/2, together with a multiprecision numeric
// cross-check. The exact route substitutes m = t - 1/2, demands the shifted
// polynomial be even (up to a factor t), and counts negative real roots of
// the even part by Sturm chains; no floating point is involved.

enum class PolyFamily { Alpha, Beta };
enum class LineStatus { AllOnLine, Violated };

struct RationalInterval {
    BigRational lo;
    BigRational hi;
};

struct LineVerdict {
    unsigned l = 0;
    std::optional<PolyFamily> family;
    LineStatus verdict = LineStatus::Violated;
    bool parity_holds = false;
    unsigned real_root_count = 0;           // positive real roots of H(-v), with multiplicity
    unsigned expected_real_root_count = 0;  // deg H
    std::optional<RationalInterval> witness;  // isolates an off-line real root when one exists
};

// Signed remainder sequence of a square-free polynomial, each member scaled
// to a primitive integer polynomial (positive scaling preserves all signs).
struct SturmChain {
    std::vector<IntPolynomial> polynomials;
};

// h(t) = 2^{deg p} p(t - 1/2); maps the line Re(m) = -1/2 to Re(t) = 0.
IntPolynomial shift_half(const IntPolynomial& p);

// True iff every monomial of h has the same degree parity as deg h.
bool parity_check(const IntPolynomial& h);

SturmChain sturm_chain(const IntPolynomial& squarefree);

// Number of roots in (0, inf) counted with multiplicity. Roots at 0 are
// excluded; multiplicities recovered by repeated gcd with the derivative.
unsigned count_positive_real_roots(const IntPolynomial& h);

LineVerdict decide_line(const IntPolynomial& p);
LineVerdict decide_line(PolyFamily family, unsigned l);

struct NumericRoot {
    std::string re;
    std::string im;
};

struct NumericRootsResult {
    unsigned precision_bits = 0;
    std::vector<NumericRoot> roots;
    double max_offline = 0.0;  // max over roots of |Re + 1/2|
    std::string max_offline_str;
    unsigned iterations = 0;
};

// All deg(p) roots by Ehrlich-Aberth simultaneous iteration at the given
// precision. Deterministic start on the Cauchy-bound circle; throws
// std::runtime_error if the iteration cap is hit before convergence.
NumericRootsResult numeric_roots(const IntPolynomial& p, unsigned precision_bits);

}  // namespace quartic
