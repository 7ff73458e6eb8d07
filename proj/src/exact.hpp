#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

// Exact arithmetic kernel: arbitrary-precision integers and rationals
// (backed by GMP), dyadic rationals, p-adic valuations, and the
// combinatorial primitives everything else is built from.

namespace quartic {

using BigInt = mpz_class;
using BigRational = mpq_class;

// ---------------------------------------------------------------------------
// PadicValuation: an integer or +infinity (the valuation of zero).
// ---------------------------------------------------------------------------
struct PadicValuation {
    bool infinite = false;
    std::int64_t value = 0;  // meaningful only when !infinite

    static PadicValuation finite(std::int64_t v) { return {false, v}; }
    static PadicValuation infinity() { return {true, 0}; }

    bool is_infinite() const { return infinite; }
    std::int64_t finite_value() const {
        if (infinite) throw std::domain_error("valuation is infinite");
        return value;
    }

    friend bool operator==(const PadicValuation& a, const PadicValuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator!=(const PadicValuation& a, const PadicValuation& b) { return !(a == b); }
    // Ordering with infinity greater than every finite value.
    friend bool operator<(const PadicValuation& a, const PadicValuation& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator>=(const PadicValuation& a, const PadicValuation& b) { return !(a < b); }

    std::string str() const { return infinite ? "infinity" : std::to_string(value); }
};

// ---------------------------------------------------------------------------
// DyadicRational: oddPart * 2^exponent with oddPart odd (or zero).
// ---------------------------------------------------------------------------
class DyadicRational {
public:
    DyadicRational() = default;  // zero
    DyadicRational(BigInt odd_part, std::int64_t exponent);

    // Conversion is exact; from_rational throws if the reduced denominator
    // is not a power of two.
    static DyadicRational from_integer(const BigInt& n);
    static DyadicRational from_rational(const BigRational& q);
    BigRational to_rational() const;

    const BigInt& odd_part() const { return odd_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return odd_ == 0; }
    int sign() const { return sgn(odd_); }

    // nu_2 of the value; the stored exponent unless the value is zero.
    PadicValuation nu2() const {
        return is_zero() ? PadicValuation::infinity() : PadicValuation::finite(exp_);
    }

    // Reduced numerator (odd_part * 2^max(exp,0)) and denominator (2^max(-exp,0)).
    BigInt numerator() const;
    BigInt denominator() const;

    std::string str() const;           // "odd * 2^exp"
    std::string fraction_str() const;  // "p/q" (or "p" when integral)

    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.exp_ == b.exp_ && a.odd_ == b.odd_;
    }
    friend bool operator!=(const DyadicRational& a, const DyadicRational& b) { return !(a == b); }

private:
    BigInt odd_ = 0;
    std::int64_t exp_ = 0;
};

// ---------------------------------------------------------------------------
// Combinatorial primitives
// ---------------------------------------------------------------------------

// C(n, k); zero for k < 0 or k > n.
BigInt binom(unsigned long n, long k);

// Unsigned Stirling number of the first kind: coefficient of x^k in
// x(x+1)...(x+n-1). Zero outside 0 <= k <= n; [0,0] = 1.
BigInt stirling1u(unsigned long n, long k);

// Rising factorial r(r+1)...(r+k-1); empty product is 1.
BigRational rising(const BigRational& r, unsigned long k);

// prod_{k=1}^{m} (4k-1) and prod_{k=1}^{m} (4k+1); 1 for m = 0.
BigInt prod4m1(unsigned long m);
BigInt prod4p1(unsigned long m);

// Incremental form of the two products: after advance_to(m) (or m calls to
// step()) the state holds prod4m1(m) and prod4p1(m). One small
// multiplication per factor, never recomputed from scratch.
class Prod4State {
public:
    Prod4State() = default;
    void step();
    void advance_to(unsigned long m);
    unsigned long m() const { return m_; }
    const BigInt& minus() const { return minus_; }
    const BigInt& plus() const { return plus_; }

private:
    unsigned long m_ = 0;
    BigInt minus_ = 1;
    BigInt plus_ = 1;
};

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

// True for primes; deterministic trial division.
bool is_prime(unsigned long p);

// nu_p of a nonzero integer.
PadicValuation nu_p(const BigInt& x, unsigned long p);
// nu_p of a rational; infinity for zero. Throws std::invalid_argument on
// p < 2 or composite p.
PadicValuation nu_p(const BigRational& x, unsigned long p);
// For dyadic inputs with p = 2 this is the stored exponent.
PadicValuation nu_p(const DyadicRational& x, unsigned long p);

// Sum of the base-p digits of m.
unsigned long digit_sum(unsigned long m, unsigned long p);

// nu_p(m!) two ways: the floor sum over m/p^k, and Legendre's
// (m - s_p(m))/(p-1). Independent implementations.
unsigned long nu_factorial_floorsum(unsigned long m, unsigned long p);
unsigned long nu_factorial_legendre(unsigned long m, unsigned long p);

// Decimal digit count of |n| ("0" counts as one digit).
unsigned long decimal_digits(const BigInt& n);

BigInt factorial(unsigned long m);
BigInt pow2(unsigned long e);

}  // namespace quartic
