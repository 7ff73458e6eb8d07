#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "exact.hpp"

namespace quartic {

// Dense integer-coefficient polynomial in one variable. Canonical form:
// no trailing zero leading coefficient; the zero polynomial is the empty
// coefficient list (degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(BigInt c);
    // c1*x + c0
    static IntPolynomial linear(BigInt c1, BigInt c0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigInt& leading() const;
    const BigInt& coeff(std::size_t i) const;  // 0 beyond degree
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const;
    BigRational eval(const BigRational& x) const;

    IntPolynomial derivative() const;
    // Largest integer content (gcd of coefficients), nonnegative.
    BigInt content() const;
    // p / content, with leading coefficient sign preserved.
    IntPolynomial primitive_part() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator*(const BigInt& s) const;
    IntPolynomial operator-() const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "m") const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

// Product of (step*x + (offset + step*i)) for i in [0, count); 1 for count 0.
IntPolynomial arithmetic_factor_product(long step, long offset, unsigned long count);

// Rational-coefficient division: a = q*b + r with deg r < deg b.
// Coefficients are exact rationals of the inputs.
struct RationalDivision {
    std::vector<BigRational> quotient;
    std::vector<BigRational> remainder;
};
RationalDivision divide_rational(const IntPolynomial& a, const IntPolynomial& b);

// Primitive integer polynomial proportional (by a positive rational) to the
// rational-coefficient polynomial given; zero maps to zero.
IntPolynomial primitive_from_rational(const std::vector<BigRational>& coeffs);

// gcd over Q[x], returned as a primitive integer polynomial with positive
// leading coefficient; gcd(p, 0) = primitive part of p.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a/b when b divides a over Q[x]; throws otherwise.
IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace quartic
