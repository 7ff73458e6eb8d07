#include "intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace quartic {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    p.c_.push_back(std::move(c));
    p.normalize();
    return p;
}

IntPolynomial IntPolynomial::linear(BigInt c1, BigInt c0) {
    IntPolynomial p;
    p.c_.push_back(std::move(c0));
    p.c_.push_back(std::move(c1));
    p.normalize();
    return p;
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

BigRational IntPolynomial::eval(const BigRational& x) const {
    BigRational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(i);
    return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) return {};
    BigInt g = content();
    std::vector<BigInt> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
    std::vector<BigInt> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const { return *this * BigInt(-1); }

std::string IntPolynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        BigInt a = abs(c);
        bool show_coeff = (a != 1 || i == 0);
        if (show_coeff) s += a.get_str();
        if (i > 0) {
            if (show_coeff) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

IntPolynomial arithmetic_factor_product(long step, long offset, unsigned long count) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (unsigned long i = 0; i < count; ++i)
        p = p * IntPolynomial::linear(step, offset + step * static_cast<long>(i));
    return p;
}

RationalDivision divide_rational(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<BigRational> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {{}, std::move(rem)};
    std::vector<BigRational> quot(static_cast<std::size_t>(dq) + 1);
    BigRational lead_b(b.leading());
    for (int i = dq; i >= 0; --i) {
        BigRational q = rem[static_cast<std::size_t>(i + db)] / lead_b;
        quot[static_cast<std::size_t>(i)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * BigRational(b.coeff(static_cast<std::size_t>(j)));
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {std::move(quot), std::move(rem)};
}

IntPolynomial primitive_from_rational(const std::vector<BigRational>& coeffs) {
    // Clear denominators with their lcm, then strip the content.
    BigInt den_lcm = 1;
    for (const auto& q : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> ints(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        BigRational scaled = coeffs[i] * BigRational(den_lcm);
        scaled.canonicalize();
        ints[i] = scaled.get_num();
    }
    IntPolynomial p{std::move(ints)};
    if (p.is_zero()) return p;
    return p.primitive_part();
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = a.primitive_part();
    IntPolynomial g = b.primitive_part();
    while (!g.is_zero()) {
        auto div = divide_rational(f, g);
        IntPolynomial r = primitive_from_rational(div.remainder);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.is_zero() && f.leading() < 0) f = -f;
    return f;
}

IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    auto div = divide_rational(a, b);
    for (const auto& r : div.remainder)
        if (r != 0) throw std::invalid_argument("poly_divexact: division is not exact");
    std::vector<BigInt> out(div.quotient.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (div.quotient[i].get_den() != 1)
            throw std::invalid_argument("poly_divexact: quotient is not integral");
        out[i] = div.quotient[i].get_num();
    }
    return IntPolynomial(std::move(out));
}

}  // namespace quartic
