#include "exact.hpp"

#include <mutex>
#include <vector>

namespace quartic {

// ---------------------------------------------------------------------------
// DyadicRational
// ---------------------------------------------------------------------------

DyadicRational::DyadicRational(BigInt odd_part, std::int64_t exponent)
    : odd_(std::move(odd_part)), exp_(exponent) {
    if (odd_ == 0) {
        exp_ = 0;
    } else if (mpz_even_p(odd_.get_mpz_t())) {
        throw std::invalid_argument("DyadicRational: odd part must be odd or zero");
    }
}

DyadicRational DyadicRational::from_integer(const BigInt& n) {
    if (n == 0) return {};
    BigInt odd;
    auto e = mpz_remove(odd.get_mpz_t(), n.get_mpz_t(), BigInt(2).get_mpz_t());
    return DyadicRational(odd, static_cast<std::int64_t>(e));
}

DyadicRational DyadicRational::from_rational(const BigRational& q) {
    if (q == 0) return {};
    const BigInt two = 2;
    BigInt num_odd, den_odd;
    auto en = mpz_remove(num_odd.get_mpz_t(), q.get_num_mpz_t(), two.get_mpz_t());
    auto ed = mpz_remove(den_odd.get_mpz_t(), q.get_den_mpz_t(), two.get_mpz_t());
    if (den_odd != 1)
        throw std::invalid_argument("not a dyadic rational: denominator " + q.get_den().get_str());
    return DyadicRational(num_odd, static_cast<std::int64_t>(en) - static_cast<std::int64_t>(ed));
}

BigRational DyadicRational::to_rational() const {
    BigRational q(numerator(), denominator());
    q.canonicalize();
    return q;
}

BigInt DyadicRational::numerator() const {
    if (exp_ >= 0) {
        BigInt n;
        mpz_mul_2exp(n.get_mpz_t(), odd_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
        return n;
    }
    return odd_;
}

BigInt DyadicRational::denominator() const {
    if (exp_ >= 0) return 1;
    return pow2(static_cast<unsigned long>(-exp_));
}

std::string DyadicRational::str() const {
    return odd_.get_str() + " * 2^" + std::to_string(exp_);
}

std::string DyadicRational::fraction_str() const {
    BigInt den = denominator();
    std::string s = numerator().get_str();
    if (den != 1) s += "/" + den.get_str();
    return s;
}

// ---------------------------------------------------------------------------
// Combinatorics
// ---------------------------------------------------------------------------

BigInt binom(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

namespace {

// Triangular recurrence rows, grown on demand. Shared across callers;
// guarded so concurrent use stays invisible.
class StirlingCache {
public:
    BigInt get(unsigned long n, unsigned long k) {
        std::lock_guard<std::mutex> lock(mu_);
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            unsigned long r = rows_.size();  // building row r
            std::vector<BigInt> row(r + 1);
            for (unsigned long j = 0; j <= r; ++j) {
                // [r, j] = [r-1, j-1] + (r-1) * [r-1, j]
                BigInt v = (j > 0) ? prev[j - 1] : BigInt(0);
                if (j < prev.size()) v += BigInt(r - 1) * prev[j];
                row[j] = v;
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_{{BigInt(1)}};  // row 0: [0,0] = 1
};

StirlingCache g_stirling;

}  // namespace

BigInt stirling1u(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    return g_stirling.get(n, static_cast<unsigned long>(k));
}

BigRational rising(const BigRational& r, unsigned long k) {
    BigRational acc = 1;
    BigRational f = r;
    for (unsigned long i = 0; i < k; ++i, f += 1) acc *= f;
    return acc;
}

BigInt prod4m1(unsigned long m) {
    BigInt p = 1;
    for (unsigned long k = 1; k <= m; ++k) p *= 4 * k - 1;
    return p;
}

BigInt prod4p1(unsigned long m) {
    BigInt p = 1;
    for (unsigned long k = 1; k <= m; ++k) p *= 4 * k + 1;
    return p;
}

void Prod4State::step() {
    ++m_;
    minus_ *= 4 * m_ - 1;
    plus_ *= 4 * m_ + 1;
}

void Prod4State::advance_to(unsigned long m) {
    if (m < m_) throw std::invalid_argument("Prod4State cannot rewind");
    while (m_ < m) step();
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (unsigned long d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {
void require_prime(unsigned long p) {
    if (!is_prime(p))
        throw std::invalid_argument("nu_p: p = " + std::to_string(p) + " is not prime");
}
}  // namespace

PadicValuation nu_p(const BigInt& x, unsigned long p) {
    require_prime(p);
    if (x == 0) return PadicValuation::infinity();
    BigInt rest;
    auto e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), BigInt(p).get_mpz_t());
    return PadicValuation::finite(static_cast<std::int64_t>(e));
}

PadicValuation nu_p(const BigRational& x, unsigned long p) {
    require_prime(p);
    if (x == 0) return PadicValuation::infinity();
    BigInt rest;
    const BigInt bp = p;
    auto en = mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), bp.get_mpz_t());
    auto ed = mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), bp.get_mpz_t());
    return PadicValuation::finite(static_cast<std::int64_t>(en) - static_cast<std::int64_t>(ed));
}

PadicValuation nu_p(const DyadicRational& x, unsigned long p) {
    require_prime(p);
    if (x.is_zero()) return PadicValuation::infinity();
    if (p == 2) return PadicValuation::finite(x.exponent());
    // The power of two carries no odd-prime content.
    return nu_p(x.odd_part(), p);
}

unsigned long digit_sum(unsigned long m, unsigned long p) {
    if (p < 2) throw std::invalid_argument("digit_sum: base must be >= 2");
    unsigned long s = 0;
    while (m > 0) {
        s += m % p;
        m /= p;
    }
    return s;
}

unsigned long nu_factorial_floorsum(unsigned long m, unsigned long p) {
    require_prime(p);
    unsigned long total = 0;
    for (unsigned long q = p; q <= m; q *= p) {
        total += m / q;
        if (q > m / p) break;  // next q would overflow
    }
    return total;
}

unsigned long nu_factorial_legendre(unsigned long m, unsigned long p) {
    require_prime(p);
    return (m - digit_sum(m, p)) / (p - 1);
}

unsigned long decimal_digits(const BigInt& n) {
    BigInt a = abs(n);
    return a.get_str().size();
}

BigInt factorial(unsigned long m) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace quartic
