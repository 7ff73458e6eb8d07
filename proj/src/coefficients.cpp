#include "coefficients.hpp"

#include <stdexcept>

namespace quartic {

namespace {

void require_l_in_range(unsigned m, unsigned l) {
    if (l > m)
        throw std::out_of_range("coefficient index l = " + std::to_string(l) +
                                " outside [0, " + std::to_string(m) + "]");
}

}  // namespace

DyadicRational d_triple(unsigned m, unsigned l) {
    require_l_in_range(m, l);
    // Accumulate the sum scaled by 2^{3m}: each (j, s, k) term contributes
    // (-1)^{k-l-s} 2^{3(m-k)} times a product of five binomials.
    BigInt acc = 0;
    for (unsigned j = 0; j <= l; ++j) {
        for (unsigned s = 0; s + l <= m; ++s) {
            for (unsigned k = s + l; k <= m; ++k) {
                BigInt term = binom(2 * k, static_cast<long>(k));
                term *= binom(2 * m + 1, static_cast<long>(2 * (s + j)));
                term *= binom(m - s - j, static_cast<long>(m - k));
                term *= binom(s + j, static_cast<long>(j));
                term *= binom(k - s - j, static_cast<long>(l - j));
                if (term == 0) continue;
                mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), 3 * (m - k));
                if ((k - l - s) % 2 != 0) term = -term;
                acc += term;
            }
        }
    }
    DyadicRational scaled = DyadicRational::from_integer(acc);
    return DyadicRational(scaled.odd_part(), scaled.exponent() - 3 * static_cast<std::int64_t>(m));
}

BigInt d_single_scaled(unsigned m, unsigned l) {
    require_l_in_range(m, l);
    BigInt acc = 0;
    for (unsigned k = l; k <= m; ++k) {
        BigInt term = binom(2 * (m - k), static_cast<long>(m - k));
        term *= binom(m + k, static_cast<long>(m));
        term *= binom(k, static_cast<long>(l));
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k);
        acc += term;
    }
    return acc;
}

DyadicRational d_single(unsigned m, unsigned l) {
    DyadicRational scaled = DyadicRational::from_integer(d_single_scaled(m, l));
    return DyadicRational(scaled.odd_part(), scaled.exponent() - 2 * static_cast<std::int64_t>(m));
}

DyadicRational d0_closed(unsigned m) {
    BigRational q(prod4m1(m), factorial(m) * pow2(m));
    q.canonicalize();
    return DyadicRational::from_rational(q);
}

DyadicRational d1_closed(unsigned m) {
    if (m == 0) return {};  // formula continuation: no linear term
    BigInt num = BigInt(2 * m + 1) * prod4m1(m) - prod4p1(m);
    BigRational q(num, factorial(m) * pow2(m + 1));
    q.canonicalize();
    return DyadicRational::from_rational(q);
}

PolynomialP p_polynomial(unsigned m) {
    PolynomialP p;
    p.m = m;
    p.coeffs.reserve(m + 1);
    for (unsigned l = 0; l <= m; ++l) p.coeffs.push_back(d_single(m, l));
    return p;
}

BigRational p_eval(unsigned m, const BigRational& a) {
    // Horner over the scaled integer coefficients, then one dyadic division.
    BigRational r = 0;
    for (unsigned l = m + 1; l-- > 0;) r = r * a + BigRational(d_single_scaled(m, l));
    r /= BigRational(pow2(2 * m));
    r.canonicalize();
    return r;
}

BigRational p_via_2f1(unsigned m, const BigRational& a) {
    // Normalization note: combining the hypergeometric form of N(a;m) with
    // the defining prefactor of P_m as printed gives C(2m,m) * 2F1, which
    // evaluates to 2^{2m} P_m(a) (already 4(3/2 + a) vs P_1 = 3/2 + a at
    // m = 1). The 2^{-2m}-corrected form below is the one that matches
    // p_eval; both are kept on record here.
    // 2F1[-m, m+1; 1/2-m; z] terminates at k = m; c = 1/2 - m is a negative
    // half-integer, so no denominator factor ever vanishes.
    const BigRational z = (BigRational(1) + a) / 2;
    const BigRational c(1 - 2 * static_cast<long>(m), 2);
    BigRational term = 1;
    BigRational sum = 1;
    for (unsigned k = 0; k < m; ++k) {
        BigRational num = BigRational(-static_cast<long>(m) + static_cast<long>(k)) *
                          BigRational(static_cast<long>(m) + 1 + static_cast<long>(k));
        BigRational den = (c + static_cast<long>(k)) * BigRational(static_cast<long>(k) + 1);
        term *= num / den;
        term *= z;
        sum += term;
    }
    BigRational r = sum * BigRational(binom(2 * m, static_cast<long>(m)), pow2(2 * m));
    r.canonicalize();
    return r;
}

std::vector<BigRational> coeffs_via_2f1(unsigned m) {
    // Newton divided differences on the integer nodes a = 0..m, expanded to
    // the monomial basis. Exact throughout.
    const unsigned n = m + 1;
    std::vector<BigRational> nodes(n), dd(n);
    for (unsigned i = 0; i < n; ++i) {
        nodes[i] = BigRational(static_cast<long>(i));
        dd[i] = p_via_2f1(m, nodes[i]);
    }
    for (unsigned level = 1; level < n; ++level)
        for (unsigned i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

    std::vector<BigRational> coeffs(n, BigRational(0));
    std::vector<BigRational> basis(n, BigRational(0));  // prod_{j<k} (x - j)
    basis[0] = 1;
    unsigned basis_deg = 0;
    for (unsigned k = 0; k < n; ++k) {
        for (unsigned i = 0; i <= basis_deg; ++i) coeffs[i] += dd[k] * basis[i];
        if (k + 1 < n) {
            // basis *= (x - k)
            for (unsigned i = basis_deg + 1; i >= 1; --i)
                basis[i] = basis[i - 1] - BigRational(static_cast<long>(k)) * basis[i];
            basis[0] *= BigRational(-static_cast<long>(k));
            ++basis_deg;
        }
    }
    for (auto& c : coeffs) c.canonicalize();
    return coeffs;
}

namespace {

using Series = std::vector<BigRational>;  // coefficients 0..K

Series series_mul(const Series& a, const Series& b, unsigned K) {
    Series out(K + 1, BigRational(0));
    for (unsigned i = 0; i <= K && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; i + j <= K && j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// sqrt(1 + h) for a series h with h[0] = 0, truncated at order K:
// sum_i C(1/2, i) h^i with generalized binomial coefficients.
Series series_sqrt1p(const Series& h, unsigned K) {
    Series result(K + 1, BigRational(0));
    result[0] = 1;
    Series power(K + 1, BigRational(0));
    power[0] = 1;
    BigRational coeff = 1;  // C(1/2, i), updated incrementally
    for (unsigned i = 1; i <= K; ++i) {
        power = series_mul(power, h, K);
        coeff *= (BigRational(1, 2) - BigRational(static_cast<long>(i) - 1)) /
                 BigRational(static_cast<long>(i));
        for (unsigned j = 0; j <= K; ++j) result[j] += coeff * power[j];
    }
    return result;
}

}  // namespace

std::vector<TaylorCheckRow> taylor_check(const BigRational& a, unsigned K) {
    if (a <= -1) throw std::invalid_argument("taylor_check requires a > -1");
    if (K < 1) throw std::invalid_argument("taylor_check requires K >= 1");

    // F(c) = sqrt(a + sqrt(1+c)) / sqrt(a+1) = sqrt(1 + (sqrt(1+c)-1)/(1+a)).
    const BigRational one_plus_a = BigRational(1) + a;
    Series identity(K + 1, BigRational(0));
    identity[1] = 1;  // the series "c"
    Series g = series_sqrt1p(identity, K);  // sqrt(1+c)
    g[0] = 0;                               // sqrt(1+c) - 1
    for (auto& v : g) v /= one_plus_a;
    Series f = series_sqrt1p(g, K);

    std::vector<TaylorCheckRow> rows;
    rows.reserve(K);
    BigRational apow = one_plus_a;  // (a+1)^k
    for (unsigned k = 1; k <= K; ++k) {
        TaylorCheckRow row;
        row.k = k;
        row.lhs = f[k];
        row.lhs.canonicalize();
        BigRational rhs = p_eval(k - 1, a) /
                          (BigRational(static_cast<long>(k)) * BigRational(pow2(k + 1)) * apow);
        if (k % 2 == 0) rhs = -rhs;
        rhs.canonicalize();
        row.rhs = rhs;
        row.equal = (row.lhs == row.rhs);
        rows.push_back(std::move(row));
        apow *= one_plus_a;
    }
    return rows;
}

CoeffRecord coeff_record(unsigned m, unsigned l) {
    require_l_in_range(m, l);
    CoeffRecord rec;
    rec.m = m;
    rec.l = l;
    rec.value = d_single(m, l);
    rec.nu2 = rec.value.nu2();
    rec.nu3 = nu_p(rec.value, 3);
    rec.numerator_odd_part = rec.value.odd_part();
    rec.numerator_digits = decimal_digits(rec.value.numerator());
    return rec;
}

std::vector<CoeffRecord> coeff_table(unsigned m_max) {
    std::vector<CoeffRecord> rows;
    rows.reserve((static_cast<std::size_t>(m_max) + 1) * (m_max + 2) / 2);
    for (unsigned m = 0; m <= m_max; ++m)
        for (unsigned l = 0; l <= m; ++l) rows.push_back(coeff_record(m, l));
    return rows;
}

}  // namespace quartic
