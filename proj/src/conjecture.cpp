#include "conjecture.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

#include "alphabeta.hpp"

namespace quartic {

// ---------------------------------------------------------------------------
// Exact route
// ---------------------------------------------------------------------------

IntPolynomial shift_half(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("shift_half: zero polynomial");
    // 2^n p(t - 1/2) = sum a_i 2^{n-i} (2t-1)^i, assembled by Horner.
    const int n = p.degree();
    const IntPolynomial two_t_minus_1 = IntPolynomial::linear(2, -1);
    IntPolynomial r = IntPolynomial::constant(p.coeff(static_cast<std::size_t>(n)));
    for (int i = n - 1; i >= 0; --i) {
        BigInt scaled = p.coeff(static_cast<std::size_t>(i)) * pow2(static_cast<unsigned long>(n - i));
        r = r * two_t_minus_1 + IntPolynomial::constant(scaled);
    }
    return r;
}

bool parity_check(const IntPolynomial& h) {
    if (h.is_zero()) throw std::invalid_argument("parity_check: zero polynomial");
    const int parity = h.degree() % 2;
    for (int i = 0; i <= h.degree(); ++i)
        if (h.coeff(static_cast<std::size_t>(i)) != 0 && i % 2 != parity) return false;
    return true;
}

SturmChain sturm_chain(const IntPolynomial& squarefree) {
    if (squarefree.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    SturmChain chain;
    chain.polynomials.push_back(squarefree);
    if (squarefree.degree() == 0) return chain;
    chain.polynomials.push_back(squarefree.derivative());
    while (chain.polynomials.back().degree() > 0) {
        const auto& a = chain.polynomials[chain.polynomials.size() - 2];
        const auto& b = chain.polynomials.back();
        auto div = divide_rational(a, b);
        IntPolynomial r = primitive_from_rational(div.remainder);
        if (r.is_zero()) break;  // gcd is non-constant; input was not square-free
        chain.polynomials.push_back(-r);
    }
    return chain;
}

namespace {

int sign_of(const BigInt& v) { return sgn(v); }

// Sign variations of the chain at 0 (constant terms) or at +infinity
// (leading coefficients); zero entries are skipped.
unsigned variations(const SturmChain& chain, bool at_infinity) {
    int prev = 0;
    unsigned var = 0;
    for (const auto& p : chain.polynomials) {
        int s = at_infinity ? sign_of(p.leading()) : sign_of(p.coeff(0));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Distinct roots of a square-free polynomial in (0, inf).
unsigned sturm_count_positive(const IntPolynomial& squarefree) {
    if (squarefree.degree() <= 0) return 0;
    SturmChain chain = sturm_chain(squarefree);
    const int at_zero = static_cast<int>(variations(chain, false));
    const int at_inf = static_cast<int>(variations(chain, true));
    if (at_zero < at_inf)
        throw std::logic_error("sturm_count_positive: inconsistent variation counts");
    return static_cast<unsigned>(at_zero - at_inf);
}

IntPolynomial strip_zero_roots(IntPolynomial p, unsigned* order = nullptr) {
    std::size_t e = 0;
    while (e < p.coeffs().size() && p.coeffs()[e] == 0) ++e;
    if (order) *order = static_cast<unsigned>(e);
    if (e == 0) return p;
    std::vector<BigInt> shifted(p.coeffs().begin() + static_cast<long>(e), p.coeffs().end());
    return IntPolynomial(std::move(shifted));
}

}  // namespace

unsigned count_positive_real_roots(const IntPolynomial& h) {
    if (h.is_zero()) throw std::invalid_argument("count_positive_real_roots: zero polynomial");
    IntPolynomial p = strip_zero_roots(h).primitive_part();
    unsigned total = 0;
    while (p.degree() > 0) {
        IntPolynomial d = poly_gcd(p, p.derivative());
        IntPolynomial squarefree =
            (d.degree() == 0) ? p : primitive_from_rational(divide_rational(p, d).quotient);
        total += sturm_count_positive(squarefree);
        p = d;
    }
    return total;
}

namespace {

// Even-part extraction: for g with only even-degree monomials, G(v) with
// G(t^2) = g(t).
IntPolynomial even_part(const IntPolynomial& g) {
    std::vector<BigInt> c;
    for (int i = 0; i <= g.degree(); i += 2) c.push_back(g.coeff(static_cast<std::size_t>(i)));
    return IntPolynomial(std::move(c));
}

IntPolynomial negate_variable(const IntPolynomial& p) {
    std::vector<BigInt> c(p.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

// Isolating intervals for the distinct real roots of a square-free
// polynomial, by Sturm-guided bisection of (-bound, bound].
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& squarefree) {
    std::vector<RationalInterval> out;
    if (squarefree.degree() <= 0) return out;
    SturmChain chain = sturm_chain(squarefree);

    auto variations_at = [&chain](const BigRational& x) {
        int prev = 0;
        unsigned var = 0;
        for (const auto& p : chain.polynomials) {
            int s = sgn(p.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    };

    // Cauchy bound, rounded up to an integer.
    BigInt max_abs = 0;
    for (const auto& c : squarefree.coeffs()) {
        BigInt a = abs(c);
        if (a > max_abs) max_abs = a;
    }
    BigInt bound_int = max_abs / abs(squarefree.leading()) + 2;
    BigRational bound(bound_int);

    struct Segment {
        BigRational lo, hi;
        unsigned vlo, vhi;
    };
    std::vector<Segment> stack{{-bound, bound, variations_at(-bound), variations_at(bound)}};
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        unsigned roots = seg.vlo - seg.vhi;
        if (roots == 0) continue;
        if (roots == 1) {
            out.push_back({seg.lo, seg.hi});
            continue;
        }
        BigRational mid = (seg.lo + seg.hi) / 2;
        // Nudge off a root so Sturm endpoints stay regular.
        while (squarefree.eval(mid) == 0)
            mid = (seg.lo + mid) / 2;
        unsigned vmid = variations_at(mid);
        stack.push_back({seg.lo, mid, seg.vlo, vmid});
        stack.push_back({mid, seg.hi, vmid, seg.vhi});
    }
    return out;
}

// Shrink an isolating interval until it excludes x (which is not the root).
RationalInterval refine_away_from(const IntPolynomial& squarefree, RationalInterval iv,
                                  const BigRational& x) {
    auto contains = [&iv](const BigRational& v) { return iv.lo < v && v < iv.hi; };
    for (int guard = 0; guard < 4096 && contains(x); ++guard) {
        BigRational mid = (iv.lo + iv.hi) / 2;
        int sign_mid = sgn(squarefree.eval(mid));
        if (sign_mid == 0) {
            // Root exactly at mid: collapse to a thin interval around it.
            BigRational width = (iv.hi - iv.lo) / 4;
            iv.lo = mid - width;
            iv.hi = mid + width;
            continue;
        }
        if (sign_mid == sgn(squarefree.eval(iv.lo))) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

// An isolating interval for some real root of p different from -1/2, when
// p has one; nullopt when every off-line root is complex.
std::optional<RationalInterval> find_offline_real_root(const IntPolynomial& p) {
    const BigRational minus_half(-1, 2);
    IntPolynomial q = p.primitive_part();
    // Deflate the on-line root at -1/2.
    const IntPolynomial on_line = IntPolynomial::linear(2, 1);  // 2m + 1
    while (q.degree() > 0 && q.eval(minus_half) == 0)
        q = primitive_from_rational(divide_rational(q, on_line).quotient);
    if (q.degree() <= 0) return std::nullopt;
    IntPolynomial d = poly_gcd(q, q.derivative());
    IntPolynomial squarefree =
        (d.degree() == 0) ? q : primitive_from_rational(divide_rational(q, d).quotient);
    auto intervals = isolate_real_roots(squarefree);
    if (intervals.empty()) return std::nullopt;
    RationalInterval iv = refine_away_from(squarefree, intervals.front(), minus_half);
    iv.lo.canonicalize();
    iv.hi.canonicalize();
    return iv;
}

}  // namespace

LineVerdict decide_line(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("decide_line: zero polynomial");
    LineVerdict v;
    if (p.degree() == 0) {
        // No roots at all: vacuously on the line.
        v.verdict = LineStatus::AllOnLine;
        v.parity_holds = true;
        return v;
    }
    IntPolynomial h = shift_half(p);
    v.parity_holds = parity_check(h);
    // Roots of h at t = 0 are m = -1/2, on the line; strip them.
    IntPolynomial g = strip_zero_roots(h);
    if (!v.parity_holds || g.degree() % 2 != 0) {
        // A lone odd-degree monomial mix cannot pair roots as +-iy.
        v.expected_real_root_count = static_cast<unsigned>((g.degree() + 1) / 2);
        v.real_root_count = 0;
        v.verdict = LineStatus::Violated;
        v.witness = find_offline_real_root(p);
        return v;
    }
    IntPolynomial big_h = even_part(g);  // g(t) = H(t^2)
    v.expected_real_root_count = static_cast<unsigned>(big_h.degree());
    if (big_h.degree() == 0) {
        v.real_root_count = 0;
        v.verdict = LineStatus::AllOnLine;
        return v;
    }
    // All roots of g purely imaginary <=> all roots of H negative real,
    // with multiplicity <=> H(-v) has deg H positive real roots.
    v.real_root_count = count_positive_real_roots(negate_variable(big_h));
    v.verdict = (v.real_root_count == v.expected_real_root_count) ? LineStatus::AllOnLine
                                                                  : LineStatus::Violated;
    if (v.verdict == LineStatus::Violated) v.witness = find_offline_real_root(p);
    return v;
}

LineVerdict decide_line(PolyFamily family, unsigned l) {
    IntPolynomial p = (family == PolyFamily::Alpha) ? alpha_poly(l) : beta_poly(l);
    LineVerdict v = decide_line(p);
    v.l = l;
    v.family = family;
    return v;
}

// ---------------------------------------------------------------------------
// Numeric cross-check: Ehrlich-Aberth at MPFR precision
// ---------------------------------------------------------------------------

namespace {

struct Real {
    mpfr_t x;
    explicit Real(mpfr_prec_t prec) { mpfr_init2(x, prec); mpfr_set_zero(x, 1); }
    Real(const Real& o) { mpfr_init2(x, mpfr_get_prec(o.x)); mpfr_set(x, o.x, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(x, o.x, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(x); }
};

struct Cplx {
    Real re, im;
    explicit Cplx(mpfr_prec_t prec) : re(prec), im(prec) {}
};

class AberthSolver {
public:
    AberthSolver(const IntPolynomial& p, mpfr_prec_t prec)
        : prec_(prec), n_(static_cast<std::size_t>(p.degree())) {
        coeffs_.reserve(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) {
            Real c(prec_);
            mpfr_set_z(c.x, p.coeff(i).get_mpz_t(), MPFR_RNDN);
            coeffs_.push_back(c);
        }
        deriv_.reserve(n_);
        for (std::size_t i = 1; i <= n_; ++i) {
            Real c(prec_);
            mpfr_mul_ui(c.x, coeffs_[i].x, static_cast<unsigned long>(i), MPFR_RNDN);
            deriv_.push_back(c);
        }
    }

    // Deterministic start: Cauchy-bound circle with a fixed angular offset
    // and a mild per-index radial stagger to break symmetry.
    std::vector<Cplx> initial_points() const {
        Real bound(prec_);
        for (std::size_t i = 0; i < n_; ++i) {
            Real q(prec_);
            mpfr_div(q.x, coeffs_[i].x, coeffs_[n_].x, MPFR_RNDN);
            mpfr_abs(q.x, q.x, MPFR_RNDN);
            if (mpfr_cmp(q.x, bound.x) > 0) mpfr_set(bound.x, q.x, MPFR_RNDN);
        }
        mpfr_add_ui(bound.x, bound.x, 1, MPFR_RNDN);

        Real two_pi(prec_);
        mpfr_const_pi(two_pi.x, MPFR_RNDN);
        mpfr_mul_ui(two_pi.x, two_pi.x, 2, MPFR_RNDN);

        std::vector<Cplx> z;
        z.reserve(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            Real theta(prec_);
            mpfr_set_ui(theta.x, static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_add_d(theta.x, theta.x, 0.3761, MPFR_RNDN);
            mpfr_div_ui(theta.x, theta.x, static_cast<unsigned long>(n_), MPFR_RNDN);
            mpfr_mul(theta.x, theta.x, two_pi.x, MPFR_RNDN);
            Real radius(prec_);
            mpfr_set_d(radius.x, 1.0 + 0.03125 * static_cast<double>(k % 7), MPFR_RNDN);
            mpfr_mul(radius.x, radius.x, bound.x, MPFR_RNDN);
            Cplx pt(prec_);
            mpfr_sin_cos(pt.im.x, pt.re.x, theta.x, MPFR_RNDN);
            mpfr_mul(pt.re.x, pt.re.x, radius.x, MPFR_RNDN);
            mpfr_mul(pt.im.x, pt.im.x, radius.x, MPFR_RNDN);
            z.push_back(pt);
        }
        return z;
    }

    void eval(const Cplx& z, Cplx& p_out, Cplx& dp_out) const {
        horner(coeffs_, z, p_out);
        horner(deriv_, z, dp_out);
    }

    std::size_t degree() const { return n_; }
    mpfr_prec_t prec() const { return prec_; }

private:
    void horner(const std::vector<Real>& c, const Cplx& z, Cplx& out) const {
        Cplx acc(prec_);
        Real t1(prec_), t2(prec_);
        for (std::size_t i = c.size(); i-- > 0;) {
            // acc = acc * z + c[i]
            mpfr_mul(t1.x, acc.re.x, z.re.x, MPFR_RNDN);
            mpfr_mul(t2.x, acc.im.x, z.im.x, MPFR_RNDN);
            mpfr_sub(t1.x, t1.x, t2.x, MPFR_RNDN);
            mpfr_mul(t2.x, acc.re.x, z.im.x, MPFR_RNDN);
            mpfr_fma(acc.im.x, acc.im.x, z.re.x, t2.x, MPFR_RNDN);
            mpfr_add(acc.re.x, t1.x, c[i].x, MPFR_RNDN);
        }
        out = acc;
    }

    mpfr_prec_t prec_;
    std::size_t n_;
    std::vector<Real> coeffs_;
    std::vector<Real> deriv_;
};

void cplx_div(const Cplx& a, const Cplx& b, Cplx& out, mpfr_prec_t prec) {
    Real den(prec), t1(prec), t2(prec);
    mpfr_mul(t1.x, b.re.x, b.re.x, MPFR_RNDN);
    mpfr_fma(den.x, b.im.x, b.im.x, t1.x, MPFR_RNDN);
    // re = (a.re*b.re + a.im*b.im) / den
    mpfr_mul(t1.x, a.re.x, b.re.x, MPFR_RNDN);
    mpfr_fma(t1.x, a.im.x, b.im.x, t1.x, MPFR_RNDN);
    // im = (a.im*b.re - a.re*b.im) / den
    mpfr_mul(t2.x, a.im.x, b.re.x, MPFR_RNDN);
    Real t3(prec);
    mpfr_mul(t3.x, a.re.x, b.im.x, MPFR_RNDN);
    mpfr_sub(t2.x, t2.x, t3.x, MPFR_RNDN);
    mpfr_div(out.re.x, t1.x, den.x, MPFR_RNDN);
    mpfr_div(out.im.x, t2.x, den.x, MPFR_RNDN);
}

std::string real_to_string(const mpfr_t v) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.40Rg", v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

NumericRootsResult numeric_roots(const IntPolynomial& p, unsigned precision_bits) {
    if (p.degree() < 1) throw std::invalid_argument("numeric_roots: degree must be >= 1");
    if (precision_bits < 64) throw std::invalid_argument("numeric_roots: precision must be >= 64");

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 64;
    AberthSolver solver(p, prec);
    const std::size_t n = solver.degree();
    std::vector<Cplx> z = solver.initial_points();

    Real tol(prec);
    mpfr_set_ui_2exp(tol.x, 1, -static_cast<mpfr_exp_t>(precision_bits / 2 + 24), MPFR_RNDN);

    constexpr unsigned kMaxIterations = 200;
    unsigned iterations = 0;
    bool converged = false;
    Cplx pv(prec), dpv(prec), newton(prec), sum(prec), diff(prec), inv(prec), w(prec), denom(prec);
    Real step(prec), scale(prec), t(prec);

    while (iterations < kMaxIterations && !converged) {
        ++iterations;
        Real max_step(prec);
        for (std::size_t i = 0; i < n; ++i) {
            solver.eval(z[i], pv, dpv);
            if (mpfr_zero_p(pv.re.x) && mpfr_zero_p(pv.im.x)) continue;  // exactly on a root
            cplx_div(pv, dpv, newton, prec);
            // sum = sum_{j != i} 1/(z_i - z_j)
            mpfr_set_zero(sum.re.x, 1);
            mpfr_set_zero(sum.im.x, 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                mpfr_sub(diff.re.x, z[i].re.x, z[j].re.x, MPFR_RNDN);
                mpfr_sub(diff.im.x, z[i].im.x, z[j].im.x, MPFR_RNDN);
                Cplx one(prec);
                mpfr_set_ui(one.re.x, 1, MPFR_RNDN);
                cplx_div(one, diff, inv, prec);
                mpfr_add(sum.re.x, sum.re.x, inv.re.x, MPFR_RNDN);
                mpfr_add(sum.im.x, sum.im.x, inv.im.x, MPFR_RNDN);
            }
            // w = newton / (1 - newton * sum)
            mpfr_mul(denom.re.x, newton.re.x, sum.re.x, MPFR_RNDN);
            mpfr_mul(t.x, newton.im.x, sum.im.x, MPFR_RNDN);
            mpfr_sub(denom.re.x, denom.re.x, t.x, MPFR_RNDN);
            mpfr_ui_sub(denom.re.x, 1, denom.re.x, MPFR_RNDN);
            mpfr_mul(denom.im.x, newton.re.x, sum.im.x, MPFR_RNDN);
            mpfr_fma(denom.im.x, newton.im.x, sum.re.x, denom.im.x, MPFR_RNDN);
            mpfr_neg(denom.im.x, denom.im.x, MPFR_RNDN);
            cplx_div(newton, denom, w, prec);
            mpfr_sub(z[i].re.x, z[i].re.x, w.re.x, MPFR_RNDN);
            mpfr_sub(z[i].im.x, z[i].im.x, w.im.x, MPFR_RNDN);

            // relative step size |w| / (1 + |z_i|)
            mpfr_hypot(step.x, w.re.x, w.im.x, MPFR_RNDN);
            mpfr_hypot(scale.x, z[i].re.x, z[i].im.x, MPFR_RNDN);
            mpfr_add_ui(scale.x, scale.x, 1, MPFR_RNDN);
            mpfr_div(step.x, step.x, scale.x, MPFR_RNDN);
            if (mpfr_cmp(step.x, max_step.x) > 0) mpfr_set(max_step.x, step.x, MPFR_RNDN);
        }
        converged = mpfr_cmp(max_step.x, tol.x) < 0;
    }
    if (!converged)
        throw std::runtime_error("numeric_roots: no convergence after iteration cap");

    // Sort by (re, im) for deterministic output.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&z](std::size_t a, std::size_t b) {
        int c = mpfr_cmp(z[a].re.x, z[b].re.x);
        if (c != 0) return c < 0;
        return mpfr_cmp(z[a].im.x, z[b].im.x) < 0;
    });

    NumericRootsResult out;
    out.precision_bits = precision_bits;
    out.iterations = iterations;
    Real offline(prec), max_offline(prec);
    for (std::size_t idx : order) {
        const Cplx& root = z[idx];
        out.roots.push_back({real_to_string(root.re.x), real_to_string(root.im.x)});
        mpfr_set_d(offline.x, 0.5, MPFR_RNDN);
        mpfr_add(offline.x, offline.x, root.re.x, MPFR_RNDN);
        mpfr_abs(offline.x, offline.x, MPFR_RNDN);
        if (mpfr_cmp(offline.x, max_offline.x) > 0) mpfr_set(max_offline.x, offline.x, MPFR_RNDN);
    }
    out.max_offline = mpfr_get_d(max_offline.x, MPFR_RNDN);
    out.max_offline_str = real_to_string(max_offline.x);
    return out;
}

}  // namespace quartic
