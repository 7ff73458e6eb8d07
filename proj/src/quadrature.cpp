#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "coefficients.hpp"

namespace quartic {

namespace {

// 15-point Kronrod nodes on [-1,1] with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod_15(const F& f, double lo, double hi, unsigned long& evals) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv[15];
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[i] = f1;
        fv[14 - i] = f2;
        resk += kWgk[i] * (f1 + f2);
        resabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
    }
    evals += 15;

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
    resasc *= half;
    resabs *= half;

    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);

    return {lo, hi, resk * half, err};
}

}  // namespace

QuadResult n04_quad(double a, unsigned m, double tol) {
    if (!(a > -1.0)) throw std::invalid_argument("n04_quad requires a > -1");
    if (!(tol > 0.0)) throw std::invalid_argument("n04_quad requires tol > 0");

    const double mp1 = static_cast<double>(m) + 1.0;
    const double tail_power = 4.0 * static_cast<double>(m) + 2.0;
    auto f = [a, mp1, tail_power](double x) {
        const double t = x * x;
        const double den = std::pow(t * t + 2.0 * a * t + 1.0, mp1);
        return (1.0 + std::pow(x, tail_power)) / den;
    };

    constexpr std::size_t kMaxPanels = 1000000;
    unsigned long evals = 0;
    std::priority_queue<Panel> panels;
    panels.push(gauss_kronrod_15(f, 0.0, 1.0, evals));
    double total_value = panels.top().value;
    double total_error = panels.top().error;

    while (total_error > tol * std::abs(total_value)) {
        if (panels.size() >= kMaxPanels)
            throw std::runtime_error("n04_quad: panel budget exhausted before reaching tolerance");
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            throw std::runtime_error("n04_quad: interval too small to split further");
        Panel left = gauss_kronrod_15(f, worst.lo, mid, evals);
        Panel right = gauss_kronrod_15(f, mid, worst.hi, evals);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    return {total_value, total_error, evals};
}

PolyIdentityCheck check_poly_identity(double a, unsigned m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("check_poly_identity requires tol > 0");
    PolyIdentityCheck out;
    // Integrate well below the comparison tolerance.
    out.quad = n04_quad(a, m, tol * 1e-2);

    const double prefactor =
        std::pow(2.0, static_cast<double>(m) + 1.5) / M_PI * std::pow(a + 1.0, static_cast<double>(m) + 0.5);
    out.quadrature_side = prefactor * out.quad.value;

    // Exact P_m(a) with a rounded to an exact binary rational, so the two
    // sides see the same abscissa.
    BigRational a_exact(a);
    a_exact.canonicalize();
    out.exact_side = p_eval(m, a_exact).get_d();

    const double denom = std::max(std::abs(out.exact_side), 1e-300);
    out.rel_error = std::abs(out.quadrature_side - out.exact_side) / denom;
    out.ok = out.rel_error <= tol;
    return out;
}

double beta_fn(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw std::invalid_argument("beta_fn requires positive arguments");
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

std::pair<double, double> n04_zero_closed(unsigned m) {
    const double beta_route = 0.25 * beta_fn(0.25, static_cast<double>(m) + 0.75);
    // pi / (m! 2^{2m+3/2}) * prod(4k-1), with the rational part exact.
    BigRational r(prod4m1(m), factorial(m) * pow2(2 * m + 1));
    r.canonicalize();
    const double product_route = r.get_d() * M_PI / std::sqrt(2.0);
    return {beta_route, product_route};
}

}  // namespace quartic
