#pragma once

#include <utility>

#include "exact.hpp"

namespace quartic {

// Floating-point cross-checks tying the exact polynomials back to the
// defining integral N(a;m) = integral_0^inf dx/(x^4 + 2ax^2 + 1)^{m+1}.

struct QuadResult {
    double value = 0.0;
    double estimated_error = 0.0;
    unsigned long evaluations = 0;
};

// Adaptive Gauss-Kronrod integration of N(a;m). The x -> 1/x symmetry maps
// the tail onto (0,1], so the integral computed is
//   integral_0^1 (1 + x^{4m+2}) / (x^4 + 2ax^2 + 1)^{m+1} dx
// subdivided until estimated_error <= tol * |value|. Throws
// std::invalid_argument for a <= -1 and std::runtime_error if the panel
// budget is exhausted before reaching tol.
QuadResult n04_quad(double a, unsigned m, double tol);

struct PolyIdentityCheck {
    bool ok = false;
    double quadrature_side = 0.0;  // (2^{m+3/2}/pi) (a+1)^{m+1/2} N(a;m)
    double exact_side = 0.0;       // P_m(a) evaluated exactly, then rounded
    double rel_error = 0.0;
    QuadResult quad;
};

// Verifies P_m(a) = (2^{m+3/2}/pi)(a+1)^{m+1/2} N(a;m) to relative tol.
PolyIdentityCheck check_poly_identity(double a, unsigned m, double tol);

// Euler beta function via log-gamma; arguments must be positive.
double beta_fn(double x, double y);

// N(0;m) two ways: (1/4) B(1/4, m+3/4) against
// pi/(m! 2^{2m+3/2}) prod(4k-1). Returns (betaRoute, productRoute).
std::pair<double, double> n04_zero_closed(unsigned m);

}  // namespace quartic
