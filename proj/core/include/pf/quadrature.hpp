#pragma once
/*
 * Gauss-Legendre quadrature at working precision: nodes and weights by
 * Newton refinement of Chebyshev seeds, plus an adaptive composite driver
 * that doubles the panel count until two successive refinements agree.
 * Integrands may carry per-pass state (branch tracking): the driver takes
 * a factory and requests a fresh integrand for every pass, evaluating it
 * at strictly increasing abscissae.
 */

#include <functional>
#include <vector>

#include "pf/real.hpp"

namespace pf {

struct GaussLegendreRule {
    // Nodes ascending in (-1, 1) with matching weights.
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

// Cached per (point count, working precision).
const GaussLegendreRule& gauss_legendre_rule(int npoints);

struct QuadratureOptions {
    int points = 40;        // per-panel rule size
    int max_doublings = 12; // refinement limit, panels = 2^k
    Real abs_tol = Real(1e-25);
};

struct QuadratureResult {
    Complex value;
    Real error_estimate;  // |last refinement change|
    int panels = 0;
    bool converged = false;
};

using Integrand = std::function<Complex(const Real&)>;
using IntegrandFactory = std::function<Integrand()>;

// Integrates over [0, 1].  The factory is invoked once per pass.
QuadratureResult integrate_01(const IntegrandFactory& make, const QuadratureOptions& opts);

}  // namespace pf
