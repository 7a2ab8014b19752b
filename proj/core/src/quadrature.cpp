#include "pf/quadrature.hpp"

#include <map>
#include <utility>

#include "pf/errors.hpp"

namespace pf {

namespace {

// Legendre P_n and derivative at x by the three-term recurrence.
std::pair<Real, Real> legendre_pair(int n, const Real& x) {
    Real p0(1), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    Real dp = n * (x * p1 - p0) / (x * x - 1);
    return {p1, dp};
}

GaussLegendreRule build_rule(int n) {
    using boost::multiprecision::cos;
    using boost::multiprecision::abs;
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    const Real pi = real_pi();
    Real eps = Real(1);
    for (unsigned k = 0; k < Real::default_precision() + 5; ++k) eps /= 10;
    for (int i = 0; i < n; ++i) {
        // Chebyshev seed, refined by Newton.
        Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        for (int it = 0; it < 200; ++it) {
            auto [p, dp] = legendre_pair(n, x);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        auto [p, dp] = legendre_pair(n, x);
        (void)p;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = x;  // seeds descend; store ascending
        rule.weights[static_cast<size_t>(n - 1 - i)] = 2 / ((1 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule(int npoints) {
    static std::map<std::pair<int, unsigned>, GaussLegendreRule> cache;
    auto key = std::make_pair(npoints, Real::default_precision());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_rule(npoints)).first;
    return it->second;
}

QuadratureResult integrate_01(const IntegrandFactory& make, const QuadratureOptions& opts) {
    const GaussLegendreRule& rule = gauss_legendre_rule(opts.points);
    QuadratureResult res;
    Complex prev;
    bool have_prev = false;
    for (int round = 0; round <= opts.max_doublings; ++round) {
        const int panels = 1 << round;
        Integrand f = make();
        Complex acc;
        for (int p = 0; p < panels; ++p) {
            Real a = Real(p) / panels;
            Real h = Real(1) / panels;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                Real u = a + h * (rule.nodes[i] + 1) / 2;
                acc += f(u) * Complex(rule.weights[i] * h / 2);
            }
        }
        if (have_prev) {
            Real change = abs(acc - prev);
            if (change <= opts.abs_tol) {
                res.value = acc;
                res.error_estimate = change;
                res.panels = panels;
                res.converged = true;
                return res;
            }
        }
        prev = acc;
        have_prev = true;
    }
    throw NumericCheckError("quadrature did not converge within the panel budget");
}

}  // namespace pf
