#include "doctest.h"

#include <memory>

#include <boost/multiprecision/mpfr.hpp>

#include "pf/errors.hpp"
#include "pf/quadrature.hpp"

using namespace pf;

namespace {

Real eps_at(int digits) {
    Real e = 1;
    for (int i = 0; i < digits; ++i) e /= 10;
    return e;
}

Real mp_exp(const Real& x) { return boost::multiprecision::exp(x); }

IntegrandFactory stateless(Integrand f) {
    return [f]() { return f; };
}

}  // namespace

TEST_CASE("gauss-legendre rule has symmetric nodes and weights summing to 2") {
    PrecisionScope scope(30);
    const GaussLegendreRule& rule = gauss_legendre_rule(12);
    REQUIRE(rule.nodes.size() == 12);
    REQUIRE(rule.weights.size() == 12);
    Real wsum = 0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        wsum += rule.weights[i];
        CHECK(rule.weights[i] > 0);
        // Symmetry about zero.
        CHECK(boost::multiprecision::abs(rule.nodes[i] + rule.nodes[rule.nodes.size() - 1 - i]) <
              eps_at(27));
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK(boost::multiprecision::abs(wsum - 2) < eps_at(27));
}

TEST_CASE("gauss-legendre integrates its exactness-degree polynomial") {
    PrecisionScope scope(30);
    // 12-point rule is exact through degree 23: integrate x^23 over [0,1].
    QuadratureOptions opts;
    opts.points = 12;
    opts.abs_tol = eps_at(26);
    auto res = integrate_01(stateless([](const Real& u) {
                                Real p = 1;
                                for (int k = 0; k < 23; ++k) p *= u;
                                return Complex(p);
                            }),
                            opts);
    CHECK(res.converged);
    CHECK(boost::multiprecision::abs(res.value.re - Real(1) / 24) < eps_at(25));
    CHECK(boost::multiprecision::abs(res.value.im) < eps_at(25));
}

TEST_CASE("integrate_01 reaches tight tolerances on analytic integrands") {
    PrecisionScope scope(40);
    QuadratureOptions opts;
    opts.abs_tol = eps_at(34);

    SUBCASE("exp") {
        auto res = integrate_01(stateless([](const Real& u) { return Complex(mp_exp(u)); }), opts);
        CHECK(res.converged);
        Real ref = mp_exp(Real(1)) - 1;
        CHECK(boost::multiprecision::abs(res.value.re - ref) < eps_at(32));
        CHECK(res.error_estimate < eps_at(30));
    }

    SUBCASE("arctangent kernel gives pi") {
        auto res = integrate_01(
            stateless([](const Real& u) { return Complex(Real(4) / (1 + u * u)); }), opts);
        CHECK(res.converged);
        CHECK(boost::multiprecision::abs(res.value.re - real_pi()) < eps_at(32));
    }

    SUBCASE("complex-valued integrand") {
        // int_0^1 (cos(pi u) + i sin(pi u)) du = 2i / pi.
        auto res = integrate_01(stateless([](const Real& u) {
                                    Real a = real_pi() * u;
                                    return Complex(boost::multiprecision::cos(a),
                                                   boost::multiprecision::sin(a));
                                }),
                                opts);
        CHECK(res.converged);
        CHECK(boost::multiprecision::abs(res.value.re) < eps_at(32));
        CHECK(boost::multiprecision::abs(res.value.im - 2 / real_pi()) < eps_at(32));
    }
}

TEST_CASE("integrate_01 throws when the panel budget cannot reach tolerance") {
    PrecisionScope scope(30);
    QuadratureOptions opts;
    opts.points = 8;
    opts.max_doublings = 4;
    opts.abs_tol = eps_at(25);
    // 1/sqrt(u) is integrable but the endpoint singularity defeats panel
    // doubling at this tolerance.
    CHECK_THROWS_AS(integrate_01(stateless([](const Real& u) {
                                     return Complex(1 / boost::multiprecision::sqrt(u + eps_at(30)));
                                 }),
                                 opts),
                    NumericCheckError);
}

TEST_CASE("the factory is consulted once per pass and sees ascending abscissae") {
    PrecisionScope scope(30);
    QuadratureOptions opts;
    opts.points = 8;
    opts.abs_tol = eps_at(20);
    int passes = 0;
    bool ascending = true;
    auto factory = [&passes, &ascending]() -> Integrand {
        ++passes;
        auto last = std::make_shared<Real>(Real(-1));
        return [last, &ascending](const Real& u) {
            if (u <= *last) ascending = false;
            *last = u;
            return Complex(u * u);
        };
    };
    auto res = integrate_01(factory, opts);
    CHECK(res.converged);
    CHECK(passes >= 2);  // at least the initial pass plus one refinement
    CHECK(ascending);
    CHECK(boost::multiprecision::abs(res.value.re - Real(1) / 3) < eps_at(18));
}
