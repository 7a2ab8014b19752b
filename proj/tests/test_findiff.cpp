#include "doctest.h"

#include <vector>

#include "pf/errors.hpp"
#include "pf/findiff.hpp"

using namespace pf;

namespace {

Real eps_at(int digits) {
    Real e = 1;
    for (int i = 0; i < digits; ++i) e /= 10;
    return e;
}

// Samples f on the nine-node stencil around t0 with half-step h/2.
template <typename F>
std::vector<Complex> nine_samples(F f, const Real& t0, const Real& h) {
    std::vector<Complex> out;
    for (const Real& x : stencil_grid(t0, h)) out.push_back(f(x));
    return out;
}

// f(t) = 1/(2 - t): the j-th derivative is j! / (2 - t)^(j+1).
Complex rational_sample(const Real& t) { return Complex(1 / (2 - t)); }

Real rational_derivative(const Real& t, int j) {
    Real d = 1;
    for (int k = 2; k <= j; ++k) d *= k;
    Real pw = 2 - t;
    Real denom = 1;
    for (int k = 0; k <= j; ++k) denom *= pw;
    return d / denom;
}

}  // namespace

TEST_CASE("stencil_grid lists the nine half-step nodes in order") {
    PrecisionScope scope(30);
    Real t0 = Real(1) / 2, h = Real(1) / 100;
    auto g = stencil_grid(t0, h);
    REQUIRE(g.size() == 9);
    for (int k = -4; k <= 4; ++k) {
        CHECK(boost::multiprecision::abs(g[k + 4] - (t0 + k * h / 2)) < eps_at(28));
    }
}

TEST_CASE("central derivatives hit exact values on a smooth rational sample") {
    PrecisionScope scope(40);
    Real t0 = Real(1) / 2, h = Real(1) / 100;
    auto nine = nine_samples(rational_sample, t0, h);
    for (int j = 0; j <= 4; ++j) {
        Real err = 0;
        Complex d = central_derivative(nine, j, h, &err);
        Real exact = rational_derivative(t0, j);
        // Richardson-extrapolated O(h^4): h = 1e-2 gives ~1e-8 * scale.
        CHECK(boost::multiprecision::abs(d.re - exact) < Real(1e-6));
        CHECK(boost::multiprecision::abs(d.im) < Real(1e-20));
        if (j > 0) {
            // The reported estimate bounds the true error (same order).
            CHECK(boost::multiprecision::abs(d.re - exact) < 4 * err + eps_at(30));
        }
    }
}

TEST_CASE("halving the step improves the extrapolated value by roughly 2^4") {
    PrecisionScope scope(50);
    Real t0 = Real(1) / 2;
    for (int j : {1, 2}) {
        Real err_h, err_h2;
        Real h = Real(1) / 50;
        Complex d1 = central_derivative(nine_samples(rational_sample, t0, h), j, h, &err_h);
        Real h2 = h / 2;
        Complex d2 = central_derivative(nine_samples(rational_sample, t0, h2), j, h2, &err_h2);
        Real exact = rational_derivative(t0, j);
        Real e1 = boost::multiprecision::abs(d1.re - exact);
        Real e2 = boost::multiprecision::abs(d2.re - exact);
        REQUIRE(e2 > 0);
        Real ratio = e1 / e2;
        // O(h^4): predicted factor 16, accept within a factor of two.
        CHECK(ratio > 8);
        CHECK(ratio < 32);
    }
}

TEST_CASE("apply_operator_numeric differentiates a quadratic exactly") {
    PrecisionScope scope(30);
    // D on nu(t) = t^2 must give 2 t0 (stencils are exact on quadratics).
    DiffOperator ddt = DiffOperator::derivation(OpBasis::Ddt);
    Real t0 = Real(2) / 5, h = Real(1) / 100;
    NormalFunctionSamples samples;
    samples.grid = stencil_grid(t0, h);
    for (const Real& x : samples.grid) samples.values.push_back(Complex(x * x));
    OperatorSample out = apply_operator_numeric(ddt, samples, t0, h);
    CHECK(boost::multiprecision::abs(out.value.re - 2 * t0) < Real(1e-8));
    CHECK(boost::multiprecision::abs(out.value.im) < Real(1e-20));
}

TEST_CASE("apply_operator_numeric handles theta-basis operators") {
    PrecisionScope scope(40);
    // theta = t d/dt applied to t^3 gives 3 t^3.
    DiffOperator theta = DiffOperator::derivation(OpBasis::Theta);
    Real t0 = Real(1) / 2, h = Real(1) / 100;
    NormalFunctionSamples samples;
    samples.grid = stencil_grid(t0, h);
    for (const Real& x : samples.grid) samples.values.push_back(Complex(x * x * x));
    OperatorSample out = apply_operator_numeric(theta, samples, t0, h);
    CHECK(boost::multiprecision::abs(out.value.re - 3 * t0 * t0 * t0) < Real(1e-8));
}

TEST_CASE("apply_operator_numeric evaluates full operators with rational coefficients") {
    PrecisionScope scope(40);
    // L = (t^2 - 1) D^2 + t D + 1 on nu = 1/(2-t), compared exactly.
    DiffOperator op(OpBasis::Ddt,
                    {ParamRat(ParamPoly(1)), ParamRat(ParamPoly::monomial(1)),
                     ParamRat(ParamPoly::from_coeffs({BigRational(-1), BigRational(0), BigRational(1)}))});
    Real t0 = Real(1) / 3, h = Real(1) / 100;
    NormalFunctionSamples samples;
    samples.grid = stencil_grid(t0, h);
    for (const Real& x : samples.grid) samples.values.push_back(rational_sample(x));
    OperatorSample out = apply_operator_numeric(op, samples, t0, h);
    Real exact = (t0 * t0 - 1) * rational_derivative(t0, 2) + t0 * rational_derivative(t0, 1) +
                 rational_derivative(t0, 0);
    CHECK(boost::multiprecision::abs(out.value.re - exact) < Real(1e-7));
    // The estimate is the fine-vs-extrapolated gap, deliberately conservative
    // (O(h^2) while the value error is O(h^4)).
    CHECK(out.error_estimate < Real(1e-4));
    CHECK(boost::multiprecision::abs(out.value.re - exact) < out.error_estimate);
}

TEST_CASE("grid coverage and order limits are enforced") {
    PrecisionScope scope(30);
    DiffOperator ddt = DiffOperator::derivation(OpBasis::Ddt);
    Real t0 = Real(1) / 2, h = Real(1) / 100;

    NormalFunctionSamples sparse;
    sparse.grid = {t0 - h, t0, t0 + h};  // misses the half-step nodes
    sparse.values = {Complex(Real(1)), Complex(Real(1)), Complex(Real(1))};
    CHECK_THROWS_AS(apply_operator_numeric(ddt, sparse, t0, h), NumericCheckError);

    // Order five has no stencil here.
    std::vector<ParamRat> high(6, ParamRat(0));
    high[5] = ParamRat(1);
    DiffOperator d5(OpBasis::Ddt, high);
    NormalFunctionSamples full;
    full.grid = stencil_grid(t0, h);
    full.values.assign(9, Complex(Real(1)));
    CHECK_THROWS_AS(apply_operator_numeric(d5, full, t0, h), NumericCheckError);
}
