#include "doctest.h"

#include <vector>

#include "pf/errors.hpp"
#include "pf/mu.hpp"

using namespace pf;

namespace {

// The degree-2 operator annihilating the Legendre periods, coefficients
// ascending in D: 4t(t-1) D^2 + 4(2t-1) D + 1.
DiffOperator legendre_operator() {
    return DiffOperator(
        OpBasis::Ddt,
        {ParamRat(ParamPoly(1)),
         ParamRat(ParamPoly::from_coeffs({BigRational(-4), BigRational(8)})),
         ParamRat(ParamPoly::from_coeffs({BigRational(0), BigRational(-4), BigRational(4)}))});
}

}  // namespace

TEST_CASE("sample_chain evaluates nu on a grid and insists on order") {
    NumericOptions opts;
    PrecisionScope scope(opts.digits);
    std::vector<Real> grid = {Real(3) / 10, Real(2) / 5, Real(1) / 2};
    NormalFunctionSamples samples = sample_chain(chain_zero_to_t(), grid, opts);
    REQUIRE(samples.values.size() == 3);
    CHECK(samples.digits == opts.digits);
    // nu = A(t) is real, positive, and increasing on (0, 1).
    for (size_t i = 0; i < samples.values.size(); ++i) {
        CHECK(samples.values[i].re > 3);  // A(t) > pi
        CHECK(boost::multiprecision::abs(samples.values[i].im) < Real(1e-20));
        if (i > 0) CHECK(samples.values[i].re > samples.values[i - 1].re);
    }

    std::vector<Real> unsorted = {Real(1) / 2, Real(3) / 10};
    CHECK_THROWS_AS(sample_chain(chain_zero_to_t(), unsorted, opts), NumericCheckError);
}

TEST_CASE("operators annihilate chains with 2-torsion boundary") {
    NumericOptions opts;
    DiffOperator op = legendre_operator();
    std::vector<Real> points = {Real(3) / 10, Real(1) / 2, Real(7) / 10};

    SUBCASE("zero-to-t") {
        TorsionChainReport rep = mu_torsion_check(op, chain_zero_to_t(), points, 0.002, 1e-6, opts);
        CHECK(rep.pass);
        CHECK(rep.max_abs_dnu < Real(1e-6));
        REQUIRE(rep.dnu.size() == 3);
        CHECK(rep.chain == chain_zero_to_t().name);
    }

    SUBCASE("zero-to-one") {
        TorsionChainReport rep =
            mu_torsion_check(op, chain_zero_to_one(), points, 0.002, 1e-6, opts);
        CHECK(rep.pass);
    }

    SUBCASE("closed cycle") {
        TorsionChainReport rep =
            mu_torsion_check(op, chain_closed_cycle(), points, 0.002, 1e-6, opts);
        CHECK(rep.pass);
    }

    SUBCASE("a wrong operator does not pass") {
        DiffOperator wrong = op + DiffOperator::identity();
        TorsionChainReport rep = mu_torsion_check(wrong, chain_zero_to_t(), points, 0.002, 1e-6, opts);
        CHECK_FALSE(rep.pass);
        // nu itself is order 3-4, far above the pass threshold.
        CHECK(rep.max_abs_dnu > Real(1));
    }
}

TEST_CASE("the constant-x section produces the exact rational inhomogeneity") {
    NumericOptions opts;
    SectionCheckOptions sopts;
    sopts.samples = 9;  // enough for the scan to reach the true degrees
    SectionReport rep = mu_section_check(legendre_operator(), sopts, opts);

    REQUIRE(rep.s_grid.size() == 9);
    REQUIRE(rep.dnu.size() == 9);

    // Derived closed form: D nu = 1/s^3 on the cover t = 2 - 2 s^2 (the
    // boundary function -2 x^2 (x-1)^2 / y^3 evaluated at x = 2 on the
    // branch the path continuation selects, y(2) = -2s).
    for (size_t i = 0; i < rep.dnu.size(); ++i) {
        Real s = rep.s_grid[i];
        Real expect = 1 / (s * s * s);
        CHECK(boost::multiprecision::abs(rep.dnu[i].re - expect) < Real(1e-6));
        CHECK(boost::multiprecision::abs(rep.dnu[i].im) < Real(1e-6));
    }

    CHECK(rep.rational);
    CHECK(rep.scan.found);
    CHECK(rep.scan.fit.num_degree == 0);
    CHECK(rep.scan.fit.den_degree == 3);
    CHECK(rep.scan.fit.residual < Real(1e-6));

    // Coefficients: numerator [1], denominator [0, 0, 0, 1].
    REQUIRE(rep.scan.fit.nearest.size() == 4);
    CHECK(rep.scan.fit.nearest[0].value == BigRational(1));
    CHECK(rep.scan.fit.nearest[1].value == BigRational(0));
    CHECK(rep.scan.fit.nearest[2].value == BigRational(0));
    CHECK(rep.scan.fit.nearest[3].value == BigRational(0));
    CHECK(rep.coefficients_rational);
    CHECK(rep.max_nearest_error < Real(1e-6));

    // The transcendental control fails loudly at the pinned low degrees.
    CHECK(rep.control_constant.residual > Real(1e-2));
    CHECK(rep.control_linear.residual > Real(1e-2));
}
