#pragma once
/*
 * Finite-difference application of differential operators to sampled
 * normal functions: second-order central stencils per derivative order,
 * Richardson-extrapolated once (fourth order overall), with an error
 * estimate from the two stencil scales.  The sample grid must contain the
 * nine nodes t0 + k*h/2, k = -4..4.
 */

#include <vector>

#include "pf/diffop.hpp"
#include "pf/real.hpp"

namespace pf {

struct NormalFunctionSamples {
    std::vector<Real> grid;       // sampling coordinate, strictly increasing
    std::vector<Complex> values;  // nu at each grid point
    int digits = 30;
};

// The nine stencil abscissae around t0 at half-step h/2.
std::vector<Real> stencil_grid(const Real& t0, const Real& h);

struct OperatorSample {
    Complex value;       // (D nu)(t0), Richardson extrapolated
    Real error_estimate; // |extrapolated - fine-stencil value|
};

// Central difference + one Richardson step per derivative order; operator
// coefficients are evaluated exactly at t0.  Throws NumericCheckError when
// the grid does not cover the stencil.
OperatorSample apply_operator_numeric(const DiffOperator& op,
                                      const NormalFunctionSamples& samples,
                                      const Real& t0, const Real& h);

// Single derivative of order j at the stencil center from nine half-step
// samples (k = -4..4); exposed for the step-halving order property.
Complex central_derivative(const std::vector<Complex>& nine, int j, const Real& h,
                           Real* error_estimate = nullptr);

}  // namespace pf
