#include "pf/findiff.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

namespace {

// O(step^2) central stencil of derivative order j; at(k) is the sample at
// center + k*step.
template <typename At>
Complex central_once(const At& at, int j, const Real& step) {
    switch (j) {
        case 0:
            return at(0);
        case 1:
            return (at(1) - at(-1)) / Complex(2 * step);
        case 2:
            return (at(1) - Complex(2) * at(0) + at(-1)) / Complex(step * step);
        case 3:
            return (at(2) - Complex(2) * at(1) + Complex(2) * at(-1) - at(-2)) /
                   Complex(2 * step * step * step);
        case 4:
            return (at(2) - Complex(4) * at(1) + Complex(6) * at(0) - Complex(4) * at(-1) +
                    at(-2)) /
                   Complex(step * step * step * step);
        default:
            throw NumericCheckError("finite-difference stencils cover derivative orders 0..4");
    }
}

}  // namespace

std::vector<Real> stencil_grid(const Real& t0, const Real& h) {
    std::vector<Real> g;
    for (int k = -4; k <= 4; ++k) g.push_back(t0 + k * h / 2);
    return g;
}

Complex central_derivative(const std::vector<Complex>& nine, int j, const Real& h,
                           Real* error_estimate) {
    if (nine.size() != 9)
        throw NumericCheckError("stencil expects nine half-step samples");
    if (j == 0) {
        if (error_estimate) *error_estimate = Real(0);
        return nine[4];
    }
    Real half = h / 2;
    // Coarse: step h over every second sample.  Fine: step h/2.
    auto coarse_at = [&nine](int k) { return nine[static_cast<size_t>(4 + 2 * k)]; };
    auto fine_at = [&nine](int k) { return nine[static_cast<size_t>(4 + k)]; };
    Complex coarse = central_once(coarse_at, j, h);
    Complex fine = central_once(fine_at, j, half);
    Complex rich = (Complex(4) * fine - coarse) / Complex(3);
    if (error_estimate) *error_estimate = abs(rich - fine);
    return rich;
}

OperatorSample apply_operator_numeric(const DiffOperator& op,
                                      const NormalFunctionSamples& samples,
                                      const Real& t0, const Real& h) {
    PrecisionScope prec(samples.digits);
    DiffOperator d = (op.basis() == OpBasis::Theta) ? from_theta_form(op) : op;
    if (d.order() > 4)
        throw NumericCheckError("finite-difference stencils cover operator orders up to 4");

    std::vector<Complex> nine;
    Real match_tol = (h < 0 ? Real(-h) : h) * Real(1e-9);
    for (const Real& want : stencil_grid(t0, h)) {
        auto it = std::lower_bound(samples.grid.begin(), samples.grid.end(), want - match_tol);
        if (it == samples.grid.end() || *it > want + match_tol)
            throw NumericCheckError("sample grid does not cover the stencil around the "
                                    "evaluation point");
        nine.push_back(samples.values[static_cast<size_t>(it - samples.grid.begin())]);
    }

    OperatorSample out;
    out.error_estimate = Real(0);
    for (int j = 0; j <= d.order(); ++j) {
        if (d.coeff(j).is_zero()) continue;
        Complex aj = eval_complex(d.coeff(j), Complex(t0));
        Real err;
        Complex dj = central_derivative(nine, j, h, &err);
        out.value += aj * dj;
        out.error_estimate += abs(aj) * err;
    }
    return out;
}

}  // namespace pf
