#include "pf/mu.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

NormalFunctionSamples sample_chain(const ChainSpec& chain, const std::vector<Real>& grid,
                                   const NumericOptions& opts) {
    NormalFunctionSamples samples;
    samples.digits = opts.digits;
    samples.grid = grid;
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw NumericCheckError("sample grid must be increasing");
    for (const Real& t : grid) {
        LegendreFiber fiber(Complex(t), opts);
        samples.values.push_back(truncated_aj(fiber, chain, opts).value);
    }
    return samples;
}

TorsionChainReport mu_torsion_check(const DiffOperator& op, const ChainSpec& chain,
                                    const std::vector<Real>& points, double h,
                                    double tolerance, const NumericOptions& opts) {
    PrecisionScope prec(opts.digits);
    TorsionChainReport rep;
    rep.chain = chain.name;
    rep.max_abs_dnu = Real(0);
    rep.max_fd_error = Real(0);
    Real step(h);
    for (const Real& t0 : points) {
        NormalFunctionSamples local = sample_chain(chain, stencil_grid(t0, step), opts);
        OperatorSample ds = apply_operator_numeric(op, local, t0, step);
        rep.points.push_back(t0);
        rep.dnu.push_back(ds.value);
        rep.max_abs_dnu = std::max(rep.max_abs_dnu, abs(ds.value));
        rep.max_fd_error = std::max(rep.max_fd_error, ds.error_estimate);
    }
    rep.pass = rep.max_abs_dnu < Real(tolerance);
    return rep;
}

SectionReport mu_section_check(const DiffOperator& op, const SectionCheckOptions& sopts,
                               const NumericOptions& opts) {
    PrecisionScope prec(opts.digits);
    if (sopts.samples < 2)
        throw NumericCheckError("section check needs at least two cover samples");
    SectionReport rep;
    const ChainSpec chain = chain_section_x2();
    Real step(sopts.h_t);
    for (int i = 0; i < sopts.samples; ++i) {
        Real s = Real(sopts.s_lo) +
                 (Real(sopts.s_hi) - Real(sopts.s_lo)) * i / (sopts.samples - 1);
        Real t0 = 2 - 2 * s * s;
        NormalFunctionSamples local = sample_chain(chain, stencil_grid(t0, step), opts);
        OperatorSample ds = apply_operator_numeric(op, local, t0, step);
        rep.s_grid.push_back(s);
        rep.dnu.push_back(ds.value);
    }

    FitOptions fopts;
    fopts.digits = opts.digits;
    rep.scan = rational_fit_scan(rep.s_grid, rep.dnu, sopts.max_num_degree,
                                 sopts.max_den_degree, Real(sopts.residual_tol), fopts);
    rep.rational = rep.scan.found;

    rep.max_nearest_error = Real(0);
    for (const auto& nr : rep.scan.fit.nearest)
        rep.max_nearest_error = std::max(rep.max_nearest_error, nr.error);
    rep.coefficients_rational = rep.rational && rep.max_nearest_error < Real(sopts.coeff_tol);

    // Non-rational control on the same grid: exp(s) must fail at the low
    // fitting degrees.
    std::vector<Complex> ctrl;
    for (const Real& s : rep.s_grid) {
        using boost::multiprecision::exp;
        ctrl.push_back(Complex(exp(s)));
    }
    rep.control_constant = rational_fit(rep.s_grid, ctrl, 0, 0, fopts);
    rep.control_linear = rational_fit(rep.s_grid, ctrl, 1, 0, fopts);
    return rep;
}

}  // namespace pf
