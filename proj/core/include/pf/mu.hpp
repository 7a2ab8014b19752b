#pragma once
/*
 * Desk-scale numeric checks of the inhomogeneous-equation formalism on the
 * Legendre family.  For chains with fixed 2-torsion boundary the boundary
 * term vanishes and D(nu) must be numerically zero; for the constant-x
 * section on its quadratic base cover, D(nu) is instead fitted as a
 * rational function of the cover coordinate and its coefficients compared
 * against small rationals.  The boundary term is never expanded
 * symbolically: differencing the sampled nu absorbs it.
 */

#include <string>
#include <vector>

#include "pf/diffop.hpp"
#include "pf/elliptic.hpp"
#include "pf/findiff.hpp"
#include "pf/ratfit.hpp"

namespace pf {

// nu(t) along a chain, sampled on an explicit grid (used both by the
// checks below and by the CLI).
NormalFunctionSamples sample_chain(const ChainSpec& chain, const std::vector<Real>& grid,
                                   const NumericOptions& opts);

struct TorsionChainReport {
    std::string chain;
    std::vector<Real> points;       // evaluation parameters t0
    std::vector<Complex> dnu;       // (D nu)(t0)
    Real max_abs_dnu;
    Real max_fd_error;
    bool pass = false;              // max |D nu| < tolerance
};

// Applies the operator to nu on local stencils around each point.
TorsionChainReport mu_torsion_check(const DiffOperator& op, const ChainSpec& chain,
                                    const std::vector<Real>& points, double h,
                                    double tolerance, const NumericOptions& opts);

struct SectionReport {
    std::vector<Real> s_grid;      // cover coordinate
    std::vector<Complex> dnu;      // D(nu) at t(s) = 2 - 2 s^2
    FitScan scan;                  // rational fit of dnu over s
    bool rational = false;         // fit met the residual tolerance
    bool coefficients_rational = false;  // all nearest-rational errors small
    Real max_nearest_error;
    // Non-rational control: exp(s) on the same grid at low degrees.
    RationalFitResult control_constant;
    RationalFitResult control_linear;
};

struct SectionCheckOptions {
    double s_lo = 0.75;
    double s_hi = 0.95;
    int samples = 25;
    double h_t = 0.001;            // finite-difference step in t
    int max_num_degree = 8;
    int max_den_degree = 6;
    double residual_tol = 1e-6;
    double coeff_tol = 1e-6;
};

// The x = 2 section on the cover t = 2 - 2 s^2 (where y(2) = 2s is
// rational in the cover coordinate).
SectionReport mu_section_check(const DiffOperator& op, const SectionCheckOptions& sopts,
                               const NumericOptions& opts);

}  // namespace pf
