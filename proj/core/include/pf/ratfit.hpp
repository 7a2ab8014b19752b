#pragma once
/*
 * Rational-function fitting of sampled data on a real grid: linear least
 * squares on the linearized relation num(s) - g(s)*den(s) = 0 with the
 * denominator normalized monic, solved at working precision.  Reports the
 * exact l2 residual of the returned coefficients on the given grid, flags
 * rank deficiency instead of regularizing, and attaches a nearest-rational
 * report per coefficient (best p/q with bounded q).
 */

#include <vector>

#include "pf/real.hpp"

namespace pf {

struct NearestRational {
    BigRational value;  // best p/q with q <= max_denominator
    Real error;         // |coefficient - value| (complex distance)
};

struct RationalFitResult {
    int num_degree = 0;
    int den_degree = 0;
    std::vector<Complex> num_coeffs;  // ascending
    std::vector<Complex> den_coeffs;  // ascending, monic (trailing 1 included)
    Real residual;                    // l2 norm of num(s_i) - g_i * den(s_i)
    bool rank_deficient = false;
    // One entry per free coefficient: numerator ascending, then denominator
    // ascending without the monic leading 1.
    std::vector<NearestRational> nearest;
};

struct FitOptions {
    int digits = 30;
    int max_denominator = 64;  // for the nearest-rational report
};

// Requires s.size() == g.size() >= num_degree + den_degree + 2.
RationalFitResult rational_fit(const std::vector<Real>& s, const std::vector<Complex>& g,
                               int num_degree, int den_degree, const FitOptions& opts);

// Best rational approximation with denominator <= max_denominator.
BigRational nearest_rational(const Real& x, int max_denominator);

struct FitScan {
    bool found = false;        // a fit met the tolerance without rank deficiency
    RationalFitResult fit;     // the accepted fit, or the best attempt
};

// Tries degree pairs in increasing total degree (denominator first within a
// total) and returns the first acceptable fit.
FitScan rational_fit_scan(const std::vector<Real>& s, const std::vector<Complex>& g,
                          int max_num_degree, int max_den_degree, const Real& residual_tol,
                          const FitOptions& opts);

}  // namespace pf
