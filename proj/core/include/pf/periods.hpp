#pragma once
/*
 * Reference period series built independently of the reduction pipeline,
 * used as oracles: the holomorphic-period germ of the diagonal-plus-product
 * deformation at large parameter, classical Gauss series, and series
 * substitution/annihilation helpers.
 */

#include "pf/series.hpp"

namespace pf {

// Constant-term germ for x0^m + ... + x_n^m - t x0 x1 ... xn (m = n + 1):
// the series sum_k (mk)! / (k!)^m t^-(mk+1) at infinity, nterms+1
// coefficients (exponents m*k + 1 in the local variable s = 1/t up to the
// window end).
PeriodSeries diagonal_family_germ(int n, int nterms);

// Same germ computed by brute-force expansion of the multinomial constant
// terms; exponential cost, only usable for small k. Used to cross-check.
BigRational diagonal_constant_term(int n, int k);

// Gauss series 2F1(a, b; c; t) at t = 0 with nterms+1 coefficients.
PeriodSeries gauss_hypergeometric(const BigRational& a, const BigRational& b,
                                  const BigRational& c, int nterms);

// Substitute t -> t^power into a series at 0 or infinity (power >= 1).
PeriodSeries substitute_power(const PeriodSeries& s, int power);

// Result of testing whether an operator annihilates a truncated series.
struct AnnihilationCheck {
    bool annihilated = false;
    // Exponent through which the residual window was checked.
    BigRational window_end;
    // First nonzero residual exponent when not annihilated.
    BigRational first_failure;
};
AnnihilationCheck annihilation_check(const DiffOperator& op, const PeriodSeries& s);

}  // namespace pf
