#pragma once
/*
 * Frobenius fundamental systems at a regular singular point.  Solutions
 * take the form s^rho * sum_l (series_l) * log(s)^l / l!, with the series
 * stored per log depth.  For an order-r operator whose indicial roots are
 * all rational, exactly r solutions are produced.
 */

#include <vector>

#include "pf/localize.hpp"

namespace pf {

struct FrobeniusSolution {
    BigRational exponent;  // indicial root rho the solution belongs to
    int log_depth = 0;     // highest power of log appearing
    // parts[l] multiplies log(s)^l / l!; all share lead_exp = rho.
    std::vector<PeriodSeries> parts;
};

struct FrobeniusSystem {
    std::vector<FrobeniusSolution> solutions;
    // False when irrational indicial roots prevented a full system.
    bool complete = true;
};

FrobeniusSystem frobenius_solutions(const DiffOperator& op, const LocalPoint& p, int nterms);

// Applies the operator to a log-graded solution candidate and returns the
// residual parts (one series per log depth).  Used to validate solutions:
// all residual windows must vanish identically.
std::vector<PeriodSeries> apply_to_log_solution(const DiffOperator& op,
                                                const FrobeniusSolution& sol);

}  // namespace pf
