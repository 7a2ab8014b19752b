#pragma once
/*
 * Truncated local solution series.  A PeriodSeries is an exact window of a
 * (possibly fractional-exponent) power series at a finite point or at
 * infinity: coefficients for exponents lead_exp, lead_exp+1, ... are known
 * exactly; everything beyond the window is unknown, and series operations
 * track how the window shrinks.
 */

#include <optional>
#include <string>
#include <vector>

#include "pf/diffop.hpp"

namespace pf {

struct LocalPoint {
    bool at_infinity = false;
    BigRational t0;

    static LocalPoint finite(const BigRational& v) { return {false, v}; }
    static LocalPoint infinity() { return {true, BigRational(0)}; }
    bool operator==(const LocalPoint& o) const {
        return at_infinity == o.at_infinity && (at_infinity || t0 == o.t0);
    }
    std::string to_string() const {
        return at_infinity ? "infinity" : pf::to_string(t0);
    }
};

struct PeriodSeries {
    LocalPoint point;
    // Exponent of the first stored coefficient; subsequent entries step by 1.
    BigRational lead_exp;
    std::vector<BigRational> c;

    int length() const { return static_cast<int>(c.size()); }
    // Largest exponent whose coefficient is known.
    BigRational known_through() const { return lead_exp + BigRational(length() - 1); }
    bool all_zero() const;
    // Coefficient at the given exponent; nullopt outside the window (or at
    // a non-integer offset).
    std::optional<BigRational> coeff_at(const BigRational& exp) const;

    PeriodSeries scaled(const BigRational& s) const;
    // Multiply by the local variable to the power k (shifts exponents).
    PeriodSeries shifted(const BigRational& k) const;
    // Drop leading zero coefficients (window end is unchanged).
    PeriodSeries trimmed() const;

    std::string to_string(const std::string& var = "s") const;
};

struct AppliedSeries {
    PeriodSeries series;
    // Exponent through which the result is exact.
    BigRational window_end;
};

// Applies the (global, in t) operator to a local series: the operator is
// localized at the series' point internally.  Throws if the series window
// is too small to produce any checked coefficient.
AppliedSeries apply_to_series(const DiffOperator& op, const PeriodSeries& s);

// Localization helpers shared with the indicial machinery: the operator
// rewritten in the local coordinate (s = t - t0 or s = 1/t).
DiffOperator localize_at(const DiffOperator& op, const LocalPoint& p);

}  // namespace pf
