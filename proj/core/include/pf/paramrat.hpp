#pragma once
/*
 * Rational functions of the parameter t in canonical form: numerator and
 * denominator coprime, denominator an integer primitive polynomial with
 * positive leading coefficient (so structural equality is semantic
 * equality).  Zero is 0/1.
 */

#include <optional>
#include <string>
#include <vector>

#include "pf/parampoly.hpp"

namespace pf {

class ParamRat {
public:
    ParamRat() : num_(), den_(ParamPoly(1)) {}
    ParamRat(const BigRational& c) : num_(ParamPoly(c)), den_(ParamPoly(1)) {}
    ParamRat(long c) : num_(ParamPoly(c)), den_(ParamPoly(1)) {}
    explicit ParamRat(const ParamPoly& p) : num_(p), den_(ParamPoly(1)) {}
    ParamRat(const ParamPoly& num, const ParamPoly& den);

    static ParamRat parameter() { return ParamRat(ParamPoly::monomial(1)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // The polynomial value when is_polynomial() (den is then the constant 1).
    ParamPoly as_polynomial() const;
    std::optional<BigRational> as_constant() const;

    ParamRat operator-() const;
    ParamRat operator+(const ParamRat& o) const;
    ParamRat operator-(const ParamRat& o) const;
    ParamRat operator*(const ParamRat& o) const;
    ParamRat operator/(const ParamRat& o) const;
    ParamRat& operator+=(const ParamRat& o) { return *this = *this + o; }
    ParamRat& operator-=(const ParamRat& o) { return *this = *this - o; }
    ParamRat& operator*=(const ParamRat& o) { return *this = *this * o; }
    ParamRat& operator/=(const ParamRat& o) { return *this = *this / o; }
    bool operator==(const ParamRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ParamRat& o) const { return !(*this == o); }

    ParamRat derivative() const;

    // Evaluation; nullopt at a pole.
    std::optional<BigRational> eval(const BigRational& t0) const;

    // Laurent data at a finite point or at infinity (local variable
    // s = t - t0, resp. s = 1/t): leading exponent and the first `nterms`
    // coefficients starting there.  The zero function reports exponent 0
    // and all-zero coefficients.
    struct Laurent {
        int lead_exp = 0;
        std::vector<BigRational> coeff;
    };
    Laurent laurent_at(const BigRational& t0, int nterms) const;
    Laurent laurent_at_infinity(int nterms) const;

    // Order of vanishing at t0 (negative at a pole); INT_MIN is never used:
    // the zero function throws.
    int valuation_at(const BigRational& t0) const;
    int valuation_at_infinity() const;

    std::string to_string(const std::string& name = "t") const;

private:
    void normalize();
    ParamPoly num_, den_;
};

}  // namespace pf
