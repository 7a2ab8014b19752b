#pragma once
/*
 * Dense univariate polynomials over the rationals in the deformation
 * parameter t.  Coefficients are stored in ascending degree with trailing
 * zeros stripped, so degree() and the coefficient array are always in
 * canonical agreement.  The zero polynomial has an empty coefficient
 * vector and degree -1.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pf/rational.hpp"

namespace pf {

class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(const BigRational& constant);
    explicit ParamPoly(long constant) : ParamPoly(BigRational(constant)) {}

    // c * t^exp
    static ParamPoly monomial(int exp, const BigRational& c = BigRational(1));
    static ParamPoly from_coeffs(std::vector<BigRational> ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of t^k (zero outside the stored range).
    const BigRational& coeff(int k) const;
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& leading() const;

    // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    bool operator==(const ParamPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ParamPoly& o) const { return c_ != o.c_; }

    ParamPoly scaled(const BigRational& s) const;
    ParamPoly shifted(int k) const;  // multiply by t^k (k >= 0)

    ParamPoly derivative() const;
    BigRational eval(const BigRational& t0) const;

    // Quotient and remainder over Q; divisor must be nonzero.
    std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& divisor) const;
    // Division known to be exact; throws if a remainder appears.
    ParamPoly divexact(const ParamPoly& divisor) const;

    // Rational content: the positive rational c with (*this)/c integer,
    // primitive, signed so the leading coefficient of the result is
    // positive.  Content of 0 is defined as 1.
    BigRational content_signed() const;
    ParamPoly primitive_part() const;  // (*this)/content_signed()

    // p(t0 + s) as a polynomial in s.
    ParamPoly compose_linear_shift(const BigRational& t0) const;
    // s^deg * p(1/s): the coefficient vector reversed.
    ParamPoly reversed() const;

    std::string to_string(const std::string& name = "t") const;

    // gcd normalized to an integer primitive polynomial with positive
    // leading coefficient (gcd(0,0) = 0).
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
    static ParamPoly lcm(const ParamPoly& a, const ParamPoly& b);

    // Yun squarefree decomposition: list of (factor, multiplicity) with
    // multiplicities ascending; factors primitive with positive leading
    // coefficient.
    std::vector<std::pair<ParamPoly, int>> squarefree_factors() const;

    // Rational roots with multiplicities.  `complete` is set to false when
    // the integer factorizations needed for candidate enumeration exceed
    // the trial-division cap, in which case some roots may be missing.
    std::vector<std::pair<BigRational, int>> rational_roots(bool* complete = nullptr) const;

private:
    void trim();
    std::vector<BigRational> c_;
};

// First nterms coefficients of the reciprocal power series 1/p (requires
// p(0) != 0).
std::vector<BigRational> series_inverse(const ParamPoly& p, int nterms);

}  // namespace pf
