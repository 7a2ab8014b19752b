#pragma once
/*
 * Extended-precision real and complex arithmetic for the numeric layer.
 * Reals are MPFR floats with runtime-selectable decimal precision; the
 * complex type is a small value pair on top of them (kept local so the
 * square-root branch cut and string formatting are explicit and under our
 * control).
 */

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "pf/parampoly.hpp"
#include "pf/paramrat.hpp"

namespace pf {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

// Sets the working decimal precision (plus guard digits) for Reals created
// while in scope; restores the previous default on exit.  Every public
// numeric entry point installs one from its options.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real real_pi();
Real real_from_rational(const BigRational& q);

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit widening
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}

    Complex operator-() const { return Complex(-re, -im); }
    Complex operator+(const Complex& o) const { return Complex(re + o.re, im + o.im); }
    Complex operator-(const Complex& o) const { return Complex(re - o.re, im - o.im); }
    Complex operator*(const Complex& o) const {
        return Complex(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Complex operator/(const Complex& o) const;
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    Complex conj() const { return Complex(re, -im); }
    Real abs2() const { return re * re + im * im; }
};

Real abs(const Complex& z);
// Principal branch: non-negative real part, cut on the negative real axis
// (the cut itself maps to the positive imaginary axis).
Complex sqrt(const Complex& z);

std::string to_string(const Real& x, int digits);
std::string to_string(const Complex& z, int digits);

// Numeric evaluation of exact coefficient data at the working precision.
Real eval_real(const ParamPoly& p, const Real& t);
Complex eval_complex(const ParamPoly& p, const Complex& t);
Complex eval_complex(const ParamRat& r, const Complex& t);

}  // namespace pf
