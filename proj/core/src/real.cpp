#include "pf/real.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace pf {

namespace {

unsigned digits_with_guard(int digits) {
    if (digits < 10) digits = 10;
    return static_cast<unsigned>(digits + 10);
}

}  // namespace

PrecisionScope::PrecisionScope(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits_with_guard(digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real real_pi() {
    Real x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

Real real_from_rational(const BigRational& q) {
    Real num(q.get_num().get_str());
    Real den(q.get_den().get_str());
    return num / den;
}

Complex Complex::operator/(const Complex& o) const {
    Real d = o.abs2();
    return Complex((re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d);
}

Real abs(const Complex& z) {
    using boost::multiprecision::sqrt;
    return sqrt(z.abs2());
}

Complex sqrt(const Complex& z) {
    using boost::multiprecision::sqrt;
    if (z.re == 0 && z.im == 0) return Complex();
    Real r = abs(z);
    if (z.re >= 0) {
        Real u = sqrt((r + z.re) / 2);
        return Complex(u, z.im / (2 * u));
    }
    Real v = sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;  // the cut maps to the positive imaginary axis
    return Complex(z.im / (2 * v), v);
}

std::string to_string(const Real& x, int digits) {
    return x.str(static_cast<size_t>(digits), std::ios_base::scientific);
}

std::string to_string(const Complex& z, int digits) {
    std::string s = to_string(z.re, digits);
    s += (z.im < 0) ? " - " : " + ";
    Real a = z.im < 0 ? Real(-z.im) : z.im;
    s += to_string(a, digits) + "*i";
    return s;
}

Real eval_real(const ParamPoly& p, const Real& t) {
    Real acc(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * t + real_from_rational(p.coeff(k));
    return acc;
}

Complex eval_complex(const ParamPoly& p, const Complex& t) {
    Complex acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * t + Complex(real_from_rational(p.coeff(k)));
    return acc;
}

Complex eval_complex(const ParamRat& r, const Complex& t) {
    return eval_complex(r.num(), t) / eval_complex(r.den(), t);
}

}  // namespace pf
