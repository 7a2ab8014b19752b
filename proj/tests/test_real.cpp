#include "doctest.h"

#include <sstream>

#include "pf/real.hpp"

using namespace pf;

namespace {

Real eps_at(int digits) {
    Real e = 1;
    for (int i = 0; i < digits; ++i) e /= 10;
    return e;
}

}  // namespace

TEST_CASE("precision scope sets and restores the working precision") {
    unsigned before = Real::default_precision();
    {
        PrecisionScope scope(60);
        // At least the requested digits (guard digits on top are fine).
        CHECK(Real::default_precision() >= 60);
        Real third = Real(1) / 3;
        // 1/3 to 60 digits differs from 1/3 to ~16 digits well above 1e-20.
        Real dbl_third = Real(1.0 / 3.0);
        CHECK(boost::multiprecision::abs(third - dbl_third) > eps_at(20));
        CHECK(boost::multiprecision::abs(third - dbl_third) < eps_at(15));
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("real_pi matches the classical digits") {
    PrecisionScope scope(40);
    Real pi = real_pi();
    Real ref("3.14159265358979323846264338327950288419716939937510");
    CHECK(boost::multiprecision::abs(pi - ref) < eps_at(38));
}

TEST_CASE("real_from_rational is exact division at working precision") {
    PrecisionScope scope(40);
    Real x = real_from_rational(BigRational(1, 7));
    CHECK(boost::multiprecision::abs(x * 7 - 1) < eps_at(38));
    Real y = real_from_rational(BigRational(-355, 113));
    CHECK(y < 0);
    CHECK(boost::multiprecision::abs(y * 113 + 355) < eps_at(36));
}

TEST_CASE("complex arithmetic round trips") {
    PrecisionScope scope(30);
    Complex a(Real(3), Real(-4));
    CHECK(abs(a) == 5);
    CHECK(a.abs2() == 25);

    Complex b(Real(1), Real(2));
    Complex prod = a * b;          // (3-4i)(1+2i) = 11 + 2i
    CHECK(prod.re == 11);
    CHECK(prod.im == 2);

    Complex quot = prod / b;       // back to a
    CHECK(boost::multiprecision::abs(quot.re - 3) < eps_at(25));
    CHECK(boost::multiprecision::abs(quot.im + 4) < eps_at(25));

    Complex c = a.conj();
    CHECK(c.re == 3);
    CHECK(c.im == 4);
}

TEST_CASE("complex square root takes the principal branch") {
    PrecisionScope scope(30);

    // sqrt(-1): the cut maps to the positive imaginary axis.
    Complex i = sqrt(Complex(Real(-1), Real(0)));
    CHECK(boost::multiprecision::abs(i.re) < eps_at(27));
    CHECK(boost::multiprecision::abs(i.im - 1) < eps_at(27));

    // sqrt(4) = 2, sqrt(2i) = 1 + i.
    Complex two = sqrt(Complex(Real(4), Real(0)));
    CHECK(boost::multiprecision::abs(two.re - 2) < eps_at(27));
    CHECK(boost::multiprecision::abs(two.im) < eps_at(27));

    Complex w = sqrt(Complex(Real(0), Real(2)));
    CHECK(boost::multiprecision::abs(w.re - 1) < eps_at(27));
    CHECK(boost::multiprecision::abs(w.im - 1) < eps_at(27));

    // Just below the cut: sqrt(-1 - 0.01i) has negative imaginary part and
    // positive real part (principal branch continuity from below).
    Complex below = sqrt(Complex(Real(-1), Real(-1) / 100));
    CHECK(below.re > 0);
    CHECK(below.im < 0);

    // squares recover the argument on a spread of samples.
    for (int k = 0; k < 8; ++k) {
        Complex z(Real(k - 4) / 3, Real(2 * k - 7) / 5);
        Complex r = sqrt(z);
        Complex back = r * r;
        CHECK(boost::multiprecision::abs(back.re - z.re) < eps_at(25));
        CHECK(boost::multiprecision::abs(back.im - z.im) < eps_at(25));
        CHECK(r.re >= 0);
    }
}

TEST_CASE("polynomial and rational evaluation match exact arithmetic") {
    PrecisionScope scope(30);
    // p = t^2 - 3t + 1/2 at t = 1/4: 1/16 - 3/4 + 1/2 = -3/16.
    ParamPoly p = ParamPoly::from_coeffs({BigRational(1, 2), BigRational(-3), BigRational(1)});
    Real at = eval_real(p, real_from_rational(BigRational(1, 4)));
    CHECK(boost::multiprecision::abs(at - real_from_rational(BigRational(-3, 16))) < eps_at(27));

    Complex z(Real(1) / 4, Real(1) / 2);
    Complex pc = eval_complex(p, z);
    // p(1/4 + i/2) = (1/4 + i/2)^2 - 3(1/4 + i/2) + 1/2 = -7/16 - 5i/4.
    CHECK(boost::multiprecision::abs(pc.re - real_from_rational(BigRational(-7, 16))) < eps_at(26));
    CHECK(boost::multiprecision::abs(pc.im - real_from_rational(BigRational(-5, 4))) < eps_at(26));

    ParamRat r(ParamPoly(1), ParamPoly::from_coeffs({BigRational(-2), BigRational(1)}));
    // 1/(t-2) at t = i: 1/(i-2) = (-2 - i)/5.
    Complex rc = eval_complex(r, Complex(Real(0), Real(1)));
    CHECK(boost::multiprecision::abs(rc.re + real_from_rational(BigRational(2, 5))) < eps_at(26));
    CHECK(boost::multiprecision::abs(rc.im + real_from_rational(BigRational(1, 5))) < eps_at(26));
}

TEST_CASE("to_string formats at the requested digit count") {
    PrecisionScope scope(30);
    std::string s = to_string(real_pi(), 10);
    CHECK(s.find("3.1415926536") != std::string::npos);
    Complex z(Real(1) / 3, Real(-2));
    std::string zs = to_string(z, 8);
    CHECK(zs.find("3.33333333e-01") != std::string::npos);
    CHECK(zs.find("- 2.0") != std::string::npos);
    CHECK(zs.find("*i") != std::string::npos);
}
