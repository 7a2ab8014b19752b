#include "doctest.h"
#include "pf/expr_parser.hpp"
#include "pf/multipoly.hpp"

using namespace pf;

namespace {
const std::vector<std::string> kVars{"x0", "x1", "x2"};
MultiPoly mp(const std::string& text) { return parse_polynomial(text, kVars, "t"); }
}  // namespace

TEST_CASE("homogeneity is enforced with the degrees named") {
    CHECK(mp("x0^2 + x1*x2").degree() == 2);
    CHECK_THROWS_WITH_AS(mp("x0 + x1^2"),
                         "polynomial is not homogeneous: found terms of degree 1 and 2",
                         FamilyError);
}

TEST_CASE("ring operations respect degrees") {
    MultiPoly a = mp("x0^2 + x1^2");
    MultiPoly b = mp("x0*x1");
    CHECK((a + b).term_count() == 3);
    CHECK((a - a).is_zero());
    CHECK((a * b).degree() == 4);
    CHECK_THROWS_AS(mp("x0^2") + mp("x0^3"), FamilyError);
    CHECK(a.scaled(ParamRat(0)).is_zero());
    MultiPoly shifted = a.times_monomial(Monomial({1, 0, 0}));
    CHECK(shifted.degree() == 3);
    CHECK(shifted == mp("x0^3 + x0*x1^2"));
}

TEST_CASE("coefficients live in Q(t)") {
    MultiPoly f = mp("x1^2*x2 - x0*(x0 - x2)*(x0 - t*x2)");
    CHECK(f.degree() == 3);
    CHECK(f.coeff(Monomial({3, 0, 0})) == ParamRat(-1));
    // x0^2 x2 appears with coefficient (1 + t).
    CHECK(f.coeff(Monomial({2, 0, 1})) == ParamRat(ParamPoly::from_coeffs({BigRational(1), BigRational(1)})));
    CHECK(f.coeff(Monomial({1, 0, 2})) == ParamRat(ParamPoly::from_coeffs({BigRational(0), BigRational(-1)})));
}

TEST_CASE("partial derivatives") {
    MultiPoly f = mp("x0^3 + t*x0*x1*x2");
    MultiPoly d0 = f.deriv_var(0);
    CHECK(d0 == mp("3*x0^2 + t*x1*x2"));
    CHECK(f.deriv_var(1) == mp("t*x0*x2"));
    CHECK(f.deriv_param() == mp("x0*x1*x2"));
    CHECK(mp("x0^3").deriv_var(1).is_zero());
}

TEST_CASE("euler relation holds for homogeneous polynomials") {
    MultiPoly f = mp("x0^2*x2 + x1^3 + t*x0*x1*x2");
    MultiPoly acc(3, 3);
    for (int i = 0; i < 3; ++i)
        acc += f.deriv_var(i).times_monomial(Monomial(i == 0   ? std::vector<int>{1, 0, 0}
                                                      : i == 1 ? std::vector<int>{0, 1, 0}
                                                               : std::vector<int>{0, 0, 1}));
    CHECK(acc == f.scaled(ParamRat(3)));
}

TEST_CASE("printing and extended parsing round-trip") {
    MultiPoly f = mp("x1^2*x2 - x0*(x0 - x2)*(x0 - t*x2)");
    std::string s = f.to_string(kVars);
    CHECK(parse_polynomial_extended(s, kVars, "t") == f);
    // A polynomial with a genuine rational-function coefficient survives too.
    MultiPoly g = f.scaled(ParamRat(ParamPoly(1), ParamPoly::from_coeffs({BigRational(-2), BigRational(1)})));
    CHECK(parse_polynomial_extended(g.to_string(kVars), kVars, "t") == g);
}
