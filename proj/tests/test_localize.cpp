#include "doctest.h"

#include "pf/expr_parser.hpp"
#include "pf/localize.hpp"

using namespace pf;

namespace {
ParamRat rf(const std::string& s) { return parse_ratfunc(s, "t"); }

DiffOperator mk(OpBasis b, std::initializer_list<const char*> ascending) {
    std::vector<ParamRat> c;
    for (const char* s : ascending) c.push_back(rf(s));
    return DiffOperator(b, std::move(c));
}

DiffOperator legendre_normal() {
    return mk(OpBasis::Ddt, {"1", "8*t - 4", "4*t^2 - 4*t"});
}

DiffOperator quartic_operator() {
    return mk(OpBasis::Ddt, {"t", "7*t^2", "6*t^3", "t^4 - 256"});
}

ParamPoly pp(std::initializer_list<long> ascending) {
    std::vector<BigRational> c;
    for (long v : ascending) c.push_back(BigRational(v));
    return ParamPoly::from_coeffs(std::move(c));
}
}  // namespace

TEST_CASE("finite localization shifts the coefficients") {
    DiffOperator loc = localize_at(legendre_normal(), LocalPoint::finite(BigRational(1)));
    // t = s + 1: 4t^2 - 4t -> 4s^2 + 4s, 8t - 4 -> 8s + 4.
    CHECK(loc == mk(OpBasis::Ddt, {"1", "8*t + 4", "4*t^2 + 4*t"}));
}

TEST_CASE("localization at infinity substitutes the reciprocal chart") {
    // d/dt -> -s^2 d/ds
    DiffOperator d = DiffOperator::derivation(OpBasis::Ddt);
    CHECK(localize_at(d, LocalPoint::infinity()) == mk(OpBasis::Ddt, {"0", "-t^2"}));
    // t d/dt -> -s d/ds
    CHECK(localize_at(mk(OpBasis::Ddt, {"0", "t"}), LocalPoint::infinity()) ==
          mk(OpBasis::Ddt, {"0", "-t"}));
    // second-order chain: d^2/dt^2 -> s^4 d^2 + 2 s^3 d
    CHECK(localize_at(mk(OpBasis::Ddt, {"0", "0", "1"}), LocalPoint::infinity()) ==
          mk(OpBasis::Ddt, {"0", "2*t^3", "t^4"}));
}

TEST_CASE("theta graded pieces reassemble the operator") {
    ThetaGraded g = theta_graded(legendre_normal(), LocalPoint::finite(BigRational(0)), 3);
    // 4t^2 d^2 + ... in theta form is (4 - 4/t) theta^2 + 4 theta + 1 + 4 theta...
    // organized by powers of t: t^-1 * (-4 theta^2) + t^0 * (4 theta^2 + 4 theta + 1).
    CHECK(g.valuation == -1);
    CHECK(g.pieces[0] == pp({0, 0, -4}));
    CHECK(g.pieces[1] == pp({1, 4, 4}));
    CHECK(g.pieces[2].is_zero());
    CHECK(g.pieces[3].is_zero());
}

TEST_CASE("indicial data at the classical hypergeometric points") {
    DiffOperator op = legendre_normal();

    SingularPointInfo at0 = indicial_polynomial(op, LocalPoint::finite(BigRational(0)));
    CHECK(at0.regular_singular);
    CHECK(at0.indicial == pp({0, 0, 1}));  // x^2
    REQUIRE(at0.exponents.size() == 1);
    CHECK(at0.exponents[0].first == BigRational(0));
    CHECK(at0.exponents[0].second == 2);
    CHECK(at0.exponents_complete);

    SingularPointInfo at1 = indicial_polynomial(op, LocalPoint::finite(BigRational(1)));
    CHECK(at1.regular_singular);
    REQUIRE(at1.exponents.size() == 1);
    CHECK(at1.exponents[0].first == BigRational(0));
    CHECK(at1.exponents[0].second == 2);

    SingularPointInfo atoo = indicial_polynomial(op, LocalPoint::infinity());
    CHECK(atoo.regular_singular);
    REQUIRE(atoo.exponents.size() == 1);
    CHECK(atoo.exponents[0].first == mk_rational(1, 2));
    CHECK(atoo.exponents[0].second == 2);
}

TEST_CASE("ordinary points have binomial exponents") {
    DiffOperator op = legendre_normal();
    CHECK(is_ordinary_point(op, LocalPoint::finite(BigRational(2))));
    CHECK(!is_ordinary_point(op, LocalPoint::finite(BigRational(0))));
    CHECK(!is_ordinary_point(op, LocalPoint::infinity()));

    SingularPointInfo at2 = indicial_polynomial(op, LocalPoint::finite(BigRational(2)));
    CHECK(at2.indicial == pp({0, -1, 1}));  // x(x - 1)
}

TEST_CASE("singular point census for the hypergeometric operator") {
    SingularPoints sp = singular_points(legendre_normal());
    REQUIRE(sp.points.size() == 3);
    CHECK(sp.points[0].point == LocalPoint::finite(BigRational(0)));
    CHECK(sp.points[1].point == LocalPoint::finite(BigRational(1)));
    CHECK(sp.points[2].point == LocalPoint::infinity());
    for (const auto& p : sp.points) CHECK(p.regular_singular);
    CHECK(sp.unresolved_factors.empty());
    CHECK(sp.roots_complete);
}

TEST_CASE("singular point census for the order-three quartic operator") {
    SingularPoints sp = singular_points(quartic_operator());
    REQUIRE(sp.points.size() == 3);
    CHECK(sp.points[0].point == LocalPoint::finite(BigRational(-4)));
    CHECK(sp.points[1].point == LocalPoint::finite(BigRational(4)));
    CHECK(sp.points[2].point == LocalPoint::infinity());

    // t = 0 is ordinary even though every lower-order coefficient vanishes there.
    CHECK(is_ordinary_point(quartic_operator(), LocalPoint::finite(BigRational(0))));

    // The conjugate pair t^2 + 16 stays unresolved over the rationals; the
    // rational roots themselves are certified complete.
    REQUIRE(sp.unresolved_factors.size() == 1);
    CHECK(sp.unresolved_factors[0] == pp({16, 0, 1}));
    CHECK(sp.roots_complete);

    // At infinity the exponent 1 is triple.
    const auto& inf = sp.points[2];
    CHECK(inf.regular_singular);
    REQUIRE(inf.exponents.size() == 1);
    CHECK(inf.exponents[0].first == BigRational(1));
    CHECK(inf.exponents[0].second == 3);
}

TEST_CASE("irregular points fail the degree criterion") {
    // t^3 d^2 + 1 has indicial degree 0 < 2 at the origin.
    DiffOperator bad = mk(OpBasis::Ddt, {"1", "0", "t^3"});
    SingularPointInfo info = indicial_polynomial(bad, LocalPoint::finite(BigRational(0)));
    CHECK(!info.regular_singular);
    CHECK(info.indicial.degree() < 2);
}
