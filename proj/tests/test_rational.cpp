#include "doctest.h"
#include "pf/rational.hpp"

using namespace pf;

TEST_CASE("mk_rational canonicalizes and validates") {
    CHECK(mk_rational(6, 4) == mk_rational(3, 2));
    CHECK(mk_rational(3, -6) == mk_rational(-1, 2));
    CHECK(mk_rational(3, -6).get_den() == 2);  // denominator stays positive
    CHECK(mk_rational(0, 7) == 0);
    CHECK_THROWS_AS(mk_rational(1, 0), Error);
}

TEST_CASE("rational parsing and printing round-trips") {
    CHECK(parse_rational("22/7") == mk_rational(22, 7));
    CHECK(parse_rational("-5") == mk_rational(-5, 1));
    CHECK(to_string(mk_rational(-22, 7)) == "-22/7");
    CHECK(to_string(parse_rational(to_string(mk_rational(10, 4)))) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("integer powers") {
    CHECK(pow_rational(mk_rational(2, 3), 3) == mk_rational(8, 27));
    CHECK(pow_rational(mk_rational(2, 3), 0) == 1);
    CHECK(pow_rational(mk_rational(2, 3), -2) == mk_rational(9, 4));
    CHECK_THROWS_AS(pow_rational(BigRational(0), -1), Error);
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
    // (3k)!/(k!)^3 at k = 2 is the central trinomial count 90.
    CHECK(multinomial({2, 2, 2}) == 90);
}
