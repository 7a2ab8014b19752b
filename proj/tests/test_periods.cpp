#include "doctest.h"

#include "pf/expr_parser.hpp"
#include "pf/periods.hpp"

using namespace pf;

namespace {
ParamRat rf(const std::string& s) { return parse_ratfunc(s, "t"); }

DiffOperator mk(OpBasis b, std::initializer_list<const char*> ascending) {
    std::vector<ParamRat> c;
    for (const char* s : ascending) c.push_back(rf(s));
    return DiffOperator(b, std::move(c));
}
}  // namespace

TEST_CASE("constant-term germ matches brute-force expansion") {
    // Cubic surface family in three variables.
    PeriodSeries cubic = diagonal_family_germ(2, 18);
    CHECK(cubic.point.at_infinity);
    CHECK(cubic.lead_exp == BigRational(1));
    for (int k = 0; k <= 6; ++k) {
        CHECK(cubic.c[static_cast<size_t>(3 * k)] == diagonal_constant_term(2, k));
    }
    // Exponent support is exactly 3k + 1.
    for (int i = 0; i <= 18; ++i)
        if (i % 3 != 0) CHECK(cubic.c[static_cast<size_t>(i)] == 0);

    // Quartic threefold slice in four variables, smaller range.
    PeriodSeries quartic = diagonal_family_germ(3, 16);
    for (int k = 0; k <= 4; ++k)
        CHECK(quartic.c[static_cast<size_t>(4 * k)] == diagonal_constant_term(3, k));
}

TEST_CASE("germ coefficients satisfy the factorial-ratio recurrence") {
    PeriodSeries g = diagonal_family_germ(3, 40);
    // c_k / c_{k-1} = 4 (4k-1)(4k-2)(4k-3) / k^3
    for (int k = 1; 4 * k <= 40; ++k) {
        BigRational prev = g.c[static_cast<size_t>(4 * (k - 1))];
        BigRational cur = g.c[static_cast<size_t>(4 * k)];
        BigRational ratio = BigRational(4) * BigRational(4 * k - 1) * BigRational(4 * k - 2) *
                            BigRational(4 * k - 3) / (BigRational(k) * k * k);
        CHECK(cur == prev * ratio);
    }
    CHECK(g.c[4] == BigRational(24));
    CHECK(g.c[8] == BigRational(2520));
}

TEST_CASE("Gauss series and its contiguity") {
    PeriodSeries s = gauss_hypergeometric(mk_rational(1, 2), mk_rational(1, 2), BigRational(1), 8);
    CHECK(s.c[0] == BigRational(1));
    CHECK(s.c[1] == mk_rational(1, 4));
    CHECK(s.c[2] == mk_rational(9, 64));
    CHECK(s.c[3] == mk_rational(25, 256));

    // (c)_k k! c_k = (a)_k (b)_k, checked directly for one k.
    PeriodSeries u = gauss_hypergeometric(mk_rational(1, 3), BigRational(2), mk_rational(7, 5), 5);
    BigRational a = mk_rational(1, 3), b = BigRational(2), c = mk_rational(7, 5);
    BigRational num = (a) * (a + 1) * (a + 2) * b * (b + 1) * (b + 2);
    BigRational den = c * (c + 1) * (c + 2) * BigRational(6);
    CHECK(u.c[3] == num / den);

    CHECK_THROWS_AS(gauss_hypergeometric(BigRational(1), BigRational(1), BigRational(-2), 8),
                    Error);
}

TEST_CASE("power substitution stretches the exponent lattice") {
    PeriodSeries s{LocalPoint::finite(BigRational(0)), mk_rational(1, 2),
                   {BigRational(1), BigRational(2), BigRational(3)}};
    PeriodSeries r = substitute_power(s, 3);
    CHECK(r.lead_exp == mk_rational(3, 2));
    CHECK(r.length() == 7);
    CHECK(r.c[0] == 1);
    CHECK(r.c[3] == 2);
    CHECK(r.c[6] == 3);
    CHECK(r.c[1] == 0);
    CHECK(substitute_power(s, 1).c == s.c);
}

TEST_CASE("hypergeometric operator annihilates its Gauss series") {
    DiffOperator op = mk(OpBasis::Ddt, {"1", "8*t - 4", "4*t^2 - 4*t"});
    auto chk = annihilation_check(
        op, gauss_hypergeometric(mk_rational(1, 2), mk_rational(1, 2), BigRational(1), 30));
    CHECK(chk.annihilated);
    CHECK(chk.window_end >= BigRational(28));
}

TEST_CASE("order-three operator annihilates the quartic germ at infinity") {
    DiffOperator op = mk(OpBasis::Ddt, {"t", "7*t^2", "6*t^3", "t^4 - 256"});
    PeriodSeries germ = diagonal_family_germ(3, 41);
    auto chk = annihilation_check(op, germ);
    CHECK(chk.annihilated);

    // A single corrupted coefficient is detected and located.
    PeriodSeries bad = germ;
    bad.c[20] += 1;
    auto fail = annihilation_check(op, bad);
    CHECK(!fail.annihilated);
    CHECK(fail.first_failure <= BigRational(25));
}
