#include "pf/periods.hpp"

#include <map>

#include "pf/errors.hpp"

namespace pf {

PeriodSeries diagonal_family_germ(int n, int nterms) {
    if (n < 2) throw Error("diagonal_family_germ: need at least three variables");
    const int m = n + 1;
    std::vector<BigRational> c(static_cast<size_t>(nterms) + 1, BigRational(0));
    for (int k = 0; m * k <= nterms; ++k) {
        BigInt num = factorial(static_cast<unsigned long>(m * k));
        BigInt den = 1;
        BigInt kf = factorial(static_cast<unsigned long>(k));
        for (int i = 0; i < m; ++i) den *= kf;
        c[static_cast<size_t>(m * k)] = BigRational(num) / BigRational(den);
    }
    return PeriodSeries{LocalPoint::infinity(), BigRational(1), std::move(c)};
}

BigRational diagonal_constant_term(int n, int k) {
    // Coefficient of (x0 ... xn)^(mk) in (x0^m + ... + xn^m)^(mk), expanded
    // one factor at a time with pruning; no closed form is used.
    const int m = n + 1;
    const int power = m * k;
    std::map<std::vector<int>, BigInt> acc;
    acc[std::vector<int>(static_cast<size_t>(n) + 1, 0)] = 1;
    for (int step = 0; step < power; ++step) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [e, coef] : acc) {
            for (int i = 0; i <= n; ++i) {
                std::vector<int> e2 = e;
                e2[static_cast<size_t>(i)] += m;
                if (e2[static_cast<size_t>(i)] > power) continue;
                next[std::move(e2)] += coef;
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find(std::vector<int>(static_cast<size_t>(n) + 1, power));
    return it == acc.end() ? BigRational(0) : BigRational(it->second);
}

PeriodSeries gauss_hypergeometric(const BigRational& a, const BigRational& b,
                                  const BigRational& c, int nterms) {
    std::vector<BigRational> v(static_cast<size_t>(nterms) + 1);
    v[0] = 1;
    for (int k = 0; k < nterms; ++k) {
        BigRational den = (c + k) * BigRational(k + 1);
        if (den == 0) throw Error("gauss_hypergeometric: lower parameter hits a nonpositive integer");
        v[static_cast<size_t>(k) + 1] = v[static_cast<size_t>(k)] * (a + k) * (b + k) / den;
    }
    return PeriodSeries{LocalPoint::finite(BigRational(0)), BigRational(0), std::move(v)};
}

PeriodSeries substitute_power(const PeriodSeries& s, int power) {
    if (power < 1) throw Error("substitute_power: power must be positive");
    if (power == 1) return s;
    const int N = s.length() - 1;
    std::vector<BigRational> v(static_cast<size_t>(N) * power + 1, BigRational(0));
    for (int i = 0; i <= N; ++i) v[static_cast<size_t>(i) * power] = s.c[static_cast<size_t>(i)];
    return PeriodSeries{s.point, s.lead_exp * BigRational(power), std::move(v)};
}

AnnihilationCheck annihilation_check(const DiffOperator& op, const PeriodSeries& s) {
    AppliedSeries r = apply_to_series(op, s);
    AnnihilationCheck out;
    out.window_end = r.window_end;
    out.annihilated = r.series.all_zero();
    if (!out.annihilated) {
        for (int i = 0; i < r.series.length(); ++i) {
            if (r.series.c[static_cast<size_t>(i)] != 0) {
                out.first_failure = r.series.lead_exp + BigRational(i);
                break;
            }
        }
    }
    return out;
}

}  // namespace pf
