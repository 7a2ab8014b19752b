#include "pf/frobenius.hpp"

#include <algorithm>
#include <map>

#include "pf/errors.hpp"

namespace pf {

namespace {

// Truncated polynomials in a nilpotent deformation eps, with an explicit
// count of trustworthy coefficients (division by eps^w loses w of them).
struct Eps {
    std::vector<BigRational> c;
    int valid = 0;
};

Eps eps_make(int modulus) {
    Eps e;
    e.c.assign(static_cast<size_t>(modulus), BigRational(0));
    e.valid = modulus;
    return e;
}

// q(a + eps) truncated to the modulus.
Eps poly_shift_eval(const ParamPoly& q, const BigRational& a, int modulus) {
    Eps e = eps_make(modulus);
    ParamPoly sh = q.compose_linear_shift(a);
    for (int k = 0; k < modulus && k <= sh.degree(); ++k)
        e.c[static_cast<size_t>(k)] = sh.coeff(k);
    return e;
}

Eps eps_mul(const Eps& a, const Eps& b) {
    Eps r = eps_make(static_cast<int>(a.c.size()));
    r.valid = std::min(a.valid, b.valid);
    for (int i = 0; i < r.valid; ++i) {
        if (a.c[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j < r.valid; ++j)
            r.c[static_cast<size_t>(i + j)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
    }
    return r;
}

void eps_sub_inplace(Eps& a, const Eps& b) {
    a.valid = std::min(a.valid, b.valid);
    for (int i = 0; i < a.valid; ++i) a.c[static_cast<size_t>(i)] -= b.c[static_cast<size_t>(i)];
}

// num/den where den has eps-valuation w <= num's valuation.
Eps eps_div(const Eps& num, const Eps& den) {
    int w = -1;
    for (int i = 0; i < den.valid; ++i) {
        if (den.c[static_cast<size_t>(i)] != 0) {
            w = i;
            break;
        }
    }
    if (w < 0) throw Error("frobenius: indicial piece vanished identically");
    for (int i = 0; i < w && i < num.valid; ++i)
        if (num.c[static_cast<size_t>(i)] != 0)
            throw Error("frobenius: recurrence division is not exact");
    Eps r = eps_make(static_cast<int>(num.c.size()));
    r.valid = std::min(num.valid, den.valid) - w;
    for (int k = 0; k < r.valid; ++k) {
        BigRational acc = k + w < num.valid ? num.c[static_cast<size_t>(k + w)] : BigRational(0);
        for (int j = 1; j <= k; ++j)
            acc -= den.c[static_cast<size_t>(w + j)] * r.c[static_cast<size_t>(k - j)];
        r.c[static_cast<size_t>(k)] = acc / den.c[static_cast<size_t>(w)];
    }
    return r;
}

}  // namespace

FrobeniusSystem frobenius_solutions(const DiffOperator& op, const LocalPoint& p, int nterms) {
    if (nterms < 1) throw Error("frobenius_solutions: need at least one term");
    FrobeniusSystem out;
    ThetaGraded tg = theta_graded(op, p, nterms);
    const ParamPoly p0 = tg.pieces[0];
    const int order = op.order();

    bool roots_complete = true;
    auto roots = p0.rational_roots(&roots_complete);
    int counted = 0;
    for (const auto& [rho, m] : roots) counted += m;
    out.complete = roots_complete && counted == p0.degree() && p0.degree() == order;

    // Group roots into integer-difference classes.
    std::vector<std::vector<std::pair<BigRational, int>>> classes;
    for (const auto& root : roots) {
        bool placed = false;
        for (auto& cls : classes) {
            if (is_integer(root.first - cls.front().first)) {
                cls.push_back(root);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({root});
    }
    for (auto& cls : classes)
        std::sort(cls.begin(), cls.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });

    for (const auto& cls : classes) {
        int above = 0;  // total multiplicity of strictly larger roots in the class
        for (const auto& [rho, mult] : cls) {
            const int J = above;
            above += mult;
            const int modulus = 2 * J + mult + 1;

            // Seed c_0 = eps^J and run the graded recurrence.
            std::vector<Eps> c;
            c.reserve(static_cast<size_t>(nterms) + 1);
            Eps c0 = eps_make(modulus);
            c0.c[static_cast<size_t>(J)] = 1;
            c.push_back(std::move(c0));
            for (int i = 1; i <= nterms; ++i) {
                Eps num = eps_make(modulus);
                for (int d = 1; d <= i && d < static_cast<int>(tg.pieces.size()); ++d) {
                    const ParamPoly& qd = tg.pieces[static_cast<size_t>(d)];
                    if (qd.is_zero()) continue;
                    Eps f = poly_shift_eval(qd, rho + BigRational(i - d), modulus);
                    eps_sub_inplace(num, eps_mul(f, c[static_cast<size_t>(i - d)]));
                }
                Eps den = poly_shift_eval(p0, rho + BigRational(i), modulus);
                c.push_back(eps_div(num, den));
            }

            // Read off solutions: coefficient of eps^q, q = J .. J+mult-1.
            for (int q = J; q < J + mult; ++q) {
                FrobeniusSolution sol;
                sol.exponent = rho;
                sol.parts.assign(static_cast<size_t>(q) + 1,
                                 PeriodSeries{p, rho, std::vector<BigRational>(
                                                          static_cast<size_t>(nterms) + 1,
                                                          BigRational(0))});
                for (int l = 0; l <= q; ++l) {
                    int idx = q - l;
                    for (int i = 0; i <= nterms; ++i) {
                        const Eps& ci = c[static_cast<size_t>(i)];
                        if (idx >= ci.valid)
                            throw Error("frobenius: lost eps precision; internal bound too small");
                        sol.parts[static_cast<size_t>(l)].c[static_cast<size_t>(i)] =
                            ci.c[static_cast<size_t>(idx)];
                    }
                }
                while (sol.parts.size() > 1 && sol.parts.back().all_zero()) sol.parts.pop_back();
                sol.log_depth = static_cast<int>(sol.parts.size()) - 1;
                out.solutions.push_back(std::move(sol));
            }
        }
    }

    std::sort(out.solutions.begin(), out.solutions.end(), [](const auto& a, const auto& b) {
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return a.log_depth < b.log_depth;
    });
    return out;
}

std::vector<PeriodSeries> apply_to_log_solution(const DiffOperator& op,
                                                const FrobeniusSolution& sol) {
    if (sol.parts.empty()) throw Error("apply_to_log_solution: empty solution");
    const LocalPoint p = sol.parts.front().point;
    const int N = sol.parts.front().length() - 1;
    ThetaGraded tg = theta_graded(op, p, N);
    const BigRational rho = sol.exponent;

    // Result parts share the window 0..N in offsets from rho + valuation.
    std::vector<PeriodSeries> res(
        sol.parts.size(),
        PeriodSeries{p, rho + BigRational(tg.valuation),
                     std::vector<BigRational>(static_cast<size_t>(N) + 1, BigRational(0))});

    // q(theta) (s^x L^l) = sum_u q^{(u)}(x)/u! * s^x L^{l-u}
    for (int d = 0; d <= N; ++d) {
        const ParamPoly& qd = tg.pieces[static_cast<size_t>(d)];
        if (qd.is_zero()) continue;
        for (size_t l = 0; l < sol.parts.size(); ++l) {
            const PeriodSeries& part = sol.parts[l];
            for (int u = 0; static_cast<size_t>(u) <= l && u <= qd.degree(); ++u) {
                ParamPoly der = qd;
                for (int k = 0; k < u; ++k) der = der.derivative();
                BigRational ufac = BigRational(factorial(static_cast<unsigned long>(u)));
                for (int i = 0; i + d <= N; ++i) {
                    const BigRational& a = part.c[static_cast<size_t>(i)];
                    if (a == 0) continue;
                    res[l - static_cast<size_t>(u)].c[static_cast<size_t>(i + d)] +=
                        a * der.eval(rho + BigRational(i)) / ufac;
                }
            }
        }
    }
    return res;
}

}  // namespace pf
