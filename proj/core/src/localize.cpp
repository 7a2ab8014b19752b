#include "pf/localize.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

ThetaGraded theta_graded(const DiffOperator& op, const LocalPoint& p, int depth) {
    DiffOperator local = to_theta_form(localize_at(op, p));
    if (local.is_zero()) throw Error("theta_graded: zero operator");
    const int r = local.order();

    // Laurent-expand every theta coefficient far enough and regroup by
    // powers of the local variable.
    int v = 0;
    bool any = false;
    std::vector<ParamRat::Laurent> L(static_cast<size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        const ParamRat& g = local.coeff(i);
        if (g.is_zero()) continue;
        int vi = g.valuation_at(BigRational(0));
        if (!any || vi < v) v = vi;
        any = true;
    }
    for (int i = 0; i <= r; ++i) {
        const ParamRat& g = local.coeff(i);
        if (g.is_zero()) continue;
        L[static_cast<size_t>(i)] = g.laurent_at(BigRational(0), depth + (g.valuation_at(BigRational(0)) - v) + 1);
    }

    ThetaGraded out;
    out.valuation = v;
    out.pieces.assign(static_cast<size_t>(depth) + 1, ParamPoly());
    for (int d = 0; d <= depth; ++d) {
        std::vector<BigRational> qd(static_cast<size_t>(r) + 1, BigRational(0));
        for (int i = 0; i <= r; ++i) {
            if (local.coeff(i).is_zero()) continue;
            const auto& lau = L[static_cast<size_t>(i)];
            int idx = v + d - lau.lead_exp;
            if (idx >= 0 && idx < static_cast<int>(lau.coeff.size()))
                qd[static_cast<size_t>(i)] = lau.coeff[static_cast<size_t>(idx)];
        }
        out.pieces[static_cast<size_t>(d)] = ParamPoly::from_coeffs(std::move(qd));
    }
    return out;
}

SingularPointInfo indicial_polynomial(const DiffOperator& op, const LocalPoint& p) {
    SingularPointInfo info;
    info.point = p;
    ThetaGraded g = theta_graded(op, p, 0);
    info.indicial = g.pieces[0].primitive_part();
    info.regular_singular = info.indicial.degree() == from_theta_form(op).order();
    bool complete = true;
    auto roots = info.indicial.rational_roots(&complete);
    info.exponents = roots;
    int count = 0;
    for (const auto& [root, mult] : roots) count += mult;
    info.exponents_complete = complete && count == info.indicial.degree();
    return info;
}

bool is_ordinary_point(const DiffOperator& op, const LocalPoint& p) {
    DiffOperator local = localize_at(op, p);
    const int r = local.order();
    if (r < 0) throw Error("is_ordinary_point: zero operator");
    const ParamRat& lead = local.coeff(r);
    for (int j = 0; j < r; ++j) {
        const ParamRat& b = local.coeff(j);
        if (b.is_zero()) continue;
        if ((b / lead).valuation_at(BigRational(0)) < 0) return false;
    }
    // Leading coefficient must be nonvanishing as well; otherwise the
    // monic form degenerates even if every ratio stays finite.
    return lead.valuation_at(BigRational(0)) == 0;
}

SingularPoints singular_points(const DiffOperator& op) {
    SingularPoints out;
    DiffOperator norm = normalize(op);
    const ParamPoly lead = norm.coeff(norm.order()).as_polynomial();

    auto roots = lead.rational_roots(&out.roots_complete);
    for (const auto& [root, mult] : roots) {
        (void)mult;
        out.points.push_back(indicial_polynomial(norm, LocalPoint::finite(root)));
    }

    // Factors that resisted rational splitting (degree after removing the
    // rational roots).
    ParamPoly rest = lead.primitive_part();
    for (const auto& [root, mult] : roots) {
        ParamPoly lin = ParamPoly::from_coeffs({-root, BigRational(1)});
        for (int i = 0; i < mult; ++i) rest = rest.divexact(lin);
        rest = rest.primitive_part();
    }
    for (auto& [factor, mult] : rest.squarefree_factors()) {
        (void)mult;
        if (factor.degree() > 0) out.unresolved_factors.push_back(factor);
    }

    if (!is_ordinary_point(norm, LocalPoint::infinity()))
        out.points.push_back(indicial_polynomial(norm, LocalPoint::infinity()));
    return out;
}

}  // namespace pf
