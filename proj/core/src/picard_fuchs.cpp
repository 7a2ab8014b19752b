#include "pf/picard_fuchs.hpp"

#include <map>

#include "pf/errors.hpp"
#include "pf/linsolve.hpp"

namespace pf {

namespace {

// Slice dimensions for pole orders 1..k_max (degree (k-1)*m quotients).
std::vector<int> slice_dims(JacobianData& jd, int k_max) {
    std::vector<int> dims;
    for (int k = 1; k <= k_max; ++k) {
        int deg = (k - 1) * jd.spec().degree();
        dims.push_back(static_cast<int>(jd.at_degree(deg).complement_basis.size()));
    }
    return dims;
}

}  // namespace

PicardFuchsResult picard_fuchs(const FamilySpec& spec, JacobianData& jd, int max_order) {
    if (!jd.check_generic_smooth())
        throw FamilyError("generic fiber is singular: Jacobian ideal is not full in the "
                          "critical degree");

    // Dimension of the whole reduced space: slices up to the top nonzero
    // degree (n+1)(m-2) of the quotient ring.
    const int m = spec.degree();
    int k_top = (spec.nvars() * (m - 2)) / m + 1;
    int space_dim = 0;
    for (int d : slice_dims(jd, k_top)) space_dim += d;
    const int cap = max_order >= 0 ? max_order : space_dim;

    std::vector<PoleForm> forms{omega_form(spec)};
    std::vector<ReduceResult> reduced{reduce_full(forms[0], jd)};

    SolveReport report;
    for (int r = 1; r <= cap; ++r) {
        while (static_cast<int>(forms.size()) <= r) {
            forms.push_back(gm_derivative(forms.back(), spec));
            reduced.push_back(reduce_full(forms.back(), jd));
        }

        std::vector<int> dims = slice_dims(jd, r + 1);
        std::vector<int> offset(dims.size() + 1, 0);
        for (size_t i = 0; i < dims.size(); ++i)
            offset[i + 1] = offset[i] + dims[i];
        const int rows = offset.back();

        ExactMatrix A(rows, r);
        std::vector<ParamRat> b(static_cast<size_t>(rows));
        for (int j = 0; j <= r; ++j) {
            const auto& coords = reduced[static_cast<size_t>(j)].cls.coords;
            for (size_t kk = 0; kk < coords.size(); ++kk) {
                for (size_t i = 0; i < coords[kk].size(); ++i) {
                    int row = offset[kk] + static_cast<int>(i);
                    if (j < r)
                        A.at(row, j) = coords[kk][i];
                    else
                        b[static_cast<size_t>(row)] = -coords[kk][i];
                }
            }
        }

        auto sol = solve_exact(A, b, &report);
        if (!sol) continue;

        std::vector<ParamRat> a = std::move(*sol);
        a.push_back(ParamRat(1));
        DiffOperator raw(OpBasis::Ddt, a);
        ParamRat factor;
        PicardFuchsResult out;
        out.op = normalize(raw, &factor);
        out.order = r;
        out.space_dim = space_dim;

        // beta = sum_j (factor a_j) * (witness chain of the j-th derivative),
        // merged per pole order; the per-order scalar -1/(k-1) is common.
        std::map<int, std::vector<MultiPoly>> merged;
        for (int j = 0; j <= r; ++j) {
            ParamRat scale = factor * a[static_cast<size_t>(j)];
            if (scale.is_zero()) continue;
            for (const auto& term : reduced[static_cast<size_t>(j)].cert.terms) {
                auto it = merged.find(term.k);
                if (it == merged.end()) {
                    std::vector<MultiPoly> w;
                    for (const auto& p : term.witness) w.push_back(p.scaled(scale));
                    merged.emplace(term.k, std::move(w));
                } else {
                    for (size_t i = 0; i < term.witness.size(); ++i)
                        it->second[i] += term.witness[i].scaled(scale);
                }
            }
        }
        for (auto& [k, w] : merged) {
            bool zero = true;
            for (const auto& p : w)
                if (!p.is_zero()) zero = false;
            if (zero) continue;
            CertTerm t;
            t.k = k;
            t.scalar = ParamRat(BigRational(-1) / BigRational(k - 1));
            t.witness = std::move(w);
            out.cert.terms.push_back(std::move(t));
        }
        return out;
    }

    throw NoOperatorError("no annihilating operator up to order " + std::to_string(cap) +
                          " (reduced-space rank " + std::to_string(report.rank) + ")");
}

}  // namespace pf
