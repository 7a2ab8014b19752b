#include "pf/jacobian.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

JacobianData::JacobianData(const FamilySpec& spec) : spec_(spec) {
    for (int i = 0; i < spec_.nvars(); ++i) partials_.push_back(spec_.f.deriv_var(i));
}

const JacobianData::DegreeData& JacobianData::at_degree(int degree) {
    auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;

    DegreeData dd;
    dd.degree = degree;
    dd.monomials = monomials_of_degree(spec_.nvars(), degree);

    const int mult_deg = degree - (spec_.degree() - 1);
    if (mult_deg >= 0) {
        std::vector<Monomial> mults = monomials_of_degree(spec_.nvars(), mult_deg);
        for (int i = 0; i < spec_.nvars(); ++i) {
            for (const Monomial& mu : mults) {
                const int g = static_cast<int>(dd.generators.size());
                dd.generators.emplace_back(i, mu);
                MultiPoly gen = partials_[static_cast<size_t>(i)].times_monomial(mu);
                if (gen.is_zero()) continue;

                // Clear coefficient denominators so the column lives in Q[t];
                // the witness records the scaling.
                ParamPoly den(BigRational(1));
                for (const auto& [mon, c] : gen.terms()) den = ParamPoly::lcm(den, c.den());
                SparseVecPoly col;
                for (const auto& [mon, c] : gen.terms()) {
                    ParamRat scaled = c * ParamRat(den);
                    col.emplace_back(monomial_index(dd.monomials, mon), scaled.num());
                }
                dd.echelon.insert(std::move(col), {{g, den}});
            }
        }
    }
    for (int row = 0; row < static_cast<int>(dd.monomials.size()); ++row) {
        if (!dd.echelon.is_pivot_row(row)) {
            dd.complement_rows.push_back(row);
            dd.complement_basis.push_back(dd.monomials[static_cast<size_t>(row)]);
        }
    }
    return cache_.emplace(degree, std::move(dd)).first->second;
}

JacobianData::Decomposition JacobianData::decompose(const MultiPoly& P) {
    if (P.nvars() != spec_.nvars())
        throw Error("decompose: variable count mismatch");
    const DegreeData& dd = at_degree(P.degree());

    SparseVecRat query;
    for (const auto& [mon, c] : P.terms())
        query.emplace_back(monomial_index(dd.monomials, mon), c);
    auto red = dd.echelon.reduce(query);

    Decomposition out;
    const int mult_deg = P.degree() - (spec_.degree() - 1);
    out.A.assign(static_cast<size_t>(spec_.nvars()),
                 MultiPoly(spec_.nvars(), mult_deg >= 0 ? mult_deg : 0));
    for (const auto& [g, c] : red.generator_coeffs) {
        if (c.is_zero()) continue;
        const auto& [i, mu] = dd.generators[static_cast<size_t>(g)];
        out.A[static_cast<size_t>(i)] += MultiPoly::term(mu, c);
    }

    out.remainder_coords.assign(dd.complement_basis.size(), ParamRat());
    std::vector<std::pair<Monomial, ParamRat>> rem_terms;
    for (const auto& [row, c] : red.remainder) {
        if (c.is_zero()) continue;
        // Locate the row among the complement rows.
        auto pos = std::lower_bound(dd.complement_rows.begin(), dd.complement_rows.end(), row);
        if (pos == dd.complement_rows.end() || *pos != row)
            throw Error("decompose: remainder landed on an ideal pivot row");
        size_t ci = static_cast<size_t>(pos - dd.complement_rows.begin());
        out.remainder_coords[ci] = c;
        rem_terms.emplace_back(dd.monomials[static_cast<size_t>(row)], c);
    }
    out.remainder = rem_terms.empty() ? MultiPoly(spec_.nvars(), P.degree())
                                      : MultiPoly::from_terms(spec_.nvars(), rem_terms);
    return out;
}

bool JacobianData::check_generic_smooth() {
    const int crit = spec_.nvars() * (spec_.degree() - 2) + 1;
    return at_degree(crit).complement_basis.empty();
}

}  // namespace pf
