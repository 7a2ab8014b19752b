#pragma once
/*
 * Graded data of the Jacobian ideal of a family: per-degree echelon bases
 * of the ideal slice spanned by monomial multiples of the partials, the
 * deterministic complement monomial basis of the quotient slice, and exact
 * decompositions P = sum_i A_i * df/dx_i + remainder with the remainder
 * supported on the complement.
 */

#include <map>
#include <vector>

#include "pf/family.hpp"
#include "pf/monomial.hpp"
#include "pf/sparse_echelon.hpp"

namespace pf {

class JacobianData {
public:
    explicit JacobianData(const FamilySpec& spec);

    const FamilySpec& spec() const { return spec_; }
    const MultiPoly& partial(int i) const { return partials_.at(static_cast<size_t>(i)); }

    struct DegreeData {
        int degree = 0;
        // All monomials of this degree in canonical order (row indices).
        std::vector<Monomial> monomials;
        // Raw generator g -> (partial index, multiplier monomial); insertion
        // order is partial index ascending, multiplier in canonical order.
        std::vector<std::pair<int, Monomial>> generators;
        SparseEchelon echelon;
        // Rows never used as pivots: the quotient-slice monomial basis.
        std::vector<int> complement_rows;
        std::vector<Monomial> complement_basis;
    };

    // Lazily built and cached per degree.
    const DegreeData& at_degree(int degree);

    struct Decomposition {
        std::vector<MultiPoly> A;  // one per variable; zero polynomials allowed
        MultiPoly remainder;       // supported on the complement basis
        std::vector<ParamRat> remainder_coords;  // along complement_basis
    };

    // Exact ideal decomposition of a homogeneous P of any degree >= 0.
    Decomposition decompose(const MultiPoly& P);

    // True iff the ideal slice is full in the critical degree
    // (n+1)(m-2)+1, which characterizes generic smoothness.
    bool check_generic_smooth();

private:
    FamilySpec spec_;
    std::vector<MultiPoly> partials_;
    std::map<int, DegreeData> cache_;
};

}  // namespace pf
