#pragma once
/*
 * Linear ordinary differential operators with coefficients in Q(t), in
 * either the d/dt basis or the logarithmic basis theta = t d/dt.
 * Coefficients are stored ascending by derivative order, with the leading
 * one nonzero.
 */

#include <string>
#include <vector>

#include "pf/paramrat.hpp"

namespace pf {

enum class OpBasis { Ddt, Theta };

class DiffOperator {
public:
    DiffOperator() = default;
    DiffOperator(OpBasis basis, std::vector<ParamRat> ascending);

    static DiffOperator identity();
    // The derivation itself in the chosen basis.
    static DiffOperator derivation(OpBasis basis);

    OpBasis basis() const { return basis_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<ParamRat>& coeffs() const { return c_; }
    const ParamRat& coeff(int j) const;

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    DiffOperator scaled(const ParamRat& c) const;
    bool operator==(const DiffOperator& o) const {
        return basis_ == o.basis_ && c_ == o.c_;
    }

    std::string to_string(const std::string& name = "t") const;

private:
    void trim();
    OpBasis basis_ = OpBasis::Ddt;
    std::vector<ParamRat> c_;
};

// Operator composition a after b (in a common basis; mixed bases convert b).
DiffOperator op_multiply(const DiffOperator& a, const DiffOperator& b);

// Basis changes: theta^j = sum_l S2(j,l) t^l d^l and
// d^l = t^-l theta(theta-1)...(theta-l+1).
DiffOperator to_theta_form(const DiffOperator& op);
DiffOperator from_theta_form(const DiffOperator& op);

struct SymbolValue {
    int order = -1;
    ParamRat leading;
};
SymbolValue symbol(const DiffOperator& op);

// Canonical form over Q[t]: denominators cleared, no common rational or
// polynomial content, top coefficient of the leading term positive.
// `factor` (if given) receives the multiplier with normalized = factor * op.
DiffOperator normalize(const DiffOperator& op, ParamRat* factor = nullptr);

}  // namespace pf
