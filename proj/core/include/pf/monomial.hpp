#pragma once
/*
 * Exponent vectors and the canonical monomial order used everywhere: by
 * total degree first, then lexicographically by descending exponent
 * vector, so that for fixed degree x0^2 precedes x0*x1 precedes x1^2.
 * monomials_of_degree enumerates a graded slice in exactly this order.
 */

#include <string>
#include <vector>

namespace pf {

struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial unit(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const;
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }

    Monomial operator*(const Monomial& o) const;
    // Divide by x_i (exponent must be positive).
    Monomial divided_by_var(int i) const;
    bool divisible_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // Canonical order (see file comment).
    bool operator<(const Monomial& o) const;

    std::string to_string(const std::vector<std::string>& names) const;
};

// All monomials in `nvars` variables of total degree `degree`, in the
// canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Position of m in monomials_of_degree(m.nvars(), m.degree()); -1 if the
// list does not contain it (cannot happen for well-formed input).
int monomial_index(const std::vector<Monomial>& sorted_list, const Monomial& m);

}  // namespace pf
