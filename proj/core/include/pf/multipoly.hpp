#pragma once
/*
 * Sparse homogeneous polynomials in the projective coordinates, with
 * coefficients that are rational functions of the parameter t.  Terms are
 * kept in the canonical monomial order.  Every non-zero term must have the
 * declared total degree; violations throw FamilyError naming the degrees.
 */

#include <map>
#include <string>
#include <vector>

#include "pf/monomial.hpp"
#include "pf/paramrat.hpp"

namespace pf {

class MultiPoly {
public:
    MultiPoly() = default;
    // Zero polynomial of the given shape.
    MultiPoly(int nvars, int degree);
    static MultiPoly from_terms(int nvars, const std::vector<std::pair<Monomial, ParamRat>>& terms);
    // c * m as a polynomial.
    static MultiPoly term(const Monomial& m, const ParamRat& c);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, ParamRat>& terms() const { return terms_; }
    const ParamRat& coeff(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const ParamRat& c) const;
    MultiPoly times_monomial(const Monomial& m) const;

    // Partial derivative in x_i (degree drops by one; clamped at zero for
    // the constant case, which only arises transiently).
    MultiPoly deriv_var(int i) const;
    // Coefficient-wise d/dt.
    MultiPoly deriv_param() const;

    std::string to_string(const std::vector<std::string>& names,
                          const std::string& param = "t") const;

private:
    void insert_term(const Monomial& m, const ParamRat& c);
    int nvars_ = 0;
    int degree_ = 0;
    std::map<Monomial, ParamRat> terms_;
};

}  // namespace pf
