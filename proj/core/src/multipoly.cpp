#include "pf/multipoly.hpp"

#include <sstream>

#include "pf/errors.hpp"

namespace pf {

namespace {
const ParamRat kZeroRat;
}

MultiPoly::MultiPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw FamilyError("polynomial needs at least one variable");
    if (degree < 0) throw FamilyError("polynomial degree must be non-negative");
}

MultiPoly MultiPoly::from_terms(int nvars,
                                const std::vector<std::pair<Monomial, ParamRat>>& terms) {
    int degree = -1;
    for (const auto& [m, c] : terms) {
        if (c.is_zero()) continue;
        if (m.nvars() != nvars) throw FamilyError("term variable count mismatch");
        if (degree == -1) {
            degree = m.degree();
        } else if (m.degree() != degree) {
            throw FamilyError("polynomial is not homogeneous: found terms of degree " +
                              std::to_string(degree) + " and " + std::to_string(m.degree()));
        }
    }
    MultiPoly p(nvars, degree == -1 ? 0 : degree);
    for (const auto& [m, c] : terms) p.insert_term(m, c);
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const ParamRat& c) {
    MultiPoly p(m.nvars(), m.degree());
    p.insert_term(m, c);
    return p;
}

void MultiPoly::insert_term(const Monomial& m, const ParamRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const ParamRat& MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? kZeroRat : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw FamilyError("polynomial variable count mismatch");
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
        throw FamilyError("cannot add homogeneous polynomials of degree " +
                          std::to_string(degree_) + " and " + std::to_string(o.degree_));
    MultiPoly r = *this;
    if (r.is_zero()) r.degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw FamilyError("polynomial variable count mismatch");
    MultiPoly r(nvars_, degree_ + o.degree_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.insert_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const ParamRat& c) const {
    MultiPoly r(nvars_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.insert_term(m, a * c);
    return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
    MultiPoly r(nvars_, degree_ + m.degree());
    for (const auto& [mm, c] : terms_) r.insert_term(mm * m, c);
    return r;
}

MultiPoly MultiPoly::deriv_var(int i) const {
    MultiPoly r(nvars_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        int e = m[i];
        if (e == 0) continue;
        r.insert_term(m.divided_by_var(i), c * ParamRat(BigRational(e)));
    }
    return r;
}

MultiPoly MultiPoly::deriv_param() const {
    MultiPoly r(nvars_, degree_);
    for (const auto& [m, c] : terms_) r.insert_term(m, c.derivative());
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names,
                                 const std::string& param) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        // Pull out a leading sign when the coefficient is a pure constant
        // or polynomial whose leading coefficient is negative.
        ParamRat coeff = c;
        bool negative = false;
        if (coeff.is_polynomial()) {
            ParamPoly p = coeff.as_polynomial();
            if (p.leading() < 0) {
                negative = true;
                coeff = -coeff;
            }
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mono = m.to_string(names);
        auto cst = coeff.as_constant();
        if (cst && *cst == 1 && mono != "1") {
            os << mono;
        } else if (coeff.is_polynomial()) {
            // Single-term polynomials like 3*t^2 do not need parentheses.
            ParamPoly p = coeff.as_polynomial();
            int nonzero = 0;
            for (const auto& x : p.coeffs())
                if (x != 0) ++nonzero;
            if (nonzero > 1)
                os << "(" << coeff.to_string(param) << ")";
            else
                os << coeff.to_string(param);
            if (mono != "1") os << "*" << mono;
        } else {
            // Already printed as (num)/(den).
            os << coeff.to_string(param);
            if (mono != "1") os << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace pf
