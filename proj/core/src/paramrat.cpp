#include "pf/paramrat.hpp"

#include <sstream>

namespace pf {

ParamRat::ParamRat(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

void ParamRat::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    // Scale so den is integer primitive with positive leading coefficient.
    BigRational c = den_.content_signed();
    den_ = den_.scaled(BigRational(1) / c);
    num_ = num_.scaled(BigRational(1) / c);
}

ParamPoly ParamRat::as_polynomial() const {
    if (!is_polynomial()) throw Error("rational function is not a polynomial");
    // den is a positive integer constant after normalization.
    return num_.scaled(BigRational(1) / den_.coeff(0));
}

std::optional<BigRational> ParamRat::as_constant() const {
    if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
    if (num_.is_zero()) return BigRational(0);
    return num_.coeff(0) / den_.coeff(0);
}

ParamRat ParamRat::operator-() const {
    ParamRat r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRat ParamRat::operator+(const ParamRat& o) const {
    return ParamRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamRat ParamRat::operator-(const ParamRat& o) const {
    return ParamRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ParamRat ParamRat::operator*(const ParamRat& o) const {
    return ParamRat(num_ * o.num_, den_ * o.den_);
}

ParamRat ParamRat::operator/(const ParamRat& o) const {
    if (o.is_zero()) throw Error("division by the zero rational function");
    return ParamRat(num_ * o.den_, den_ * o.num_);
}

ParamRat ParamRat::derivative() const {
    return ParamRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<BigRational> ParamRat::eval(const BigRational& t0) const {
    BigRational d = den_.eval(t0);
    if (d == 0) return std::nullopt;
    return num_.eval(t0) / d;
}

ParamRat::Laurent ParamRat::laurent_at(const BigRational& t0, int nterms) const {
    Laurent out;
    out.coeff.assign(static_cast<size_t>(std::max(nterms, 0)), BigRational(0));
    if (is_zero() || nterms <= 0) return out;
    ParamPoly n = num_.compose_linear_shift(t0);
    ParamPoly d = den_.compose_linear_shift(t0);
    int vn = n.valuation();
    int vd = d.valuation();
    out.lead_exp = vn - vd;
    // Divide out s^vn, s^vd and expand (n/s^vn) * (d/s^vd)^{-1}.
    std::vector<BigRational> nc(n.coeffs().begin() + vn, n.coeffs().end());
    ParamPoly du = ParamPoly::from_coeffs({d.coeffs().begin() + vd, d.coeffs().end()});
    std::vector<BigRational> inv = series_inverse(du, nterms);
    for (int k = 0; k < nterms; ++k) {
        BigRational acc(0);
        for (int j = 0; j <= k && j < static_cast<int>(nc.size()); ++j)
            acc += nc[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
        out.coeff[static_cast<size_t>(k)] = acc;
    }
    return out;
}

ParamRat::Laurent ParamRat::laurent_at_infinity(int nterms) const {
    Laurent out;
    out.coeff.assign(static_cast<size_t>(std::max(nterms, 0)), BigRational(0));
    if (is_zero() || nterms <= 0) return out;
    // t = 1/s: num(1/s)/den(1/s) = s^(deg den - deg num) * rev(num)/rev(den).
    ParamPoly n = num_.reversed();
    ParamPoly d = den_.reversed();
    int shift = den_.degree() - num_.degree();
    int vn = n.valuation();  // rev may still vanish at 0 if num had full degree... it cannot:
    int vd = d.valuation();  // rev(p)(0) = leading coeff of p != 0, so vn = vd = 0.
    (void)vn;
    (void)vd;
    out.lead_exp = shift;
    std::vector<BigRational> inv = series_inverse(d, nterms);
    for (int k = 0; k < nterms; ++k) {
        BigRational acc(0);
        for (int j = 0; j <= k && j <= n.degree(); ++j)
            acc += n.coeff(j) * inv[static_cast<size_t>(k - j)];
        out.coeff[static_cast<size_t>(k)] = acc;
    }
    // The leading coefficient is nonzero by construction, but lower-order
    // cancellation cannot occur here; keep lead_exp as computed.
    return out;
}

int ParamRat::valuation_at(const BigRational& t0) const {
    if (is_zero()) throw Error("valuation of the zero function");
    ParamPoly n = num_.compose_linear_shift(t0);
    ParamPoly d = den_.compose_linear_shift(t0);
    return n.valuation() - d.valuation();
}

int ParamRat::valuation_at_infinity() const {
    if (is_zero()) throw Error("valuation of the zero function");
    return den_.degree() - num_.degree();
}

std::string ParamRat::to_string(const std::string& name) const {
    if (is_polynomial()) return as_polynomial().to_string(name);
    std::ostringstream os;
    os << "(" << num_.to_string(name) << ")/(" << den_.to_string(name) << ")";
    return os.str();
}

}  // namespace pf
