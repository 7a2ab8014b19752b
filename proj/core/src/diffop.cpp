#include "pf/diffop.hpp"

#include <sstream>

#include "pf/errors.hpp"

namespace pf {

namespace {
const ParamRat kZero;

// Signed Stirling numbers of the first kind: falling(x, l) = sum_k s1(l,k) x^k.
std::vector<std::vector<BigRational>> stirling_first(int n) {
    std::vector<std::vector<BigRational>> s(static_cast<size_t>(n) + 1);
    s[0] = {BigRational(1)};
    for (int l = 1; l <= n; ++l) {
        s[static_cast<size_t>(l)].assign(static_cast<size_t>(l) + 1, BigRational(0));
        for (int k = 0; k <= l; ++k) {
            // s1(l,k) = s1(l-1,k-1) - (l-1) s1(l-1,k)
            BigRational v(0);
            if (k > 0) v += s[static_cast<size_t>(l - 1)][static_cast<size_t>(k - 1)];
            if (k <= l - 1) v -= BigRational(l - 1) * s[static_cast<size_t>(l - 1)][static_cast<size_t>(k)];
            s[static_cast<size_t>(l)][static_cast<size_t>(k)] = v;
        }
    }
    return s;
}

// Stirling numbers of the second kind: theta^j = sum_l S2(j,l) t^l d^l.
std::vector<std::vector<BigRational>> stirling_second(int n) {
    std::vector<std::vector<BigRational>> s(static_cast<size_t>(n) + 1);
    s[0] = {BigRational(1)};
    for (int j = 1; j <= n; ++j) {
        s[static_cast<size_t>(j)].assign(static_cast<size_t>(j) + 1, BigRational(0));
        for (int l = 1; l <= j; ++l) {
            // S2(j,l) = l*S2(j-1,l) + S2(j-1,l-1)
            BigRational v = s[static_cast<size_t>(j - 1)][static_cast<size_t>(l - 1)];
            if (l <= j - 1) v += BigRational(l) * s[static_cast<size_t>(j - 1)][static_cast<size_t>(l)];
            s[static_cast<size_t>(j)][static_cast<size_t>(l)] = v;
        }
    }
    return s;
}
}  // namespace

DiffOperator::DiffOperator(OpBasis basis, std::vector<ParamRat> ascending)
    : basis_(basis), c_(std::move(ascending)) {
    trim();
}

void DiffOperator::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOperator DiffOperator::identity() { return DiffOperator(OpBasis::Ddt, {ParamRat(1)}); }

DiffOperator DiffOperator::derivation(OpBasis basis) {
    return DiffOperator(basis, {ParamRat(), ParamRat(1)});
}

const ParamRat& DiffOperator::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(j)];
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    if (basis_ != o.basis_) throw Error("operator basis mismatch in addition");
    std::vector<ParamRat> c(std::max(c_.size(), o.c_.size()));
    for (size_t j = 0; j < c.size(); ++j)
        c[j] = coeff(static_cast<int>(j)) + o.coeff(static_cast<int>(j));
    return DiffOperator(basis_, std::move(c));
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
    return *this + o.scaled(ParamRat(-1));
}

DiffOperator DiffOperator::scaled(const ParamRat& s) const {
    std::vector<ParamRat> c = c_;
    for (auto& x : c) x *= s;
    return DiffOperator(basis_, std::move(c));
}

std::string DiffOperator::to_string(const std::string& name) const {
    if (c_.empty()) return "0";
    const char* dsym = basis_ == OpBasis::Ddt ? "D" : "theta";
    std::ostringstream os;
    bool first = true;
    for (int j = order(); j >= 0; --j) {
        const ParamRat& a = coeff(j);
        if (a.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << a.to_string(name) << ")";
        if (j >= 1) os << "*" << dsym;
        if (j >= 2) os << "^" << j;
    }
    return os.str();
}

DiffOperator op_multiply(const DiffOperator& a, const DiffOperator& b) {
    if (a.basis() != b.basis()) {
        DiffOperator bb = a.basis() == OpBasis::Theta ? to_theta_form(b) : from_theta_form(b);
        return op_multiply(a, bb);
    }
    if (a.is_zero() || b.is_zero()) return DiffOperator(a.basis(), {});

    // d^i o b by iterating the Leibniz step d o (sum c_j d^j) =
    // sum (c_j d^{j+1} + c_j' d^j); in the theta basis the step is
    // theta o (sum c_j theta^j) = sum (c_j theta^{j+1} + t c_j' theta^j).
    ParamRat tfac = a.basis() == OpBasis::Theta ? ParamRat(ParamPoly::monomial(1)) : ParamRat(1);
    std::vector<ParamRat> acc;  // result coefficients
    std::vector<ParamRat> cur = b.coeffs();  // d^i o b, starting at i = 0
    for (int i = 0; i <= a.order(); ++i) {
        if (!a.coeff(i).is_zero()) {
            if (acc.size() < cur.size()) acc.resize(cur.size());
            for (size_t j = 0; j < cur.size(); ++j) acc[j] += a.coeff(i) * cur[j];
        }
        if (i == a.order()) break;
        std::vector<ParamRat> next(cur.size() + 1);
        for (size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += cur[j];
            next[j] += tfac * cur[j].derivative();
        }
        cur = std::move(next);
    }
    return DiffOperator(a.basis(), std::move(acc));
}

DiffOperator to_theta_form(const DiffOperator& op) {
    if (op.basis() == OpBasis::Theta) return op;
    int r = op.order();
    if (r < 0) return DiffOperator(OpBasis::Theta, {});
    auto s1 = stirling_first(r);
    std::vector<ParamRat> out(static_cast<size_t>(r) + 1);
    ParamRat t_inv = ParamRat(ParamPoly(1), ParamPoly::monomial(1));
    ParamRat t_pow(1);  // t^-l, updated in the loop
    for (int l = 0; l <= r; ++l) {
        if (!op.coeff(l).is_zero()) {
            ParamRat base = op.coeff(l) * t_pow;
            for (int k = 0; k <= l; ++k) {
                const BigRational& c = s1[static_cast<size_t>(l)][static_cast<size_t>(k)];
                if (c != 0) out[static_cast<size_t>(k)] += base * ParamRat(c);
            }
        }
        t_pow *= t_inv;
    }
    return DiffOperator(OpBasis::Theta, std::move(out));
}

DiffOperator from_theta_form(const DiffOperator& op) {
    if (op.basis() == OpBasis::Ddt) return op;
    int r = op.order();
    if (r < 0) return DiffOperator(OpBasis::Ddt, {});
    auto s2 = stirling_second(r);
    std::vector<ParamRat> out(static_cast<size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) {
        if (op.coeff(j).is_zero()) continue;
        for (int l = 0; l <= j; ++l) {
            const BigRational& c = s2[static_cast<size_t>(j)][static_cast<size_t>(l)];
            if (c != 0)
                out[static_cast<size_t>(l)] +=
                    op.coeff(j) * ParamRat(ParamPoly::monomial(l, c));
        }
    }
    return DiffOperator(OpBasis::Ddt, std::move(out));
}

SymbolValue symbol(const DiffOperator& op) {
    SymbolValue s;
    s.order = op.order();
    if (s.order >= 0) s.leading = op.coeff(s.order);
    return s;
}

DiffOperator normalize(const DiffOperator& op, ParamRat* factor) {
    DiffOperator d = from_theta_form(op);
    if (d.is_zero()) throw Error("cannot normalize the zero operator");

    // Clear denominators.
    ParamPoly den_lcm(1);
    for (const auto& c : d.coeffs())
        if (!c.is_zero()) den_lcm = ParamPoly::lcm(den_lcm, c.den());
    std::vector<ParamPoly> polys(d.coeffs().size());
    for (size_t j = 0; j < polys.size(); ++j) {
        const ParamRat& c = d.coeff(static_cast<int>(j));
        if (!c.is_zero()) polys[j] = c.num() * den_lcm.divexact(c.den());
    }

    // Strip common polynomial factor, then common rational content.
    ParamPoly g;
    for (const auto& p : polys)
        if (!p.is_zero()) g = ParamPoly::gcd(g, p);
    if (g.degree() > 0)
        for (auto& p : polys)
            if (!p.is_zero()) p = p.divexact(g);
    BigInt num_gcd(0), den_l(1);
    for (const auto& p : polys)
        for (const auto& x : p.coeffs()) {
            if (x == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
            mpz_lcm(den_l.get_mpz_t(), den_l.get_mpz_t(), x.get_den().get_mpz_t());
        }
    BigRational scale = mk_rational(den_l, num_gcd);
    if (polys.back().leading() < 0) scale = -scale;
    std::vector<ParamRat> out(polys.size());
    for (size_t j = 0; j < polys.size(); ++j) out[j] = ParamRat(polys[j].scaled(scale));
    DiffOperator result(OpBasis::Ddt, std::move(out));

    if (factor) {
        int top = result.order();
        *factor = result.coeff(top) / d.coeff(top);
    }
    return result;
}

}  // namespace pf
