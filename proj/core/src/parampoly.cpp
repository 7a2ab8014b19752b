#include "pf/parampoly.hpp"

#include <algorithm>
#include <sstream>

namespace pf {

namespace {
const BigRational kZero(0);

// Trial-division factorization of |n| (n != 0).  Returns prime -> exponent,
// or nullopt if a cofactor above cap*cap remains composite-or-prime but
// unresolved within the cap.
std::optional<std::vector<std::pair<BigInt, int>>> factor_with_cap(BigInt n, unsigned long cap) {
    std::vector<std::pair<BigInt, int>> out;
    n = abs(n);
    if (n == 0) return std::nullopt;
    for (BigInt p = 2; p <= cap && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        // Remaining cofactor: prime if below cap^2, otherwise give up.
        BigInt cap2 = BigInt(cap) * BigInt(cap);
        if (n <= cap2 || mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            out.emplace_back(n, 1);
        } else {
            return std::nullopt;
        }
    }
    return out;
}

std::optional<std::vector<BigInt>> divisors_with_cap(const BigInt& n, unsigned long cap) {
    auto fac = factor_with_cap(n, cap);
    if (!fac) return std::nullopt;
    std::vector<BigInt> divs{BigInt(1)};
    for (auto& [p, e] : *fac) {
        size_t base = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}
}  // namespace

ParamPoly::ParamPoly(const BigRational& constant) {
    if (constant != 0) c_.push_back(constant);
}

ParamPoly ParamPoly::monomial(int exp, const BigRational& c) {
    ParamPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(exp) + 1, kZero);
        p.c_.back() = c;
    }
    return p;
}

ParamPoly ParamPoly::from_coeffs(std::vector<BigRational> ascending) {
    ParamPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

void ParamPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRational& ParamPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const BigRational& ParamPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

int ParamPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    ParamPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

ParamPoly ParamPoly::scaled(const BigRational& s) const {
    if (s == 0) return {};
    ParamPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

ParamPoly ParamPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    ParamPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), kZero);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

ParamPoly ParamPoly::derivative() const {
    if (c_.size() <= 1) return {};
    ParamPoly r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    r.trim();
    return r;
}

BigRational ParamPoly::eval(const BigRational& t0) const {
    BigRational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
    return acc;
}

std::pair<ParamPoly, ParamPoly> ParamPoly::divmod(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    ParamPoly rem = *this;
    ParamPoly quot;
    int dd = divisor.degree();
    if (rem.degree() >= dd) quot.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, kZero);
    const BigRational& lead = divisor.leading();
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        BigRational q = rem.leading() / lead;
        quot.c_[static_cast<size_t>(shift)] = q;
        // rem -= q * t^shift * divisor
        for (size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[i + static_cast<size_t>(shift)] -= q * divisor.c_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

ParamPoly ParamPoly::divexact(const ParamPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

BigRational ParamPoly::content_signed() const {
    if (c_.empty()) return BigRational(1);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& x : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    BigRational content = mk_rational(num_gcd, den_lcm);
    if (c_.back() < 0) content = -content;
    return content;
}

ParamPoly ParamPoly::primitive_part() const {
    if (c_.empty()) return {};
    return scaled(BigRational(1) / content_signed());
}

ParamPoly ParamPoly::compose_linear_shift(const BigRational& t0) const {
    // Horner in (s + t0).
    ParamPoly acc;
    ParamPoly shift = from_coeffs({t0, BigRational(1)});
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * shift;
        acc += ParamPoly(c_[i]);
    }
    return acc;
}

ParamPoly ParamPoly::reversed() const {
    ParamPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

std::string ParamPoly::to_string(const std::string& name) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigRational& a = coeff(k);
        if (a == 0) continue;
        BigRational mag = a < 0 ? BigRational(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0) {
            os << pf::to_string(mag);
        } else {
            if (!unit) os << pf::to_string(mag) << "*";
            os << name;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        (void)q;
        x = y;
        // Renormalize to keep coefficient growth in check.
        y = r.primitive_part();
    }
    return x.primitive_part();
}

ParamPoly ParamPoly::lcm(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (a * b).divexact(gcd(a, b)).primitive_part();
}

std::vector<std::pair<ParamPoly, int>> ParamPoly::squarefree_factors() const {
    std::vector<std::pair<ParamPoly, int>> out;
    ParamPoly p = primitive_part();
    if (p.degree() < 1) return out;
    // Yun's algorithm.
    ParamPoly dp = p.derivative();
    ParamPoly a = gcd(p, dp);
    ParamPoly b = p.divexact(a);
    ParamPoly c = dp.divexact(a);
    ParamPoly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        ParamPoly f = gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f.primitive_part(), mult);
        b = b.divexact(f);
        c = d.divexact(f);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

std::vector<std::pair<BigRational, int>> ParamPoly::rational_roots(bool* complete) const {
    if (complete) *complete = true;
    std::vector<std::pair<BigRational, int>> roots;
    ParamPoly p = primitive_part();
    if (p.degree() < 1) return roots;

    // Strip t^v first: root 0 with multiplicity v.
    int v = p.valuation();
    if (v > 0) {
        roots.emplace_back(BigRational(0), v);
        std::vector<BigRational> rest(p.c_.begin() + v, p.c_.end());
        p = from_coeffs(std::move(rest));
    }
    if (p.degree() < 1) return roots;

    constexpr unsigned long kCap = 1000000;
    auto sq = p.squarefree_factors();
    for (auto& [factor, mult] : sq) {
        if (factor.degree() == 1) {
            // a1*t + a0 = 0
            roots.emplace_back(-factor.coeff(0) / factor.coeff(1), mult);
            continue;
        }
        BigInt c0 = factor.coeff(0).get_num();  // primitive integer poly
        BigInt cl = factor.leading().get_num();
        auto num_divs = divisors_with_cap(c0, kCap);
        auto den_divs = divisors_with_cap(cl, kCap);
        if (!num_divs || !den_divs) {
            if (complete) *complete = false;
            continue;
        }
        for (const auto& nd : *num_divs) {
            for (const auto& dd : *den_divs) {
                for (int sign = 0; sign < 2; ++sign) {
                    BigRational cand = mk_rational(sign ? -nd : nd, dd);
                    if (factor.eval(cand) == 0) {
                        bool seen = false;
                        for (auto& r : roots)
                            if (r.first == cand) seen = true;
                        if (!seen) roots.emplace_back(cand, mult);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<BigRational> series_inverse(const ParamPoly& p, int nterms) {
    if (p.coeff(0) == 0) throw Error("series inverse of a polynomial vanishing at 0");
    std::vector<BigRational> inv(static_cast<size_t>(nterms), BigRational(0));
    BigRational c0 = p.coeff(0);
    if (nterms <= 0) return inv;
    inv[0] = BigRational(1) / c0;
    for (int k = 1; k < nterms; ++k) {
        BigRational acc(0);
        for (int j = 1; j <= std::min(k, p.degree()); ++j) acc += p.coeff(j) * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -acc / c0;
    }
    return inv;
}

}  // namespace pf
