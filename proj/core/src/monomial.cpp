#include "pf/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "pf/errors.hpp"

namespace pf {

int Monomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e.size() != o.e.size()) throw Error("monomial variable count mismatch");
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::divided_by_var(int i) const {
    Monomial r = *this;
    if (r.e[static_cast<size_t>(i)] <= 0) throw Error("monomial not divisible by variable");
    --r.e[static_cast<size_t>(i)];
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (e.size() != o.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < o.e[i]) return false;
    return true;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // Equal degree: earlier = lexicographically larger exponent vector.
    return e > o.e;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

namespace {
void enumerate(int nvars, int pos, int remaining, std::vector<int>& tmp,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        tmp[static_cast<size_t>(pos)] = remaining;
        out.emplace_back(tmp);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        tmp[static_cast<size_t>(pos)] = k;
        enumerate(nvars, pos + 1, remaining - k, tmp, out);
    }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars <= 0 || degree < 0) return {};
    std::vector<Monomial> out;
    std::vector<int> tmp(static_cast<size_t>(nvars), 0);
    enumerate(nvars, 0, degree, tmp, out);
    return out;
}

int monomial_index(const std::vector<Monomial>& sorted_list, const Monomial& m) {
    auto it = std::lower_bound(sorted_list.begin(), sorted_list.end(), m);
    if (it == sorted_list.end() || !(*it == m)) return -1;
    return static_cast<int>(it - sorted_list.begin());
}

}  // namespace pf
