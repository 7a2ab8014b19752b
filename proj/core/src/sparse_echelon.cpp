#include "pf/sparse_echelon.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

namespace {

const ParamPoly* find_entry(const SparseVecPoly& v, int row) {
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const auto& p, int r) { return p.first < r; });
    if (it == v.end() || it->first != row) return nullptr;
    return &it->second;
}

// a*sa - b*sb, merged by row, zero entries dropped.
SparseVecPoly combine(const SparseVecPoly& a, const ParamPoly& sa, const SparseVecPoly& b,
                      const ParamPoly& sb) {
    SparseVecPoly out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, a[i].second * sa);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(b[j].second * sb));
            ++j;
        } else {
            ParamPoly e = a[i].second * sa - b[j].second * sb;
            if (!e.is_zero()) out.emplace_back(a[i].first, std::move(e));
            ++i;
            ++j;
        }
    }
    return out;
}

// Joint content of the pair (v, wit): scales both so all coefficients are
// integers with overall gcd 1.  Sign is normalized later against the pivot.
void strip_joint_content(SparseVecPoly& v, SparseVecPoly& wit) {
    BigInt num_gcd(0), den_lcm(1);
    auto feed = [&](const SparseVecPoly& vec) {
        for (const auto& [row, p] : vec) {
            (void)row;
            for (const auto& x : p.coeffs()) {
                if (x == 0) continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
            }
        }
    };
    feed(v);
    feed(wit);
    if (num_gcd == 0) return;  // both empty
    BigRational scale = mk_rational(den_lcm, num_gcd);
    if (scale == 1) return;
    for (auto& [row, p] : v) p = p.scaled(scale);
    for (auto& [row, p] : wit) p = p.scaled(scale);
}

void negate_pair(SparseVecPoly& v, SparseVecPoly& wit) {
    for (auto& [row, p] : v) p = -p;
    for (auto& [row, p] : wit) p = -p;
}

}  // namespace

SparseEchelon::InsertResult SparseEchelon::insert(SparseVecPoly v, SparseVecPoly wit) {
    // Reduce against existing columns in insertion order.  Later columns
    // have zero entries at earlier pivots, so one pass suffices.
    for (const Column& col : cols_) {
        const ParamPoly* e = find_entry(v, col.pivot_row);
        if (e == nullptr) continue;
        const ParamPoly* piv = find_entry(col.v, col.pivot_row);
        ParamPoly factor = *e;  // copy before v is rebuilt
        v = combine(v, *piv, col.v, factor);
        wit = combine(wit, *piv, col.wit, factor);
        strip_joint_content(v, wit);
    }
    if (v.empty()) return {false, -1};

    // Pivot: minimal t-degree entry, ties by smallest row index.
    int best = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i].second.degree() < v[static_cast<size_t>(best)].second.degree()) best = static_cast<int>(i);
    int pivot_row = v[static_cast<size_t>(best)].first;
    if (v[static_cast<size_t>(best)].second.leading() < 0) negate_pair(v, wit);

    Column col;
    col.pivot_row = pivot_row;
    col.v = std::move(v);
    col.wit = std::move(wit);
    pivot_of_row_[pivot_row] = static_cast<int>(cols_.size());
    cols_.push_back(std::move(col));
    return {true, pivot_row};
}

SparseEchelon::Reduction SparseEchelon::reduce(const SparseVecRat& query) const {
    Reduction out;
    std::map<int, ParamRat> work(query.begin(), query.end());
    for (const Column& col : cols_) {
        auto it = work.find(col.pivot_row);
        if (it == work.end() || it->second.is_zero()) continue;
        const ParamPoly* piv = find_entry(col.v, col.pivot_row);
        ParamRat lambda = it->second / ParamRat(*piv);
        for (const auto& [row, p] : col.v) {
            auto [wit_it, fresh] = work.emplace(row, ParamRat());
            wit_it->second -= lambda * ParamRat(p);
            if (wit_it->second.is_zero()) work.erase(wit_it);
        }
        for (const auto& [gen, p] : col.wit) {
            auto [g_it, fresh] = out.generator_coeffs.emplace(gen, ParamRat());
            g_it->second += lambda * ParamRat(p);
            if (g_it->second.is_zero()) out.generator_coeffs.erase(g_it);
        }
    }
    for (auto& [row, c] : work) {
        if (!c.is_zero()) out.remainder.emplace_back(row, std::move(c));
    }
    return out;
}

}  // namespace pf
