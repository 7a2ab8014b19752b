#include "pf/linsolve.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

namespace {

// One working row: polynomial entries plus the cleared right-hand side.
struct Row {
    std::vector<ParamPoly> e;

    bool is_zero_through(int upto) const {
        for (int j = 0; j < upto; ++j)
            if (!e[static_cast<size_t>(j)].is_zero()) return false;
        return true;
    }

    void strip_content() {
        BigInt num_gcd(0), den_lcm(1);
        const ParamPoly* lead = nullptr;
        for (const auto& p : e) {
            if (!p.is_zero() && lead == nullptr) lead = &p;
            for (const auto& x : p.coeffs()) {
                if (x == 0) continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
            }
        }
        if (lead == nullptr) return;
        BigRational scale = mk_rational(den_lcm, num_gcd);
        if (lead->leading() < 0) scale = -scale;
        for (auto& p : e) p = p.scaled(scale);
    }
};

}  // namespace

std::optional<std::vector<ParamRat>> solve_exact(const ExactMatrix& A,
                                                 const std::vector<ParamRat>& b,
                                                 SolveReport* report) {
    if (static_cast<int>(b.size()) != A.rows) throw Error("solve_exact: rhs size mismatch");
    const int m = A.rows, n = A.cols;

    // Clear every row (including the rhs) to primitive integer polynomials.
    std::vector<Row> rows(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        Row& r = rows[static_cast<size_t>(i)];
        r.e.resize(static_cast<size_t>(n) + 1);
        ParamPoly lcm_den(1);
        for (int j = 0; j <= n; ++j) {
            const ParamRat& v = j < n ? A.at(i, j) : b[static_cast<size_t>(i)];
            if (!v.is_zero()) lcm_den = ParamPoly::lcm(lcm_den, v.den());
        }
        for (int j = 0; j <= n; ++j) {
            const ParamRat& v = j < n ? A.at(i, j) : b[static_cast<size_t>(i)];
            if (!v.is_zero()) r.e[static_cast<size_t>(j)] = v.num() * lcm_den.divexact(v.den());
        }
        r.strip_content();
    }

    // Fraction-free elimination with minimal-degree pivoting.
    std::vector<int> pivot_row_of_col(static_cast<size_t>(n), -1);
    std::vector<int> pivot_cols;
    std::vector<bool> row_used(static_cast<size_t>(m), false);
    std::vector<bool> col_done(static_cast<size_t>(n), false);

    for (int step = 0; step < std::min(m, n); ++step) {
        // Pick the pivot: minimal t-degree entry among unused rows and
        // unfinished columns; ties broken by column then row index.
        int best_r = -1, best_c = -1, best_deg = -1;
        for (int j = 0; j < n; ++j) {
            if (col_done[static_cast<size_t>(j)]) continue;
            for (int i = 0; i < m; ++i) {
                if (row_used[static_cast<size_t>(i)]) continue;
                const ParamPoly& p = rows[static_cast<size_t>(i)].e[static_cast<size_t>(j)];
                if (p.is_zero()) continue;
                if (best_r == -1 || p.degree() < best_deg) {
                    best_r = i;
                    best_c = j;
                    best_deg = p.degree();
                }
            }
        }
        if (best_r == -1) break;

        row_used[static_cast<size_t>(best_r)] = true;
        col_done[static_cast<size_t>(best_c)] = true;
        pivot_row_of_col[static_cast<size_t>(best_c)] = best_r;
        pivot_cols.push_back(best_c);
        const Row& prow = rows[static_cast<size_t>(best_r)];
        const ParamPoly& piv = prow.e[static_cast<size_t>(best_c)];

        for (int i = 0; i < m; ++i) {
            if (row_used[static_cast<size_t>(i)]) continue;
            Row& r = rows[static_cast<size_t>(i)];
            const ParamPoly& x = r.e[static_cast<size_t>(best_c)];
            if (x.is_zero()) continue;
            ParamPoly factor = x;  // copy: r is modified below
            for (int j = 0; j <= n; ++j) {
                r.e[static_cast<size_t>(j)] =
                    r.e[static_cast<size_t>(j)] * piv - prow.e[static_cast<size_t>(j)] * factor;
            }
            r.strip_content();
        }
    }

    // Consistency: any untouched row must be entirely zero (its rhs too).
    for (int i = 0; i < m; ++i) {
        if (row_used[static_cast<size_t>(i)]) continue;
        const Row& r = rows[static_cast<size_t>(i)];
        bool coeffs_zero = r.is_zero_through(n);
        if (coeffs_zero && !r.e[static_cast<size_t>(n)].is_zero()) {
            if (report) {
                report->consistent = false;
                report->rank = static_cast<int>(pivot_cols.size());
                report->pivot_cols = pivot_cols;
                std::sort(report->pivot_cols.begin(), report->pivot_cols.end());
            }
            return std::nullopt;
        }
    }

    // Back substitution over Q(t), free variables pinned to zero.  A row
    // selected at step k has zeros in all earlier pivot columns, so the
    // system is triangular with respect to the selection order; solve in
    // reverse selection order.
    std::vector<ParamRat> x(static_cast<size_t>(n));
    for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
        int c = *it;
        const Row& r = rows[static_cast<size_t>(pivot_row_of_col[static_cast<size_t>(c)])];
        ParamRat acc(ParamPoly(r.e[static_cast<size_t>(n)]));
        for (int j = 0; j < n; ++j) {
            if (j == c || r.e[static_cast<size_t>(j)].is_zero()) continue;
            if (x[static_cast<size_t>(j)].is_zero()) continue;
            acc -= ParamRat(r.e[static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
        }
        x[static_cast<size_t>(c)] = acc / ParamRat(r.e[static_cast<size_t>(c)]);
    }

    if (report) {
        report->consistent = true;
        report->rank = static_cast<int>(pivot_cols.size());
        report->pivot_cols = pivot_cols;
        std::sort(report->pivot_cols.begin(), report->pivot_cols.end());
    }
    return x;
}

}  // namespace pf
