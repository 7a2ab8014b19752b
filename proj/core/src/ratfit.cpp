#include "pf/ratfit.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

namespace {

// Complex least squares via the normal equations with partial pivoting.
// Returns false on rank deficiency (pivot below tol relative to the
// largest diagonal entry).
bool solve_normal_equations(std::vector<std::vector<Complex>>& M, std::vector<Complex>& rhs,
                            std::vector<Complex>& x, const Real& rel_tol) {
    const size_t n = rhs.size();
    Real scale(0);
    for (size_t i = 0; i < n; ++i) scale = std::max(scale, abs(M[i][i]));
    if (scale == 0) return false;

    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (M[r][col].abs2() > M[piv][col].abs2()) piv = r;
        if (abs(M[piv][col]) < rel_tol * scale) return false;
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = col + 1; r < n; ++r) {
            Complex f = M[r][col] / M[col][col];
            for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    x.assign(n, Complex());
    for (size_t i = n; i-- > 0;) {
        Complex acc = rhs[i];
        for (size_t c = i + 1; c < n; ++c) acc -= M[i][c] * x[c];
        x[i] = acc / M[i][i];
    }
    return true;
}

Complex eval_poly(const std::vector<Complex>& coeffs, const Real& s) {
    Complex acc;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * Complex(s) + coeffs[k];
    return acc;
}

}  // namespace

BigRational nearest_rational(const Real& x, int max_denominator) {
    using boost::multiprecision::floor;
    BigRational best(0);
    Real best_err(-1);
    for (int q = 1; q <= max_denominator; ++q) {
        Real p_real = floor(x * q + Real(0.5));
        long p = static_cast<long>(p_real);
        BigRational cand(p, q);
        cand.canonicalize();
        Real err = x - real_from_rational(cand);
        if (err < 0) err = -err;
        if (best_err < 0 || err < best_err) {
            best_err = err;
            best = cand;
        }
    }
    return best;
}

RationalFitResult rational_fit(const std::vector<Real>& s, const std::vector<Complex>& g,
                               int num_degree, int den_degree, const FitOptions& opts) {
    PrecisionScope prec(opts.digits);
    if (s.size() != g.size())
        throw NumericCheckError("rational fit needs matching sample and value counts");
    const int unknowns = num_degree + 1 + den_degree;
    if (static_cast<int>(s.size()) < num_degree + den_degree + 2)
        throw NumericCheckError("rational fit needs at least num+den+2 samples");

    // Row i: num(s_i) - g_i * (den_low(s_i)) = g_i * s_i^den_degree, the
    // monic top term moved to the right-hand side.
    const size_t N = s.size();
    std::vector<std::vector<Complex>> A(N, std::vector<Complex>(static_cast<size_t>(unknowns)));
    std::vector<Complex> b(N);
    for (size_t i = 0; i < N; ++i) {
        Real pw(1);
        for (int k = 0; k <= num_degree; ++k) {
            A[i][static_cast<size_t>(k)] = Complex(pw);
            pw *= s[i];
        }
        pw = Real(1);
        for (int k = 0; k < den_degree; ++k) {
            A[i][static_cast<size_t>(num_degree + 1 + k)] = -g[i] * Complex(pw);
            pw *= s[i];
        }
        b[i] = g[i] * Complex(pw);  // pw = s_i^den_degree
    }

    // Normal equations M = A^H A, rhs = A^H b.
    std::vector<std::vector<Complex>> M(static_cast<size_t>(unknowns),
                                        std::vector<Complex>(static_cast<size_t>(unknowns)));
    std::vector<Complex> rhs(static_cast<size_t>(unknowns));
    for (size_t r = 0; r < static_cast<size_t>(unknowns); ++r) {
        for (size_t c = 0; c < static_cast<size_t>(unknowns); ++c) {
            Complex acc;
            for (size_t i = 0; i < N; ++i) acc += A[i][r].conj() * A[i][c];
            M[r][c] = acc;
        }
        Complex acc;
        for (size_t i = 0; i < N; ++i) acc += A[i][r].conj() * b[i];
        rhs[r] = acc;
    }

    Real rel_tol(1);
    for (int k = 0; k < opts.digits - 8; ++k) rel_tol /= 10;

    RationalFitResult res;
    res.num_degree = num_degree;
    res.den_degree = den_degree;
    std::vector<Complex> x;
    if (!solve_normal_equations(M, rhs, x, rel_tol)) {
        res.rank_deficient = true;
        res.residual = Real(-1);
        return res;
    }

    res.num_coeffs.assign(x.begin(), x.begin() + num_degree + 1);
    res.den_coeffs.assign(x.begin() + num_degree + 1, x.end());
    res.den_coeffs.push_back(Complex(1));  // monic

    Real r2(0);
    for (size_t i = 0; i < N; ++i) {
        Complex resid = eval_poly(res.num_coeffs, s[i]) - g[i] * eval_poly(res.den_coeffs, s[i]);
        r2 += resid.abs2();
    }
    using boost::multiprecision::sqrt;
    res.residual = sqrt(r2);

    for (const Complex& c : x) {
        NearestRational nr;
        nr.value = nearest_rational(c.re, opts.max_denominator);
        nr.error = abs(c - Complex(real_from_rational(nr.value)));
        res.nearest.push_back(std::move(nr));
    }
    return res;
}

FitScan rational_fit_scan(const std::vector<Real>& s, const std::vector<Complex>& g,
                          int max_num_degree, int max_den_degree, const Real& residual_tol,
                          const FitOptions& opts) {
    FitScan scan;
    bool have_best = false;
    for (int total = 0; total <= max_num_degree + max_den_degree; ++total) {
        for (int dd = std::min(total, max_den_degree); dd >= 0; --dd) {
            int nd = total - dd;
            if (nd > max_num_degree) continue;
            if (static_cast<int>(s.size()) < nd + dd + 2) continue;
            RationalFitResult fit = rational_fit(s, g, nd, dd, opts);
            if (fit.rank_deficient) continue;
            if (!have_best || fit.residual < scan.fit.residual) {
                scan.fit = fit;
                have_best = true;
            }
            if (fit.residual <= residual_tol) {
                scan.fit = fit;
                scan.found = true;
                return scan;
            }
        }
    }
    if (!have_best)
        throw NumericCheckError("every attempted fit degree was rank-deficient");
    return scan;
}

}  // namespace pf
