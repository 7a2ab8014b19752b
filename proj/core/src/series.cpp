#include "pf/series.hpp"

#include <algorithm>
#include <sstream>

#include "pf/errors.hpp"

namespace pf {

bool PeriodSeries::all_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

std::optional<BigRational> PeriodSeries::coeff_at(const BigRational& exp) const {
    BigRational off = exp - lead_exp;
    if (!is_integer(off)) return std::nullopt;
    if (off < 0 || off >= length()) return std::nullopt;
    return c[static_cast<size_t>(off.get_num().get_ui())];
}

PeriodSeries PeriodSeries::scaled(const BigRational& s) const {
    PeriodSeries r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

PeriodSeries PeriodSeries::shifted(const BigRational& k) const {
    PeriodSeries r = *this;
    r.lead_exp += k;
    return r;
}

PeriodSeries PeriodSeries::trimmed() const {
    PeriodSeries r = *this;
    size_t skip = 0;
    while (skip < r.c.size() && r.c[skip] == 0) ++skip;
    if (skip > 0) {
        r.c.erase(r.c.begin(), r.c.begin() + static_cast<std::ptrdiff_t>(skip));
        r.lead_exp += BigRational(static_cast<long>(skip));
    }
    return r;
}

std::string PeriodSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < length(); ++i) {
        if (c[static_cast<size_t>(i)] == 0) continue;
        if (!first) os << " + ";
        first = false;
        BigRational e = lead_exp + BigRational(i);
        os << pf::to_string(c[static_cast<size_t>(i)]) << "*" << var << "^(" << pf::to_string(e)
           << ")";
    }
    if (first) os << "0";
    os << " + O(" << var << "^(" << pf::to_string(known_through() + 1) << "))";
    return os.str();
}

DiffOperator localize_at(const DiffOperator& op, const LocalPoint& p) {
    DiffOperator d = from_theta_form(op);
    if (!p.at_infinity) {
        // s = t - t0: d/dt = d/ds, coefficients composed with t = t0 + s.
        std::vector<ParamRat> out(d.coeffs().size());
        for (size_t j = 0; j < out.size(); ++j) {
            const ParamRat& a = d.coeff(static_cast<int>(j));
            if (a.is_zero()) continue;
            out[j] = ParamRat(a.num().compose_linear_shift(p.t0),
                              a.den().compose_linear_shift(p.t0));
        }
        return DiffOperator(OpBasis::Ddt, std::move(out));
    }
    // s = 1/t: d/dt = -s^2 d/ds, coefficients a_j(1/s).
    DiffOperator acc(OpBasis::Ddt, {});
    DiffOperator m(OpBasis::Ddt, {ParamRat(), ParamRat(ParamPoly::monomial(2, BigRational(-1)))});
    DiffOperator mpow = DiffOperator::identity();
    for (int j = 0; j <= d.order(); ++j) {
        const ParamRat& a = d.coeff(j);
        if (!a.is_zero()) {
            // a(1/s) = s^(deg den - deg num) rev(num)/rev(den)
            int shift = a.den().degree() - a.num().degree();
            ParamPoly num = a.num().reversed();
            ParamPoly den = a.den().reversed();
            if (shift >= 0)
                num = num.shifted(shift);
            else
                den = den.shifted(-shift);
            ParamRat as(num, den);
            acc = acc + mpow.scaled(as);
        }
        if (j < d.order()) mpow = op_multiply(m, mpow);
    }
    return acc;
}

AppliedSeries apply_to_series(const DiffOperator& op, const PeriodSeries& s) {
    if (s.c.empty()) throw Error("apply_to_series: empty series window");
    DiffOperator local = localize_at(op, s.point);
    if (local.is_zero()) {
        AppliedSeries out;
        out.series = PeriodSeries{s.point, BigRational(0), {BigRational(0)}};
        out.window_end = s.known_through();
        return out;
    }
    const int r = local.order();
    const int N = s.length() - 1;

    // Window arithmetic: term j contributes exponents from
    // lead - j + val(b_j) and is exact through lead + N - j + val(b_j).
    bool any = false;
    BigRational out_lead(0), window_end(0);
    std::vector<int> val(static_cast<size_t>(r) + 1, 0);
    for (int j = 0; j <= r; ++j) {
        const ParamRat& b = local.coeff(j);
        if (b.is_zero()) continue;
        // local's coefficients are already functions of the local variable.
        val[static_cast<size_t>(j)] = b.valuation_at(BigRational(0));
        BigRational lo = s.lead_exp - BigRational(j) + BigRational(val[static_cast<size_t>(j)]);
        BigRational hi = lo + BigRational(N);
        if (!any) {
            out_lead = lo;
            window_end = hi;
            any = true;
        } else {
            out_lead = std::min(out_lead, lo);
            window_end = std::min(window_end, hi);
        }
    }
    if (window_end < out_lead)
        throw Error("apply_to_series: series window too small for this operator");

    BigRational span = window_end - out_lead;
    int out_len = static_cast<int>(span.get_num().get_si()) + 1;
    std::vector<BigRational> acc(static_cast<size_t>(out_len), BigRational(0));

    for (int j = 0; j <= r; ++j) {
        const ParamRat& b = local.coeff(j);
        if (b.is_zero()) continue;
        // Falling-factorial image of the derivative: coefficient at
        // exponent e - j picks up prod_{u<j} (e - u).
        std::vector<BigRational> der(static_cast<size_t>(N) + 1);
        for (int i = 0; i <= N; ++i) {
            BigRational e = s.lead_exp + BigRational(i);
            BigRational f(1);
            for (int u = 0; u < j; ++u) f *= (e - BigRational(u));
            der[static_cast<size_t>(i)] = s.c[static_cast<size_t>(i)] * f;
        }
        // Laurent coefficients of b_j, long enough to fill the window.
        BigRational term_lead = s.lead_exp - BigRational(j) + BigRational(val[static_cast<size_t>(j)]);
        BigRational gap = window_end - term_lead;
        int need = static_cast<int>(gap.get_num().get_si()) + 1;
        auto L = b.laurent_at(BigRational(0), need);
        // acc[e] += sum_i der[i] * L[k] with e = (lead - j + L.lead + i + k) - out_lead
        for (int i = 0; i <= N; ++i) {
            if (der[static_cast<size_t>(i)] == 0) continue;
            BigRational base = s.lead_exp + BigRational(i) - BigRational(j) +
                               BigRational(L.lead_exp) - out_lead;
            long base_idx = base.get_num().get_si();  // integer by construction
            for (int k = 0; k < static_cast<int>(L.coeff.size()); ++k) {
                long idx = base_idx + k;
                if (idx < 0 || idx >= out_len) continue;
                acc[static_cast<size_t>(idx)] +=
                    der[static_cast<size_t>(i)] * L.coeff[static_cast<size_t>(k)];
            }
        }
    }

    AppliedSeries out;
    out.series = PeriodSeries{s.point, out_lead, std::move(acc)};
    out.window_end = window_end;
    return out;
}

}  // namespace pf
