#include "pf/chart.hpp"

#include <algorithm>
#include <sstream>

#include "pf/errors.hpp"

namespace pf {

namespace {

// x_i as a chart polynomial (the constant 1 when i is the chart variable).
ChartPoly chart_var(int nvars, int i, int chart) {
    if (i == chart) return ChartPoly::constant(nvars, ParamRat(1));
    Monomial m = Monomial::unit(nvars);
    m.e[static_cast<size_t>(i)] = 1;
    ChartPoly p(nvars);
    return p + ChartPoly::restrict_to_chart(MultiPoly::term(m, ParamRat(1)), chart);
}

}  // namespace

ChartPoly ChartPoly::constant(int nvars, const ParamRat& c) {
    ChartPoly p(nvars);
    p.insert_term(Monomial::unit(nvars), c);
    return p;
}

ChartPoly ChartPoly::restrict_to_chart(const MultiPoly& p, int chart) {
    ChartPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial affine = m;
        affine.e[static_cast<size_t>(chart)] = 0;
        r.insert_term(affine, c);
    }
    return r;
}

void ChartPoly::insert_term(const Monomial& m, const ParamRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChartPoly ChartPoly::operator+(const ChartPoly& o) const {
    ChartPoly r = *this;
    if (r.nvars_ == 0) r.nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

ChartPoly ChartPoly::operator-(const ChartPoly& o) const {
    return *this + o.scaled(ParamRat(-1));
}

ChartPoly ChartPoly::operator*(const ChartPoly& o) const {
    ChartPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.insert_term(ma * mb, ca * cb);
    return r;
}

ChartPoly ChartPoly::scaled(const ParamRat& c) const {
    ChartPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.insert_term(m, co * c);
    return r;
}

ChartPoly ChartPoly::deriv_var(int i) const {
    ChartPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m[i];
        if (e == 0) continue;
        r.insert_term(m.divided_by_var(i), c * ParamRat(e));
    }
    return r;
}

ChartPoly ChartPoly::deriv_param() const {
    ChartPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.insert_term(m, c.derivative());
    return r;
}

std::string ChartPoly::to_string(const std::vector<std::string>& names,
                                 const std::string& param) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string(param) << ")";
        if (m.degree() > 0) os << "*" << m.to_string(names);
    }
    return os.str();
}

ChartContext::ChartContext(const FamilySpec& spec, int chart)
    : spec_(spec), chart_(chart) {
    if (chart < 0 || chart >= spec.nvars())
        throw FamilyError("chart index " + std::to_string(chart) +
                          " out of range for " + std::to_string(spec.nvars()) +
                          " coordinates");
    fc_ = ChartPoly::restrict_to_chart(spec.f, chart);
    if (fc_.is_zero())
        throw FamilyError("the family polynomial vanishes identically on chart " +
                          std::to_string(chart));
    fc_dt_ = fc_.deriv_param();
    for (int u = 0; u < spec.nvars(); ++u) fc_dx_.push_back(fc_.deriv_var(u));
    powers_.push_back(ChartPoly::constant(spec.nvars(), ParamRat(1)));
    powers_.push_back(fc_);
}

const ChartPoly& ChartContext::fc_power(int e) {
    while (static_cast<int>(powers_.size()) <= e)
        powers_.push_back(powers_.back() * fc_);
    return powers_.at(static_cast<size_t>(e));
}

ChartFraction ChartContext::add(const ChartFraction& a, const ChartFraction& b) {
    int p = std::max(a.pow, b.pow);
    ChartFraction r;
    r.pow = p;
    r.num = a.num * fc_power(p - a.pow) + b.num * fc_power(p - b.pow);
    return r;
}

ChartFraction ChartContext::sub(const ChartFraction& a, const ChartFraction& b) {
    return add(a, ChartFraction{b.num.scaled(ParamRat(-1)), b.pow});
}

ChartFraction ChartContext::dt(const ChartFraction& a) {
    ChartFraction r;
    r.pow = a.pow + 1;
    r.num = a.num.deriv_param() * fc_ - a.num.scaled(ParamRat(a.pow)) * fc_dt_;
    return r;
}

ChartFraction ChartContext::dx(int u, const ChartFraction& a) {
    ChartFraction r;
    r.pow = a.pow + 1;
    r.num = a.num.deriv_var(u) * fc_ - a.num.scaled(ParamRat(a.pow)) * fc_dx(u);
    return r;
}

AffineForm certificate_to_affine(const Certificate& cert, ChartContext& ctx) {
    const int c = ctx.chart();
    const int nv = ctx.spec().nvars();
    AffineForm out;
    out.chart = c;
    for (const CertTerm& term : cert.terms) {
        if (static_cast<int>(term.witness.size()) != nv)
            throw CertificateError("certificate witness has " +
                                   std::to_string(term.witness.size()) +
                                   " components, expected " + std::to_string(nv));
        for (int u = 0; u < nv; ++u) {
            if (u == c) continue;
            const int i = std::min(c, u);
            const int j = std::max(c, u);
            // (-1)^(i+j+1) from expanding the double contraction in the
            // ascending wedge basis.
            const int sign = ((i + j) % 2 == 0) ? -1 : 1;
            ChartPoly wi = ChartPoly::restrict_to_chart(term.witness[static_cast<size_t>(i)], c);
            ChartPoly wj = ChartPoly::restrict_to_chart(term.witness[static_cast<size_t>(j)], c);
            ChartPoly num = chart_var(nv, i, c) * wj - chart_var(nv, j, c) * wi;
            num = num.scaled(term.scalar * ParamRat(sign));
            if (num.is_zero()) continue;
            ChartFraction fr{num, term.k - 1};
            auto it = out.comp.find(u);
            if (it == out.comp.end())
                out.comp.emplace(u, fr);
            else
                it->second = ctx.add(it->second, fr);
        }
    }
    return out;
}

ChartFraction exterior_derivative(const AffineForm& eta, ChartContext& ctx) {
    const int c = ctx.chart();
    ChartFraction total{ChartPoly(ctx.spec().nvars()), 0};
    for (const auto& [u, fr] : eta.comp) {
        // Position of dx_u among the ascending chart differentials decides
        // the wedge sign in d(h_u dx^(c,u)).
        const int pos = (u < c) ? u : u - 1;
        ChartFraction d = ctx.dx(u, fr);
        if (pos % 2 == 1) d.num = d.num.scaled(ParamRat(-1));
        total = ctx.add(total, d);
    }
    return total;
}

ChartFraction poleform_on_chart(const PoleForm& pf, ChartContext& ctx) {
    ChartPoly num = ChartPoly::restrict_to_chart(pf.numerator, ctx.chart());
    if (ctx.chart() % 2 == 1) num = num.scaled(ParamRat(-1));
    return ChartFraction{num, pf.k};
}

ChartFraction operator_on_omega(const DiffOperator& op, ChartContext& ctx) {
    const int nv = ctx.spec().nvars();
    if (op.is_zero()) return ChartFraction{ChartPoly(nv), 0};
    DiffOperator d = (op.basis() == OpBasis::Theta) ? from_theta_form(op) : op;
    const int r = d.order();
    // num_j / f_c^(j+1) is the j-th t-derivative of 1/f_c.
    std::vector<ChartPoly> num;
    num.push_back(ChartPoly::constant(nv, ParamRat(1)));
    for (int j = 1; j <= r; ++j)
        num.push_back(num.back().deriv_param() * ctx.fc() -
                      num.back().scaled(ParamRat(j)) * ctx.fc_dt());
    ChartFraction acc{ChartPoly(nv), r + 1};
    for (int j = 0; j <= r; ++j) {
        const ParamRat& a = d.coeff(j);
        if (a.is_zero()) continue;
        acc.num += (num[static_cast<size_t>(j)] * ctx.fc_power(r - j)).scaled(a);
    }
    if (ctx.chart() % 2 == 1) acc.num = acc.num.scaled(ParamRat(-1));
    return acc;
}

VerifyResult verify_certificate(const DiffOperator& op, const FamilySpec& spec,
                                const Certificate& cert, int chart) {
    ChartContext ctx(spec, chart);
    ChartFraction lhs = operator_on_omega(op, ctx);
    ChartFraction rhs = exterior_derivative(certificate_to_affine(cert, ctx), ctx);
    ChartFraction diff = ctx.sub(lhs, rhs);
    VerifyResult res;
    res.ok = diff.num.is_zero();
    res.chart = chart;
    res.residual = diff.num;
    return res;
}

}  // namespace pf
