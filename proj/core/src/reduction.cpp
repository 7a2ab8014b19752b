#include "pf/reduction.hpp"

#include "pf/errors.hpp"

namespace pf {

bool ReducedClass::is_zero() const {
    for (const auto& slice : coords)
        for (const auto& c : slice)
            if (!c.is_zero()) return false;
    return true;
}

PoleForm omega_form(const FamilySpec& spec) {
    Monomial one = Monomial::unit(spec.nvars());
    return PoleForm{MultiPoly::term(one, ParamRat(1)), 1};
}

PoleForm gm_derivative(const PoleForm& pf, const FamilySpec& spec) {
    MultiPoly num = spec.f * pf.numerator.deriv_param() -
                    pf.numerator.scaled(ParamRat(pf.k)) * spec.f.deriv_param();
    return PoleForm{std::move(num), pf.k + 1};
}

ReduceStep reduce_once(const PoleForm& pf, JacobianData& jd) {
    if (pf.k < 2) throw Error("reduce_once: pole order must be at least 2");
    auto dec = jd.decompose(pf.numerator);

    ReduceStep out;
    out.remainder = std::move(dec.remainder);
    out.remainder_coords = std::move(dec.remainder_coords);

    const int nv = jd.spec().nvars();
    MultiPoly div(nv, pf.numerator.degree() - jd.spec().degree());
    for (int i = 0; i < nv; ++i) div += dec.A[static_cast<size_t>(i)].deriv_var(i);
    BigRational inv = BigRational(1) / BigRational(pf.k - 1);
    out.reduced = PoleForm{div.scaled(ParamRat(inv)), pf.k - 1};

    out.cert.k = pf.k;
    out.cert.scalar = ParamRat(-inv);
    out.cert.witness = std::move(dec.A);
    return out;
}

static bool witness_is_zero(const CertTerm& t) {
    for (const auto& a : t.witness)
        if (!a.is_zero()) return false;
    return true;
}

ReduceResult reduce_full(const PoleForm& pf, JacobianData& jd) {
    ReduceResult out;
    out.cls.coords.resize(static_cast<size_t>(pf.k));

    PoleForm cur = pf;
    while (cur.k >= 2) {
        ReduceStep step = reduce_once(cur, jd);
        out.cls.coords[static_cast<size_t>(cur.k) - 1] = std::move(step.remainder_coords);
        if (!witness_is_zero(step.cert)) out.cert.terms.push_back(std::move(step.cert));
        cur = std::move(step.reduced);
    }

    // Pole order 1: nothing reduces further; the whole numerator is its
    // own quotient coordinate vector.
    out.cls.coords[0] = jd.decompose(cur.numerator).remainder_coords;
    return out;
}

}  // namespace pf
