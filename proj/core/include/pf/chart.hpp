#pragma once
/*
 * Affine-chart calculus for certificate verification.  In the chart
 * x_c = 1 the projective volume contraction restricts to honest
 * differential forms whose coefficients are polynomials divided by powers
 * of the chart polynomial f_c = f|_{x_c=1}; the inhomogeneous identity
 * D(V/f) = d(beta) becomes an equality of such fractions and is checked
 * by exact cross-multiplied comparison.
 */

#include <map>

#include "pf/reduction.hpp"

namespace pf {

// Non-homogeneous polynomial on the chart (exponent of the chart variable
// is always zero), with rational-in-t coefficients.
class ChartPoly {
public:
    ChartPoly() = default;
    explicit ChartPoly(int nvars) : nvars_(nvars) {}
    static ChartPoly constant(int nvars, const ParamRat& c);
    // Restriction of a homogeneous polynomial to the chart.
    static ChartPoly restrict_to_chart(const MultiPoly& p, int chart);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, ParamRat>& terms() const { return terms_; }

    ChartPoly operator+(const ChartPoly& o) const;
    ChartPoly operator-(const ChartPoly& o) const;
    ChartPoly operator*(const ChartPoly& o) const;
    ChartPoly& operator+=(const ChartPoly& o) { return *this = *this + o; }
    ChartPoly& operator-=(const ChartPoly& o) { return *this = *this - o; }
    bool operator==(const ChartPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    ChartPoly scaled(const ParamRat& c) const;
    ChartPoly deriv_var(int i) const;
    ChartPoly deriv_param() const;

    std::string to_string(const std::vector<std::string>& names,
                          const std::string& param = "t") const;

private:
    void insert_term(const Monomial& m, const ParamRat& c);
    int nvars_ = 0;
    std::map<Monomial, ParamRat> terms_;
};

// num / f_c^pow.
struct ChartFraction {
    ChartPoly num;
    int pow = 0;
};

// Shared chart data: the chart polynomial, its derivatives, and a power
// cache used to align fraction denominators.
class ChartContext {
public:
    ChartContext(const FamilySpec& spec, int chart);

    const FamilySpec& spec() const { return spec_; }
    int chart() const { return chart_; }
    const ChartPoly& fc() const { return fc_; }
    const ChartPoly& fc_power(int e);
    const ChartPoly& fc_dt() const { return fc_dt_; }
    const ChartPoly& fc_dx(int u) const { return fc_dx_.at(static_cast<size_t>(u)); }

    ChartFraction add(const ChartFraction& a, const ChartFraction& b);
    ChartFraction sub(const ChartFraction& a, const ChartFraction& b);
    // d/dt and d/dx_u on fractions (quotient rule, denominator power +1).
    ChartFraction dt(const ChartFraction& a);
    ChartFraction dx(int u, const ChartFraction& a);

private:
    FamilySpec spec_;
    int chart_;
    ChartPoly fc_;
    ChartPoly fc_dt_;
    std::vector<ChartPoly> fc_dx_;
    std::vector<ChartPoly> powers_;
};

// The (n-1)-form eta in the chart: coefficient of the basis element that
// omits dx_chart and dx_u, indexed by u.
struct AffineForm {
    int chart = 0;
    std::map<int, ChartFraction> comp;
};

// eta = sum_terms scalar * iota_W(V) / f^(k-1), restricted to the chart.
AffineForm certificate_to_affine(const Certificate& cert, ChartContext& ctx);

// Exterior derivative of the (n-1)-form, as the coefficient of the chart
// volume element (ascending wedge of the affine differentials).
ChartFraction exterior_derivative(const AffineForm& eta, ChartContext& ctx);

// Chart value of P*V/f^k: (-1)^chart * P|_chart / f_c^k.
ChartFraction poleform_on_chart(const PoleForm& pf, ChartContext& ctx);

// Chart value of D(V/f): (-1)^chart * sum_j a_j d^j/dt^j (1/f_c).
ChartFraction operator_on_omega(const DiffOperator& op, ChartContext& ctx);

struct VerifyResult {
    bool ok = false;
    int chart = 0;
    // Cross-multiplied residual numerator; zero iff ok.
    ChartPoly residual;
};

// Checks D(V/f) = d(beta) exactly in the chart.
VerifyResult verify_certificate(const DiffOperator& op, const FamilySpec& spec,
                                const Certificate& cert, int chart);

}  // namespace pf
