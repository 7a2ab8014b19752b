#pragma once
/*
 * Numeric chain integrals on the Legendre fibers y^2 = x(x-1)(x-t): full
 * periods and truncated Abel-Jacobi values of the holomorphic form dx/y
 * along polyline paths in the x-plane with continuous branch tracking.
 *
 * Conventions (documented, ours to fix):
 *  - period_full returns the integral over the x-segment between the two
 *    enclosed branch points, i.e. half the closed-loop value; with this
 *    normalization the A-cycle value equals pi * 2F1(1/2,1/2;1;t).
 *  - Branches: each segment either continues the previous segment's branch
 *    or (re)starts from the principal square root at its first sample; the
 *    lift is continued along per-segment anchor chains, which makes every
 *    evaluation order-independent.
 *  - Segments whose endpoint lies at a branch point get a quadratic (one
 *    end) or sin^2 (both ends) reparameterization so the 1/sqrt endpoint
 *    singularity integrates smoothly.
 */

#include <string>
#include <vector>

#include "pf/quadrature.hpp"
#include "pf/real.hpp"

namespace pf {

struct NumericOptions {
    int digits = 30;
    double fiber_delta = 0.05;  // admissible distance of t from {0, 1}
    double path_delta = 0.1;    // clearance of paths from branch points
    double t_bound = 100.0;     // |t| cap
    int quad_points = 40;
    int anchors = 64;  // branch-tracking anchors per segment
};

class LegendreFiber {
public:
    LegendreFiber(const Complex& t, const NumericOptions& opts);

    const Complex& t() const { return t_; }
    // x(x-1)(x-t)
    Complex q(const Complex& x) const;
    // dq/dx
    Complex dq(const Complex& x) const;
    const std::vector<Complex>& branch_points() const { return branch_; }

private:
    Complex t_;
    std::vector<Complex> branch_;
};

// Path endpoints: the three finite 2-torsion x-coordinates or a fixed
// complex number.
struct PathPoint {
    enum class Kind { Zero, One, Param, Fixed };
    Kind kind = Kind::Zero;
    Complex fixed;

    static PathPoint zero() { return {Kind::Zero, Complex()}; }
    static PathPoint one() { return {Kind::One, Complex()}; }
    static PathPoint param() { return {Kind::Param, Complex()}; }
    static PathPoint at(const Complex& x) { return {Kind::Fixed, x}; }

    Complex resolve(const Complex& t) const;
};

struct SegmentSpec {
    PathPoint a, b;
    // How the branch of y starts on this segment.
    enum class Init { Continue, Principal, NegPrincipal };
    Init init = Init::Continue;
};

struct ChainSpec {
    std::string name;
    std::vector<SegmentSpec> segments;
    // Exact symbolic prefactor tag of the truncated Abel-Jacobi map:
    // sign * (2*pi*i)^power times the reported raw integral.
    int two_pi_i_power = 0;
    int sign = -1;
};

// The implemented chain catalogue.
ChainSpec chain_zero_to_one();           // (0,0) -> (t,0) -> (1,0)
ChainSpec chain_zero_to_t();             // (0,0) -> (t,0)
ChainSpec chain_closed_cycle();          // around {0, t}, value 2*A(t)
ChainSpec chain_section_x2();            // (0,0) -> (2, y(2)), rectangle path

enum class Cycle { AroundZeroT, AroundTOne };

struct AJResult {
    Complex value;        // raw integral of dx/y along the chain
    Real error_estimate;  // summed quadrature refinement changes
    int two_pi_i_power = 0;
    int sign = -1;
};

// Integral of dx/y along the chain at the given fiber.
AJResult truncated_aj(const LegendreFiber& fiber, const ChainSpec& chain,
                      const NumericOptions& opts);

// Normalized cycle value (see file comment).  AroundZeroT integrates over
// [0, t] on the positive branch; AroundTOne over [t, 1] on the principal
// branch (value -i * pi * 2F1(1/2,1/2;1;1-t) for real 0 < t < 1).
Complex period_full(const Complex& t, Cycle cycle, const NumericOptions& opts);

}  // namespace pf
