#include "pf/elliptic.hpp"

#include <algorithm>

#include "pf/errors.hpp"

namespace pf {

namespace {

// Distance from point p to the segment [a, b] in the complex plane.
Real point_segment_distance(const Complex& p, const Complex& a, const Complex& b) {
    Complex ab = b - a;
    Real len2 = ab.abs2();
    if (len2 == 0) return abs(p - a);
    // Projection parameter clamped to the segment.
    Real s = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    if (s < 0) s = 0;
    if (s > 1) s = 1;
    return abs(p - (a + Complex(s) * ab));
}

struct ResolvedSegment {
    Complex a, b;
    bool singular_a = false;  // endpoint is a branch point
    bool singular_b = false;
    SegmentSpec::Init init = SegmentSpec::Init::Continue;
    std::vector<Complex> anchor_y;  // branch values at (j+1/2)/M along [a,b]
};

class ChainIntegrator {
public:
    ChainIntegrator(const LegendreFiber& fiber, const ChainSpec& chain,
                    const NumericOptions& opts)
        : fiber_(fiber), opts_(opts) {
        resolve(chain);
        build_anchors();
    }

    AJResult run(const ChainSpec& chain) {
        AJResult res;
        res.two_pi_i_power = chain.two_pi_i_power;
        res.sign = chain.sign;
        res.error_estimate = Real(0);
        QuadratureOptions qopts;
        qopts.points = opts_.quad_points;
        qopts.abs_tol = tolerance();
        for (const auto& seg : segments_) {
            if (abs(seg.b - seg.a) == 0) continue;
            QuadratureResult qr = integrate_01(
                [&seg, this]() { return make_integrand(seg); }, qopts);
            res.value += qr.value;
            res.error_estimate += qr.error_estimate;
        }
        return res;
    }

private:
    Real tolerance() const {
        Real tol(1);
        for (int k = 0; k < opts_.digits - 6; ++k) tol /= 10;
        return tol;
    }

    bool is_branch(const Complex& x) const {
        for (const auto& b : fiber_.branch_points())
            if (abs(x - b) < Real(1e-12)) return true;
        return false;
    }

    void resolve(const ChainSpec& chain) {
        if (chain.segments.empty()) return;
        Real slack = Real(opts_.path_delta) * Real(1e-9);
        for (const auto& spec : chain.segments) {
            ResolvedSegment seg;
            seg.a = spec.a.resolve(fiber_.t());
            seg.b = spec.b.resolve(fiber_.t());
            seg.singular_a = is_branch(seg.a);
            seg.singular_b = is_branch(seg.b);
            seg.init = spec.init;
            for (const auto& bp : fiber_.branch_points()) {
                if (abs(seg.a - bp) < Real(1e-12) || abs(seg.b - bp) < Real(1e-12)) continue;
                if (point_segment_distance(bp, seg.a, seg.b) + slack < Real(opts_.path_delta))
                    throw NumericCheckError(
                        "path too close to the branch point at x = " +
                        to_string(bp, 6) + " (clearance " +
                        std::to_string(opts_.path_delta) + " required)");
            }
            segments_.push_back(std::move(seg));
        }
        if (segments_.front().init == SegmentSpec::Init::Continue)
            throw NumericCheckError("the first chain segment must declare its branch");
    }

    // Continuous branch values along each segment; evaluation picks the
    // square root nearest to the closest anchor, so integrand calls are
    // independent of evaluation order.
    void build_anchors() {
        const int M = opts_.anchors;
        Complex prev_end;
        bool have_prev = false;
        for (auto& seg : segments_) {
            seg.anchor_y.reserve(static_cast<size_t>(M));
            Complex cur;
            for (int j = 0; j < M; ++j) {
                Real v = (Real(j) + Real(0.5)) / M;
                Complex s = sqrt(fiber_.q(seg.a + Complex(v) * (seg.b - seg.a)));
                if (j == 0) {
                    switch (seg.init) {
                        case SegmentSpec::Init::Principal:
                            cur = s;
                            break;
                        case SegmentSpec::Init::NegPrincipal:
                            cur = -s;
                            break;
                        case SegmentSpec::Init::Continue:
                            if (!have_prev)
                                throw NumericCheckError(
                                    "branch continuation without a previous segment");
                            cur = pick_nearer(s, prev_end);
                            break;
                    }
                } else {
                    cur = pick_nearer(s, cur);
                }
                seg.anchor_y.push_back(cur);
            }
            prev_end = seg.anchor_y.back();
            have_prev = true;
        }
    }

    static Complex pick_nearer(const Complex& s, const Complex& ref) {
        return ((s - ref).abs2() <= (s + ref).abs2()) ? s : -s;
    }

    Complex branch_sqrt(const ResolvedSegment& seg, const Real& v, const Complex& qx) const {
        int j = static_cast<int>(v * opts_.anchors);
        j = std::max(0, std::min(opts_.anchors - 1, j));
        return pick_nearer(sqrt(qx), seg.anchor_y[static_cast<size_t>(j)]);
    }

    Integrand make_integrand(const ResolvedSegment& seg) const {
        const Complex delta = seg.b - seg.a;
        const Real pi = real_pi();
        return [this, &seg, delta, pi](const Real& w) -> Complex {
            Real v, dvdw;
            if (seg.singular_a && seg.singular_b) {
                using boost::multiprecision::sin;
                Real s = sin(pi * w / 2), c = sin(pi * (1 - w) / 2);
                v = s * s;
                dvdw = pi * s * c;
            } else if (seg.singular_a) {
                v = w * w;
                dvdw = 2 * w;
            } else if (seg.singular_b) {
                Real u = 1 - w;
                v = 1 - u * u;
                dvdw = 2 * u;
            } else {
                v = w;
                dvdw = Real(1);
            }
            Complex x = seg.a + Complex(v) * delta;
            Complex y = branch_sqrt(seg, v, fiber_.q(x));
            return delta * Complex(dvdw) / y;
        };
    }

    const LegendreFiber& fiber_;
    NumericOptions opts_;
    std::vector<ResolvedSegment> segments_;
};

}  // namespace

LegendreFiber::LegendreFiber(const Complex& t, const NumericOptions& opts) : t_(t) {
    Real d0 = abs(t);
    Real d1 = abs(t - Complex(1));
    if (d0 < Real(opts.fiber_delta) * (1 - Real(1e-9)) ||
        d1 < Real(opts.fiber_delta) * (1 - Real(1e-9)))
        throw NumericCheckError("fiber parameter too close to the degenerate set {0, 1}");
    if (d0 > Real(opts.t_bound))
        throw NumericCheckError("fiber parameter exceeds the admissible bound");
    branch_ = {Complex(), Complex(1), t_};
}

Complex LegendreFiber::q(const Complex& x) const { return x * (x - Complex(1)) * (x - t_); }

Complex LegendreFiber::dq(const Complex& x) const {
    // 3x^2 - 2(1+t)x + t
    return Complex(3) * x * x - Complex(2) * (Complex(1) + t_) * x + t_;
}

Complex PathPoint::resolve(const Complex& t) const {
    switch (kind) {
        case Kind::Zero: return Complex();
        case Kind::One: return Complex(1);
        case Kind::Param: return t;
        case Kind::Fixed: return fixed;
    }
    return Complex();
}

ChainSpec chain_zero_to_one() {
    ChainSpec c;
    c.name = "torsion_0_to_1";
    c.segments = {{PathPoint::zero(), PathPoint::param(), SegmentSpec::Init::Principal},
                  {PathPoint::param(), PathPoint::one(), SegmentSpec::Init::Principal}};
    return c;
}

ChainSpec chain_zero_to_t() {
    ChainSpec c;
    c.name = "torsion_0_to_t";
    c.segments = {{PathPoint::zero(), PathPoint::param(), SegmentSpec::Init::Principal}};
    return c;
}

ChainSpec chain_closed_cycle() {
    ChainSpec c;
    c.name = "cycle_around_0_t";
    c.segments = {{PathPoint::zero(), PathPoint::param(), SegmentSpec::Init::Principal},
                  {PathPoint::param(), PathPoint::zero(), SegmentSpec::Init::NegPrincipal}};
    return c;
}

ChainSpec chain_section_x2() {
    ChainSpec c;
    c.name = "section_x2";
    c.segments = {
        {PathPoint::zero(), PathPoint::at(Complex(0, 0.8)), SegmentSpec::Init::Principal},
        {PathPoint::at(Complex(0, 0.8)), PathPoint::at(Complex(2, 0.8)),
         SegmentSpec::Init::Continue},
        {PathPoint::at(Complex(2, 0.8)), PathPoint::at(Complex(2)),
         SegmentSpec::Init::Continue}};
    return c;
}

AJResult truncated_aj(const LegendreFiber& fiber, const ChainSpec& chain,
                      const NumericOptions& opts) {
    PrecisionScope prec(opts.digits);
    ChainIntegrator integrator(fiber, chain, opts);
    return integrator.run(chain);
}

Complex period_full(const Complex& t, Cycle cycle, const NumericOptions& opts) {
    PrecisionScope prec(opts.digits);
    LegendreFiber fiber(t, opts);
    ChainSpec c;
    c.name = cycle == Cycle::AroundZeroT ? "cycle_a_half" : "cycle_b_half";
    if (cycle == Cycle::AroundZeroT)
        c.segments = {{PathPoint::zero(), PathPoint::param(), SegmentSpec::Init::Principal}};
    else
        c.segments = {{PathPoint::param(), PathPoint::one(), SegmentSpec::Init::Principal}};
    ChainIntegrator integrator(fiber, c, opts);
    return integrator.run(c).value;
}

}  // namespace pf
