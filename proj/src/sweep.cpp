#include "rhxi/sweep.hpp"

#include "rhxi/errors.hpp"
#include "rhxi/special.hpp"
#include "rhxi/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace rhxi::sweep {

using special::detail::mag_double;

std::vector<double> default_eps_grid() {
    std::vector<double> g;
    g.reserve(24);
    for (int i = 1; i <= 24; ++i)
        g.push_back(0.02 * static_cast<double>(i));
    return g;
}

SweepResult sweep(const std::vector<double>& eps_grid, const PrecisionContext& ctx,
                  const SweepOptions& opts) {
    if (eps_grid.empty())
        throw DomainError("sweep: eps grid is empty");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (!(eps_grid[i] > 0.0) || !(eps_grid[i] < 1.0))
            throw DomainError("sweep: eps values must lie in (0, 1)");
        if (i > 0 && !(eps_grid[i] > eps_grid[i - 1]))
            throw DomainError("sweep: eps grid must be strictly increasing");
    }
    const double tol = opts.tol > 0.0 ? opts.tol : ctx.target_tol();

    // One zero scan covering the tallest line, shared by every grid point.
    double t_scan = 0.0;
    for (double eps : eps_grid)
        if (eps < 0.5)
            t_scan = std::max(t_scan, quadrature::detail::choose_height(tol * M_PI * 0.5,
                                                                        0.5 + eps, false));
    std::vector<double> zero_ordinates;
    if (t_scan > 0.0) {
        auto zl = zeros::scan_zeros(std::min(t_scan, 200.0), 0.25, ctx);
        zero_ordinates = zl.ordinates_double();
    }

    const mpfr_prec_t p = ctx.working_prec();
    quadrature::LineOptions lo;
    lo.tol = tol;
    lo.known_zeros = &zero_ordinates;
    lo.extra = opts.extra;
    lo.verify_tail = opts.verify_tail;

    SweepResult out;
    out.eps_grid = eps_grid;
    out.values.reserve(eps_grid.size());
    out.err_bounds.reserve(eps_grid.size());
    out.t_used.reserve(eps_grid.size());
    out.failed.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        try {
            auto r = quadrature::i_of_eps(eps, ctx, lo);
            out.values.push_back(std::move(r.value));
            out.err_bounds.push_back(r.quad_err + r.tail_err);
            out.t_used.push_back(r.t_used);
            out.failed.push_back(false);
        } catch (const NearPoleOnContour&) {
            out.values.push_back(Real(0.0, p));
            out.err_bounds.push_back(std::numeric_limits<double>::infinity());
            out.t_used.push_back(0.0);
            out.failed.push_back(true);
        }
    }

    quadrature::LineOptions ref_opts = lo;
    ref_opts.known_zeros = nullptr;  // the sigma = 3/2 line is pole-free
    auto ref = quadrature::reference_value(ctx, ref_opts);
    out.reference = std::move(ref.value);
    out.reference_err = ref.quad_err + ref.tail_err;

    out.jumps = detect_jumps(out, opts.threshold);
    return out;
}

std::vector<JumpFlag> detect_jumps(const SweepResult& result, double threshold) {
    if (std::isnan(threshold) || !(threshold > 0.0))
        throw DomainError("detect_jumps: threshold must be positive (+inf disables)");
    std::vector<JumpFlag> flags;
    const std::size_t n = result.values.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (result.failed[i] || result.failed[i + 1])
            continue;
        Real delta = result.values[i] - result.values[i + 1];
        const double combined = result.err_bounds[i] + result.err_bounds[i + 1];
        const double mag = mag_double(abs(delta));
        if (mag > threshold * combined) {
            JumpFlag f;
            f.eps_lo = result.eps_grid[i];
            f.eps_hi = result.eps_grid[i + 1];
            f.delta = std::move(delta);
            f.significance = combined > 0.0 ? mag / combined
                                            : std::numeric_limits<double>::infinity();
            flags.push_back(std::move(f));
        }
    }
    return flags;
}

ResidueEstimate residue_from_jump(const JumpFlag& flag, const SweepResult& result) {
    const mpfr_prec_t p = flag.delta.prec();
    ResidueEstimate est;
    // Only the crossed abscissa is bracketed; the ordinate never shows up in
    // the line integrals.
    est.location = ComplexValue(Real(0.5 * (flag.eps_lo + flag.eps_hi) + 0.5, p), Real(0.0, p));
    est.location_resolved = false;
    // Crossing a simple pole with residue c shifts I by -2 Re c, so the jump
    // recovers the real part as -delta/2.
    est.residue = ComplexValue(flag.delta * -0.5, Real(0.0, p));
    est.method = ResidueMethod::JUMP_DELTA;
    for (std::size_t i = 0; i + 1 < result.eps_grid.size(); ++i)
        if (result.eps_grid[i] == flag.eps_lo && result.eps_grid[i + 1] == flag.eps_hi)
            est.err = 0.5 * (result.err_bounds[i] + result.err_bounds[i + 1]);
    return est;
}

namespace {

struct CirclePass {
    ComplexValue res;    // (r/K) sum f(rho + r e^{i theta}) e^{i theta}
    ComplexValue deriv;  // (1/(K r)) sum xi(rho + r e^{i theta}) e^{-i theta}
    double turns = 0.0;  // continuous-argument winding of xi around the circle
    double eval_err = 0.0;
};

CirclePass circle_pass(const ComplexValue& rho, const Real& r, long k,
                       const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    const Real two_pi = Real::pi(p) * 2.0;
    ComplexValue res_sum(p), deriv_sum(p);
    double turns = 0.0, prev_arg = 0.0, first_arg = 0.0, eval_err = 0.0;
    for (long j = 0; j < k; ++j) {
        Real theta = two_pi * static_cast<double>(j) / static_cast<double>(k);
        auto sc = sin_cos(theta);
        ComplexValue unit(sc.second, sc.first);
        ComplexValue s = rho + unit * r;
        auto den = special::xi(s, ctx);
        auto num = special::xi(s + s, ctx);
        res_sum += (num.value / den.value) * unit;
        deriv_sum += den.value * unit.conj();
        eval_err = std::max(eval_err, num.err_bound + den.err_bound);
        const double a = arg(den.value).to_double();
        if (j == 0) {
            first_arg = a;
        } else {
            double d = a - prev_arg;
            while (d > M_PI)
                d -= 2.0 * M_PI;
            while (d <= -M_PI)
                d += 2.0 * M_PI;
            turns += d;
        }
        prev_arg = a;
    }
    double d = first_arg - prev_arg;  // close the loop
    while (d > M_PI)
        d -= 2.0 * M_PI;
    while (d <= -M_PI)
        d += 2.0 * M_PI;
    turns += d;

    CirclePass out;
    const Real kk(static_cast<double>(k), p);
    out.res = res_sum * (r / kk);
    out.deriv = deriv_sum / (kk * r);
    out.turns = turns / (2.0 * M_PI);
    out.eval_err = eval_err;
    return out;
}

}  // namespace

ResidueEstimate residue_at(const ComplexValue& rho, const PrecisionContext& ctx,
                           double radius) {
    if (!rho.is_finite())
        throw DomainError("residue_at: rho must be finite");
    double r_d = radius;
    if (r_d == 0.0)
        r_d = 0.05;  // half the minimum zero gap at desk heights, with room
    if (!(r_d > 0.0) || r_d > 0.25)
        throw DomainError("residue_at: radius must lie in (0, 0.25]");

    const mpfr_prec_t p = ctx.working_prec();
    const Real r(r_d, p);
    // Two sample counts: the gap between them is the convergence estimate,
    // and trapezoid sums on a circle converge geometrically.
    CirclePass coarse = circle_pass(rho, r, 64, ctx);
    CirclePass fine = circle_pass(rho, r, 128, ctx);

    const long winding = std::lround(fine.turns);
    if (std::fabs(fine.turns - static_cast<double>(winding)) > 0.25 || winding != 1)
        throw CircleContainsMultipleZeros("winding of xi around the circle is " +
                                          std::to_string(fine.turns) +
                                          "; residue extraction needs exactly one zero inside");

    ResidueEstimate est;
    est.location = rho;
    est.location_resolved = true;
    est.residue = fine.res;
    est.method = ResidueMethod::CONTOUR_CIRCLE;
    est.err = mag_double(abs(fine.res - coarse.res)) + fine.eval_err * r_d;
    est.winding = static_cast<int>(winding);
    auto num_at_center = special::xi(rho + rho, ctx);
    est.cross_check = num_at_center.value / fine.deriv;
    return est;
}

quadrature::LineTerm inject_pole(const ComplexValue& c, const ComplexValue& s0) {
    if (!c.is_finite() || !s0.is_finite())
        throw DomainError("inject_pole: c and s0 must be finite");
    const double re0 = s0.re.to_double();
    const double im0 = s0.im.to_double();
    if (!(re0 > 0.5) || !(re0 < 1.0) || !(im0 > 0.0))
        throw DomainError("inject_pole: need 1/2 < Re s0 < 1 and Im s0 > 0");
    if (c.is_zero())
        return {};  // neutral handle: downstream treats empty functions as absent

    quadrature::LineTerm term;
    term.add = [c, s0](const ComplexValue& s, const PrecisionContext& ctx) -> ComplexValue {
        const mpfr_prec_t p = ctx.working_prec();
        const ComplexValue cc(c.re.to_prec(p), c.im.to_prec(p));
        const ComplexValue z0(s0.re.to_prec(p), s0.im.to_prec(p));
        // The mirrored partner keeps conjugate symmetry, so the two-sided
        // integral stays twice the half-line one.
        return cc / (s - z0) + cc.conj() / (s - z0.conj());
    };
    term.tail_re = [c, s0](double sigma, double t_from, const PrecisionContext& ctx) -> Real {
        const mpfr_prec_t p = ctx.working_prec();
        const Real one(1.0, p);
        const Real a = Real(sigma, p) - s0.re.to_prec(p);
        if (a.is_zero())
            throw NearPoleOnContour("injected pole sits exactly on the contour");
        const Real g = s0.im.to_prec(p);
        const Real cr = c.re.to_prec(p);
        const Real ci = c.im.to_prec(p);
        const Real t(t_from, p);
        // Antiderivative of Re[c/(s-s0) + conj c/(s-conj s0)] along the line:
        // F(t) = cr [atan((t-g)/a) + atan((t+g)/a)]
        //      + (ci/2) [ln(a^2+(t-g)^2) - ln(a^2+(t+g)^2)],
        // and F(inf) = cr * pi * sign(a).
        auto F = [&](const Real& tt) -> Real {
            Real dm = tt - g, dp = tt + g;
            Real at = atan2(dm / a, one) + atan2(dp / a, one);
            Real lg = log(a * a + dm * dm) - log(a * a + dp * dp);
            return cr * at + ci * 0.5 * lg;
        };
        Real limit = cr * Real::pi(p) * static_cast<double>(a.sign());
        return limit - F(t);
    };
    term.features = [re0, im0](double sigma) {
        const double w = std::clamp(std::fabs(sigma - re0), 1e-6, 1.0);
        return std::vector<std::pair<double, double>>{{im0, w}};
    };
    return term;
}

}  // namespace rhxi::sweep
