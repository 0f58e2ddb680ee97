#include "rhxi/zeros.hpp"

#include "rhxi/special.hpp"

#include <cmath>

namespace rhxi::zeros {

std::vector<double> ZeroList::ordinates_double() const {
    std::vector<double> out;
    out.reserve(ordinates.size());
    for (const auto& g : ordinates)
        out.push_back(g.to_double());
    return out;
}

double expected_zero_count(double t) {
    if (t < 2.0)
        return 0.0;
    double x = t / (2.0 * M_PI);
    return x * std::log(x / M_E) + 7.0 / 8.0;
}

namespace {

Real eval_xi_line(const Real& t, const PrecisionContext& ctx) {
    return special::xi_critical_line(t, ctx).value.re;
}

}  // namespace

std::pair<Real, Real> refine_zero(const Real& lo_in, const Real& hi_in,
                                  const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    Real lo = lo_in.to_prec(p);
    Real hi = hi_in.to_prec(p);
    if (!(lo < hi))
        throw DomainError("refine_zero: need lo < hi");
    Real f_lo = eval_xi_line(lo, ctx);
    Real f_hi = eval_xi_line(hi, ctx);
    if (f_lo.is_zero()) {
        Real r = pow_si(Real(2.0, p), -static_cast<long>(p) + 6);
        return {lo, r};
    }
    if (f_hi.is_zero()) {
        Real r = pow_si(Real(2.0, p), -static_cast<long>(p) + 6);
        return {hi, r};
    }
    if (f_lo.sign() == f_hi.sign())
        throw NoSignChange("refine_zero: Xi has the same sign at both bracket endpoints");

    // Stop once |Xi(mid)| is low enough that f_ratio's near-zero guard
    // triggers at the returned ordinate: 1/4 * 2^(-p/2) * |xi(1+2i*gamma)|.
    Real mid = (lo + hi) * 0.5;
    Real scale = abs(special::xi(ComplexValue(Real(1.0, p), mid * 2.0), ctx).value);
    Real target = scale * pow_si(Real(2.0, p), -static_cast<long>(p) / 2 - 2);
    // Width floor: a few ulps of the ordinate; below that bisection is noise.
    Real width_floor = max(abs(mid), Real(1.0, p)) * pow_si(Real(2.0, p), -static_cast<long>(p) + 4);

    bool last_was_secant = false;
    for (int it = 0; it < 2 * static_cast<int>(p); ++it) {
        Real width = hi - lo;
        if (width <= width_floor)
            break;
        Real x(p);
        bool use_secant = !last_was_secant;
        if (use_secant) {
            // false-position step; falls back to bisection if degenerate
            Real denom = f_hi - f_lo;
            if (!denom.is_zero()) {
                x = lo - f_lo * (width / denom);
                Real margin = width * 1e-3;
                if (!(x > lo + margin && x < hi - margin))
                    use_secant = false;
            } else {
                use_secant = false;
            }
        }
        if (!use_secant)
            x = (lo + hi) * 0.5;
        last_was_secant = use_secant;

        Real fx = eval_xi_line(x, ctx);
        if (abs(fx) < target) {
            lo = x;
            hi = x;
            break;
        }
        if (fx.is_zero())
            break;
        if (fx.sign() == f_lo.sign()) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
    }
    Real gamma = (lo + hi) * 0.5;
    Real radius = max((hi - lo) * 0.5, width_floor * 0.5);
    return {gamma, radius};
}

ZeroList scan_zeros(double t_max, double step, const PrecisionContext& ctx) {
    if (!(t_max > 0.0) || t_max > 200.0)
        throw DomainError("scan_zeros: t_max must be in (0, 200]");
    if (!(step > 0.0) || step > 0.5)
        throw DomainError("scan_zeros: step must be in (0, 0.5]");
    const mpfr_prec_t p = ctx.working_prec();

    ZeroList list;
    list.t_max = t_max;

    long n_steps = static_cast<long>(std::ceil(t_max / step));
    Real t_prev(0.0, p);
    Real f_prev = eval_xi_line(t_prev, ctx);
    for (long i = 1; i <= n_steps; ++i) {
        double td = std::min(i * step, t_max);
        Real t(td, p);
        Real f = eval_xi_line(t, ctx);
        if (f.is_zero() || f.sign() != f_prev.sign()) {
            auto [gamma, radius] = refine_zero(t_prev, t, ctx);
            list.ordinates.push_back(gamma);
            list.radii.push_back(radius);
        }
        t_prev = t;
        f_prev = f;
    }

    // Coarseness heuristics: count shortfall vs. the density estimate, or
    // neighbours closer than twice the step (pairs could hide elsewhere).
    double expected = expected_zero_count(t_max);
    if (static_cast<double>(list.ordinates.size()) < std::floor(expected - 1.5))
        list.step_too_coarse = true;
    for (std::size_t i = 1; i < list.ordinates.size(); ++i) {
        if ((list.ordinates[i] - list.ordinates[i - 1]) < 2.0 * step)
            list.step_too_coarse = true;
    }
    return list;
}

}  // namespace rhxi::zeros
