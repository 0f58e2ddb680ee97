#include "rhxi/quadrature.hpp"

#include "rhxi/special.hpp"
#include "rhxi/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rhxi::quadrature {

using special::detail::mag_double;

void ContourSpec::validate() const {
    if (!(sigma > 0.5) || sigma > 2.0)
        throw DomainError("ContourSpec: sigma must lie in (1/2, 2]");
    if (!(t_upper > 0.0) || !std::isfinite(t_upper))
        throw DomainError("ContourSpec: t_upper must be positive");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw DomainError("ContourSpec: tol must be positive");
    if (max_panels < 1)
        throw DomainError("ContourSpec: max_panels must be >= 1");
}

namespace detail {

// Decay models, calibrated on sigma in {0.6, 1.0, 1.5}, T in [10, 60] with a
// 4x margin over the worst sampled ratio (see the pointwise constants).
double f_point_model(double sigma, double t) {
    return 16.0 * std::pow(t, 0.5 * sigma) * std::exp(-M_PI * t / 4.0);
}

double xi_point_model(double sigma, double t) {
    return 2.0 * std::pow(t, 0.5 * sigma + 1.5) * std::exp(-M_PI * t / 4.0);
}

double xi_tail_bound(double sigma, double T) {
    return 4.0 * std::exp(-M_PI * T / 4.0) * std::pow(T, 0.5 * sigma + 2.0);
}

double choose_height(double tol_budget, double sigma, bool xi_line) {
    for (int t = 12; t <= 200; ++t) {
        double b = xi_line ? xi_tail_bound(sigma, t)
                           : 64.0 * std::exp(-M_PI * t / 4.0) * std::pow(t, 0.5 * sigma + 0.5);
        if (b <= tol_budget)
            return static_cast<double>(t);
    }
    throw PrecisionError("tail truncation cannot meet the tolerance below the height cap 200");
}

std::vector<double> build_breakpoints(double lo, double hi,
                                      const std::vector<std::pair<double, double>>& features,
                                      double base_width) {
    std::vector<double> pts{lo, hi};
    long base_n = std::max(1L, static_cast<long>(std::ceil((hi - lo) / base_width)));
    for (long j = 1; j < base_n; ++j)
        pts.push_back(lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(base_n));
    for (const auto& [c, w] : features) {
        if (!(w > 0.0) || c + 2.0 * base_width < lo || c - 2.0 * base_width > hi)
            continue;
        // Core panels of width w/2 across the spike, then geometric growth
        // until the base grid takes over.
        for (double x : {c - w, c - 0.5 * w, c, c + 0.5 * w, c + w})
            pts.push_back(x);
        for (double d = 2.0 * w; d < base_width; d *= 2.0) {
            pts.push_back(c - d);
            pts.push_back(c + d);
        }
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    out.reserve(pts.size());
    for (double x : pts) {
        if (x < lo || x > hi)
            continue;
        if (out.empty() || x - out.back() > 1e-9)
            out.push_back(x);
    }
    if (out.size() < 2 || out.back() < hi)
        out.push_back(hi);
    return out;
}

PanelSum integrate_panels(const RealIntegrand& fn, const std::vector<double>& breakpoints,
                          double tol, long max_panels, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    const auto& g12 = ctx.caches().gauss_rule(12);
    const auto& g24 = ctx.caches().gauss_rule(24);
    const double total_len = breakpoints.back() - breakpoints.front();

    auto rule_on = [&](const rhxi::detail::Caches::GaussRule& g, const Real& mid,
                       const Real& half) {
        Real acc(0.0, p);
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            Real v = fn(mid + half * g.nodes[i]);
            if (!v.is_finite())
                throw NonFiniteIntegrand("integrand returned a non-finite value inside a panel");
            acc += v * g.weights[i];
        }
        return acc * half;
    };

    // Explicit stack, leftmost panel on top: acceptance (and thus summation)
    // order is strictly left to right, independent of split history.
    std::vector<std::pair<double, double>> stack;
    for (std::size_t i = breakpoints.size() - 1; i-- > 0;)
        stack.emplace_back(breakpoints[i], breakpoints[i + 1]);

    Real sum(0.0, p);
    double err_sum = 0.0;
    long accepted = 0;
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        double w = b - a;
        double m = 0.5 * (a + b);
        Real mid(m, p);
        Real half(0.5 * w, p);
        Real q12 = rule_on(g12, mid, half);
        Real q24 = rule_on(g24, mid, half);
        double err_est = mag_double(abs(q24 - q12));
        bool splittable = (m > a && m < b);
        if (err_est <= 0.5 * tol * (w / total_len) || !splittable) {
            sum += q24;
            err_sum += err_est;
            ++accepted;
        } else {
            if (accepted + static_cast<long>(stack.size()) + 2 > max_panels)
                throw MaxPanelsExceeded("panel budget " + std::to_string(max_panels) +
                                        " exhausted before converging (spike on the contour?)");
            stack.emplace_back(m, b);
            stack.emplace_back(a, m);
        }
    }
    return {std::move(sum), err_sum, accepted};
}

}  // namespace detail

double tail_bound(double sigma, double T, const PrecisionContext&) {
    if (!(T >= 10.0))
        throw DomainError("tail_bound: requires T >= 10");
    return 64.0 * std::exp(-M_PI * T / 4.0) * std::pow(T, 0.5 * sigma + 0.5);
}

IntegralResult integrate_vertical(const RealIntegrand& integrand, const ContourSpec& spec,
                                  const PrecisionContext& ctx) {
    spec.validate();
    double base = std::min(2.0, spec.t_upper / 4.0);
    auto bps = detail::build_breakpoints(0.0, spec.t_upper, {}, base);
    auto ps = detail::integrate_panels(integrand, bps, spec.tol, spec.max_panels, ctx);
    return {std::move(ps.sum), ps.err, 0.0, spec.t_upper, ps.panels};
}

namespace {

void verify_f_model(double sigma, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    for (double t : {20.0, 30.0, 40.0}) {
        auto r = special::f_ratio(ComplexValue(Real(sigma, p), Real(t, p)), ctx);
        if (mag_double(abs(r.value)) > detail::f_point_model(sigma, t))
            throw CalibrationError("sampled |f| exceeds the decay model at sigma=" +
                                   std::to_string(sigma) + ", t=" + std::to_string(t));
    }
}

void verify_xi_model(double sigma, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    for (double t : {20.0, 30.0, 40.0}) {
        auto r = special::xi(ComplexValue(Real(sigma, p), Real(t, p)), ctx);
        if (mag_double(abs(r.value)) > detail::xi_point_model(sigma, t))
            throw CalibrationError("sampled |xi| exceeds the decay model at sigma=" +
                                   std::to_string(sigma) + ", t=" + std::to_string(t));
    }
}

// Shared engine for the f-ratio lines at sigma = 1/2 + eps.
IntegralResult f_line_integral(double sigma, const PrecisionContext& ctx,
                               const LineOptions& opts) {
    const mpfr_prec_t p = ctx.working_prec();
    const double tol = opts.tol > 0.0 ? opts.tol : ctx.target_tol();
    const double raw_budget = tol * M_PI * 0.5;  // budget on the un-normalized integral
    const double T =
        opts.t_override > 0.0 ? opts.t_override : detail::choose_height(raw_budget, sigma, false);
    if (opts.verify_tail)
        verify_f_model(sigma, ctx);

    const double eps = sigma - 0.5;
    std::vector<double> scanned;
    const std::vector<double>* zero_ordinates = opts.known_zeros;
    if (!zero_ordinates && eps < 0.5) {
        auto zl = zeros::scan_zeros(std::min(T, 200.0), 0.25, ctx);
        scanned = zl.ordinates_double();
        zero_ordinates = &scanned;
    }

    Real sigma_r(sigma, p);
    if (zero_ordinates) {
        // Probe the contour at each pole ordinate; NearZeroDivisor here means
        // the line is numerically indistinguishable from one through a pole.
        for (double g : *zero_ordinates) {
            if (g > T)
                break;
            try {
                (void)special::f_ratio(ComplexValue(sigma_r, Real(g, p)), ctx);
            } catch (const NearZeroDivisor&) {
                throw NearPoleOnContour("line Re s = " + std::to_string(sigma) +
                                        " passes too close to the pole near t = " +
                                        std::to_string(g) + " for this precision");
            }
        }
    }

    std::vector<std::pair<double, double>> feats;
    if (zero_ordinates && eps < 0.5) {
        for (double g : *zero_ordinates)
            if (g < T)
                feats.emplace_back(g, eps);
    }
    if (opts.extra && opts.extra->features)
        for (const auto& fw : opts.extra->features(sigma))
            feats.push_back(fw);

    double max_eval_err = 0.0;
    RealIntegrand fn = [&](const Real& t) -> Real {
        ComplexValue s(sigma_r, t);
        EvalResult r;
        try {
            r = special::f_ratio(s, ctx);
        } catch (const NearZeroDivisor&) {
            throw NearPoleOnContour("f has a pole on (or hugging) the contour near t = " +
                                    t.to_string(12));
        }
        if (r.err_bound > max_eval_err)
            max_eval_err = r.err_bound;
        if (opts.extra && opts.extra->add)
            return r.value.re + opts.extra->add(s, ctx).re;
        return r.value.re;
    };

    auto bps = detail::build_breakpoints(0.0, T, feats, 2.0);
    auto ps = detail::integrate_panels(fn, bps, raw_budget, opts.max_panels, ctx);

    Real raw = std::move(ps.sum);
    double extra_tail_err = 0.0;
    if (opts.extra && opts.extra->tail_re) {
        Real et = opts.extra->tail_re(sigma, T, ctx);
        extra_tail_err = mag_double(abs(et)) * std::ldexp(1.0, -static_cast<int>(p) + 6);
        raw += et;
    }
    Real pi_r = Real::pi(p);
    IntegralResult out{raw / pi_r, (ps.err + max_eval_err * T) / M_PI,
                       tail_bound(sigma, T, ctx) / M_PI + extra_tail_err, T, ps.panels};
    return out;
}

}  // namespace

IntegralResult i_of_eps(double eps, const PrecisionContext& ctx, const LineOptions& opts) {
    if (!(eps > 0.0) || eps > 1.0)
        throw DomainError("i_of_eps: eps must lie in (0, 1]");
    if (eps < opts.eps_guard)
        throw DomainError("i_of_eps: eps below the near-pole guard " +
                          std::to_string(opts.eps_guard));
    return f_line_integral(0.5 + eps, ctx, opts);
}

IntegralResult reference_value(const PrecisionContext& ctx, const LineOptions& opts) {
    return f_line_integral(1.5, ctx, opts);
}

IntegralResult j_of_eps(double eps, const PrecisionContext& ctx, const LineOptions& opts) {
    if (eps < 0.0 || eps > 1.0)
        throw DomainError("j_of_eps: eps must lie in [0, 1]");
    const mpfr_prec_t p = ctx.working_prec();
    const double tol = opts.tol > 0.0 ? opts.tol : ctx.target_tol();
    const double sigma = 0.5 + eps;
    const double T =
        opts.t_override > 0.0 ? opts.t_override : detail::choose_height(tol * 0.25, sigma, true);
    if (opts.verify_tail)
        verify_xi_model(sigma, ctx);

    Real sigma_r(sigma, p);
    double max_eval_err = 0.0;
    RealIntegrand fn = [&](const Real& t) -> Real {
        auto r = special::xi(ComplexValue(sigma_r, t), ctx);
        if (r.err_bound > max_eval_err)
            max_eval_err = r.err_bound;
        return r.value.re;
    };

    if (opts.two_sided_debug) {
        auto bps = detail::build_breakpoints(-T, T, {}, 2.0);
        auto ps = detail::integrate_panels(fn, bps, tol * 0.5, opts.max_panels, ctx);
        return {std::move(ps.sum), ps.err + max_eval_err * 2.0 * T,
                2.0 * detail::xi_tail_bound(sigma, T), 2.0 * T, ps.panels};
    }
    auto bps = detail::build_breakpoints(0.0, T, {}, 2.0);
    auto ps = detail::integrate_panels(fn, bps, tol * 0.25, opts.max_panels, ctx);
    return {ps.sum * 2.0, 2.0 * (ps.err + max_eval_err * T),
            2.0 * detail::xi_tail_bound(sigma, T), T, ps.panels};
}

Real closed_form_j(const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    Real pi = Real::pi(p);
    Real g = Real::gamma_real(Real(0.25, p));
    Real pref = pow(pi, Real(0.25, p)) / sqrt(Real(32.0, p));
    Real bracket = pow_si(g, 8) / (pow_si(pi, 4) * 32.0) - 3.0;
    return pref * g * bracket;
}

}  // namespace rhxi::quadrature
