#pragma once

#include "rhxi/precision.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace rhxi::quadrature {

// A vertical-line integration task.
struct ContourSpec {
    double sigma = 1.0;      // Re s of the line
    double t_upper = 40.0;   // truncation height
    double tol = 1e-10;      // absolute tolerance for the quadrature
    long max_panels = 4000;

    // sigma in (1/2, 2], t_upper > 0, tol > 0, max_panels >= 1.
    void validate() const;
};

struct IntegralResult {
    Real value;
    double quad_err = 0.0;  // panel-refinement estimate (plus evaluation error)
    double tail_err = 0.0;  // bound on the discarded tail beyond t_used
    double t_used = 0.0;
    long panels = 0;
};

using RealIntegrand = std::function<Real(const Real& t)>;

// Adaptive Gauss 12/24 panels over [0, spec.t_upper]; deterministic for
// fixed inputs (left-to-right summation). Throws MaxPanelsExceeded or
// NonFiniteIntegrand.
IntegralResult integrate_vertical(const RealIntegrand& integrand, const ContourSpec& spec,
                                  const PrecisionContext& ctx);

// An extra meromorphic term added to f on the line (the falsification
// harness plugs in here). `add` evaluates the term; `tail_re` is the exact
// value of its half-line tail integral_T^inf Re g(sigma+it) dt; `features`
// lists (ordinate, half-width) spikes for panel seeding.
struct LineTerm {
    std::function<ComplexValue(const ComplexValue& s, const PrecisionContext&)> add;
    std::function<Real(double sigma, double t_from, const PrecisionContext&)> tail_re;
    std::function<std::vector<std::pair<double, double>>(double sigma)> features;
};

struct LineOptions {
    double tol = 0.0;         // 0 -> ctx.target_tol()
    double t_override = 0.0;  // 0 -> smallest height passing the tail model
    double eps_guard = 0.01;  // reject eps below this unless lowered explicitly
    long max_panels = 4000;
    bool verify_tail = false;     // sample the decay model; CalibrationError on violation
    bool two_sided_debug = false; // j_of_eps only: integrate (-T, T) directly
    // Zero ordinates used to seed narrow panels around the f-pole spikes.
    // When absent they are scanned on demand for lines close to the critical
    // one (eps < 0.5).
    const std::vector<double>* known_zeros = nullptr;
    const LineTerm* extra = nullptr;
};

// I(eps) = (1/pi) * integral_0^inf Re f(1/2+eps+it) dt, truncated where the
// tail model clears tol/2. Throws NearPoleOnContour when the line hugs a
// zeta zero too closely for the working precision.
IntegralResult i_of_eps(double eps, const PrecisionContext& ctx, const LineOptions& opts = {});

// The pole-free comparison value (1/pi) * integral_0^inf Re f(3/2+it) dt.
IntegralResult reference_value(const PrecisionContext& ctx, const LineOptions& opts = {});

// integral_{-inf}^{inf} xi(1/2+eps+it) dt, computed as twice the half-line
// real-part integral (or directly over (-T, T) in debug mode). eps = 0 is
// allowed: xi is entire.
IntegralResult j_of_eps(double eps, const PrecisionContext& ctx, const LineOptions& opts = {});

// (pi^{1/4}/sqrt(32)) * Gamma(1/4) * [Gamma^8(1/4)/(32 pi^4) - 3]: the exact
// eps-independent value of j_of_eps.
Real closed_form_j(const PrecisionContext& ctx);

// Calibrated bound on |integral_T^inf Re f(sigma+it) dt|:
// 64 * e^(-pi T/4) * T^(sigma/2 + 1/2). Requires T >= 10.
double tail_bound(double sigma, double T, const PrecisionContext& ctx);

namespace detail {
// Bound on integral_T^inf |xi(sigma+it)| dt: 4 * e^(-pi T/4) * T^(sigma/2+2).
double xi_tail_bound(double sigma, double T);
// Pointwise decay models backing the two bounds (used by verification).
double f_point_model(double sigma, double t);
double xi_point_model(double sigma, double t);
// Smallest integer height >= 12 whose tail bound clears half the tolerance;
// throws PrecisionError past the desk-scale cap of 200.
double choose_height(double tol, double sigma, bool xi_line);

struct PanelSum {
    Real sum;
    double err;
    long panels;
};
// Core engine: adaptive G12/G24 over the given initial partition.
PanelSum integrate_panels(const RealIntegrand& fn, const std::vector<double>& breakpoints,
                          double tol, long max_panels, const PrecisionContext& ctx);
// Initial partition of [lo, hi]: base grid of width <= base_width plus
// geometrically graded refinement around each (center, half-width) feature,
// core panels capped at half-width/2.
std::vector<double> build_breakpoints(double lo, double hi,
                                      const std::vector<std::pair<double, double>>& features,
                                      double base_width);
}  // namespace detail

}  // namespace rhxi::quadrature
