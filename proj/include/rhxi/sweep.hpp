#pragma once

#include "rhxi/precision.hpp"
#include "rhxi/quadrature.hpp"

#include <vector>

namespace rhxi::sweep {

// A statistically significant difference between adjacent grid values.
struct JumpFlag {
    double eps_lo = 0.0;
    double eps_hi = 0.0;
    Real delta;           // I(eps_lo) - I(eps_hi)
    double significance = 0.0;  // |delta| / combined error bound
};

struct SweepResult {
    std::vector<double> eps_grid;
    std::vector<Real> values;        // I(eps); 0 for failed points
    std::vector<double> err_bounds;  // quad_err + tail_err per point
    std::vector<double> t_used;
    std::vector<bool> failed;        // NearPoleOnContour points, skipped downstream
    Real reference;                  // value on the pole-free line sigma = 3/2
    double reference_err = 0.0;
    std::vector<JumpFlag> jumps;
};

enum class ResidueMethod { CONTOUR_CIRCLE, JUMP_DELTA };

struct ResidueEstimate {
    ComplexValue location;
    bool location_resolved = false;  // JUMP_DELTA knows only the abscissa
    ComplexValue residue;
    ResidueMethod method = ResidueMethod::CONTOUR_CIRCLE;
    double err = 0.0;
    // CONTOUR_CIRCLE extras: the same circle data re-used two ways.
    ComplexValue cross_check;  // xi(2 rho) / xi'(rho), derivative from the circle
    int winding = 0;           // zeros of xi enclosed (always 1 when returned)
};

struct SweepOptions {
    double tol = 0.0;        // 0 -> ctx.target_tol()
    double threshold = 5.0;  // jump significance threshold
    bool verify_tail = false;
    const quadrature::LineTerm* extra = nullptr;  // injected term, if any
};

// eps = 0.02 .. 0.48 step 0.02.
std::vector<double> default_eps_grid();

// I(eps) across the grid plus the sigma=3/2 reference; jump detection
// applied with opts.threshold. Per-point NearPoleOnContour marks the point
// failed and the sweep continues.
SweepResult sweep(const std::vector<double>& eps_grid, const PrecisionContext& ctx,
                  const SweepOptions& opts = {});

// Flag adjacent pairs with |I(lo) - I(hi)| > threshold * (err_lo + err_hi).
std::vector<JumpFlag> detect_jumps(const SweepResult& result, double threshold = 5.0);

// Interpret a jump as the change of Re S across the crossed abscissa: the
// estimate's real part is the delta itself.
ResidueEstimate residue_from_jump(const JumpFlag& flag, const SweepResult& result);

// Residue of f at a pole rho (a zero of xi) by a contour-circle integral,
// with a winding-number check (CircleContainsMultipleZeros unless exactly
// one zero is enclosed) and the derivative-formula cross-check filled in.
// radius 0 selects the default min(0.05, half-gap at desk heights).
ResidueEstimate residue_at(const ComplexValue& rho, const PrecisionContext& ctx,
                           double radius = 0.0);

// Falsification harness: a handle adding c/(s-s0) plus the mirrored partner
// conj(c)/(s-conj(s0)) to f, with the exact analytic tail of its half-line
// integral. Requires 1/2 < Re s0 < 1 and Im s0 > 0. c = 0 yields an empty
// handle: sweeps with it are bit-identical to plain f.
quadrature::LineTerm inject_pole(const ComplexValue& c, const ComplexValue& s0);

}  // namespace rhxi::sweep
