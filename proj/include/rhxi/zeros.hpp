#pragma once

#include "rhxi/precision.hpp"

#include <utility>
#include <vector>

namespace rhxi::zeros {

// Critical-line zero ordinates with verified sign-change enclosures for
// Xi(t) = xi(1/2 + it).
struct ZeroList {
    std::vector<Real> ordinates;  // strictly increasing gamma_n > 0
    std::vector<Real> radii;      // bracket half-widths
    double t_max = 0.0;
    // Set when the sign-change count falls short of the density estimate or
    // two zeros landed closer than twice the scan step.
    bool step_too_coarse = false;

    std::vector<double> ordinates_double() const;
};

// Scan [0, t_max] for sign changes of Xi at the given resolution and refine
// each bracket. Requires t_max <= 200 and 0 < step <= 0.5.
ZeroList scan_zeros(double t_max, double step, const PrecisionContext& ctx);

// Bracketed secant/bisection hybrid. Requires Xi(lo) and Xi(hi) to differ in
// sign (else NoSignChange). Refines well past the 2^(-precision_bits/4)
// width contract, until |Xi| clears the f_ratio near-zero threshold, so the
// returned ordinate is usable as a pole location downstream.
std::pair<Real, Real> refine_zero(const Real& lo, const Real& hi, const PrecisionContext& ctx);

// Riemann-von Mangoldt main term: expected zero count below t.
double expected_zero_count(double t);

}  // namespace rhxi::zeros
