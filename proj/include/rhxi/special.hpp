#pragma once

#include "rhxi/precision.hpp"

namespace rhxi::special {

// Principal branch of log Gamma(z). Throws PoleError within
// 2^(-precision_bits/2) of a non-positive integer.
EvalResult log_gamma(const ComplexValue& z, const PrecisionContext& ctx);

// Riemann zeta via Euler-Maclaurin, remainder-bounded to the context
// tolerance on -6 <= Re s <= 6, |Im s| <= ~500. Throws PoleError at s=1,
// PrecisionError if no admissible truncation meets the tolerance.
EvalResult zeta(const ComplexValue& s, const PrecisionContext& ctx);

// (s-1)*zeta(s) formed before the 1/(s-1) cancellation, so it is finite and
// accurate through s=1 (value exactly 1 there).
EvalResult zeta_fused(const ComplexValue& s, const PrecisionContext& ctx);

// Completed xi(s) = (s-1) pi^(-s/2) Gamma(1+s/2) zeta(s). Entire; satisfies
// xi(s) = xi(1-s) and xi(conj s) = conj xi(s).
EvalResult xi(const ComplexValue& s, const PrecisionContext& ctx);

// f(s) = xi(2s)/xi(s). Throws NearZeroDivisor when
// |xi(s)| < 2^(-precision_bits/2) * |xi(2s)| (s is hugging a zeta zero).
EvalResult f_ratio(const ComplexValue& s, const PrecisionContext& ctx);

// |xi(s) - xi(1-s)|; zero up to rounding for every s.
Real xi_symmetry_residual(const ComplexValue& s, const PrecisionContext& ctx);

// Xi(t) = xi(1/2 + it), real-valued for real t. Returns the real part; the
// imaginary part of the evaluation stays below err_bound.
EvalResult xi_critical_line(const Real& t, const PrecisionContext& ctx);

namespace detail {
// |x| as a double, clamped to [1e-300, 1e300] so err arithmetic never
// over/underflows (0 stays 0).
double mag_double(const Real& x);
}  // namespace detail

}  // namespace rhxi::special
