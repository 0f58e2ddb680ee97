#include "rhxi/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace rhxi::special {

namespace detail {

double mag_double(const Real& x) {
    if (!x.is_finite())
        return 1e300;
    if (x.is_zero())
        return 0.0;
    long e = mpfr_get_exp(x.raw());
    if (e > 997)
        return 1e300;
    if (e < -997)
        return 1e-300;
    return std::fabs(x.to_double());
}

}  // namespace detail

namespace {

constexpr double kErrFloor = 2.3e-308;  // err_bound never reported as exactly 0
constexpr long kMaxPowerSum = 200000;
constexpr int kMaxTailTerms = 2000;

using detail::mag_double;

double clamp_err(double e) { return std::max(e, kErrFloor); }

// Exponent bound: |x| < 2^e. Very negative for zero.
long exp2_bound(const Real& x) {
    if (x.is_zero() || !x.is_finite())
        return x.is_finite() ? -1000000 : 1000000;
    return mpfr_get_exp(x.raw());
}

long exp2_bound(const ComplexValue& z) {
    return std::max(exp2_bound(z.re), exp2_bound(z.im)) + 1;
}

double ldexp_clamped(long e) {
    if (e >= 1020)
        return 1e307;
    if (e <= -1060)
        return kErrFloor;
    return std::ldexp(1.0, static_cast<int>(e));
}

Real pow2_real(long e, mpfr_prec_t p) { return pow_si(Real(2.0, p), e); }

// ---------------------------------------------------------------------------
// Euler-Maclaurin zeta core
// ---------------------------------------------------------------------------

struct EmParams {
    long n = 0;
    int m = 0;
    double log2_bound = 0.0;
};

// Remainder bound after M correction terms, in log2:
//   |R| <= |s+2M+1|/(sigma+2M+1) * |B_{2M+2}/(2M+2)!| * prod_{j=0}^{2M}|s+j| * N^{-sigma-2M-1}
// with log2|B_{2k}/(2k)!| <= 2 - 2k*log2(2pi).
EmParams choose_em_params(double sigma, double t, double target_log2) {
    const double log2_2pi = std::log2(2.0 * M_PI);
    long n = std::lround(std::max(16.0, 0.25 * (-target_log2) + 0.34 * t));
    while (n <= kMaxPowerSum) {
        double log2n = std::log2(static_cast<double>(n));
        int m_min = 1;
        while (sigma + 2.0 * m_min + 1.0 <= 0.5)
            ++m_min;
        double prodsum = 0.0;  // sum_{j=0}^{2M} log2|s+j|
        for (int j = 0; j <= 2 * m_min; ++j)
            prodsum += std::log2(std::hypot(sigma + j, t));
        double best = 1e9;
        int best_m = m_min;
        for (int m = m_min; m <= kMaxTailTerms; ++m) {
            if (m > m_min) {
                prodsum += std::log2(std::hypot(sigma + 2 * m - 1, t)) +
                           std::log2(std::hypot(sigma + 2 * m, t));
            }
            double lb = std::log2(std::hypot(sigma + 2 * m + 1, t)) -
                        std::log2(sigma + 2.0 * m + 1.0) + (2.0 - (2.0 * m + 2.0) * log2_2pi) +
                        prodsum - (sigma + 2.0 * m + 1.0) * log2n;
            if (lb < best) {
                best = lb;
                best_m = m;
            } else if (lb > best + 10.0) {
                break;  // past the minimum and climbing
            }
        }
        if (best <= target_log2)
            return {n, best_m, best};
        n = static_cast<long>(n * 1.3) + 1;
    }
    throw PrecisionError("zeta: no Euler-Maclaurin truncation meets the tolerance here");
}

struct EmOut {
    ComplexValue fused;   // (s-1)*zeta(s)
    double err_zeta;      // absolute bound for zeta(s)
    double err_fused;     // absolute bound for (s-1)*zeta(s)
};

EmOut em_core(const ComplexValue& s, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    if (!s.is_finite())
        throw DomainError("zeta: non-finite argument");
    const double sigma = s.re.to_double();
    const double t = std::fabs(s.im.to_double());
    if (sigma < -6.0 || sigma > 6.0 || t > 520.0)
        throw DomainError("zeta: argument outside supported rectangle [-6,6] x [-520,520]");

    const double slack = 6.0 + std::max(0.0, std::log2(1.0 + std::hypot(sigma, t)));
    EmParams prm = choose_em_params(sigma, t, -static_cast<double>(p) - slack);
    const long N = prm.n;
    const int M = prm.m;

    // Power sum: n^{-s} = exp(-s ln n) for primes only; composites are one
    // complex multiplication via the smallest-prime-factor split.
    auto spf = rhxi::detail::smallest_prime_factors(static_cast<int>(N));
    std::vector<ComplexValue> pw;
    pw.reserve(N);
    pw.emplace_back(p);             // n = 0 unused
    pw.emplace_back(1.0, 0.0, p);   // n = 1
    for (long n = 2; n < N; ++n) {
        if (spf[n] == n) {
            Real ln_n = log(Real(n, p));
            pw.push_back(exp(ComplexValue(-(s.re * ln_n), -(s.im * ln_n))));
        } else {
            pw.push_back(pw[n / spf[n]] * pw[spf[n]]);
        }
    }
    ComplexValue sum(p);
    double mag_sum = 1.0;
    for (long n = 1; n < N; ++n) {
        sum += pw[n];
        mag_sum += std::pow(static_cast<double>(n), -sigma);
    }

    Real n_real(N, p);
    Real ln_n = log(n_real);
    ComplexValue n_pow_1ms = exp(ComplexValue((1.0 - s.re) * ln_n, -(s.im * ln_n)));  // N^{1-s}
    ComplexValue half_n_pow_ms = (n_pow_1ms / n_real) * 0.5;                          // N^{-s}/2
    ComplexValue a = sum + half_n_pow_ms;

    // Correction terms: sum_{k=1}^{M} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    auto bern = ctx.caches().bernoulli_over_fact(M);
    Real inv_nn = Real(1.0, p) / (n_real * n_real);
    ComplexValue rising = s;                       // s(s+1)...(s+2k-2), k=1
    ComplexValue n_fac = (n_pow_1ms / n_real) / n_real;  // N^{-s-2k+1}, k=1
    ComplexValue tail(p);
    for (int k = 1; k <= M; ++k) {
        tail += (rising * n_fac) * (*bern)[k - 1];
        if (k < M) {
            rising = rising * (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
            n_fac = n_fac * inv_nn;
        }
    }

    ComplexValue s_minus_1 = s - 1.0;
    ComplexValue fused = s_minus_1 * (a + tail) + n_pow_1ms;

    // First-order error model: remainder bound + rounding on the dominant
    // magnitudes (the power sum can dwarf the result when sigma < 0).
    double mag_npow = mag_double(abs(n_pow_1ms));
    double mag = std::max({mag_sum, mag_npow, mag_double(abs(a)), 1.0});
    double rel_round = static_cast<double>(N + 10L * M + 64) * ldexp_clamped(-static_cast<long>(p));
    double err_zeta = ldexp_clamped(static_cast<long>(std::ceil(prm.log2_bound))) + rel_round * mag;
    double d1 = mag_double(abs(s_minus_1));
    double err_fused =
        err_zeta * d1 + mag_double(abs(fused)) * ldexp_clamped(-static_cast<long>(p) + 4);
    return {std::move(fused), clamp_err(err_zeta), clamp_err(err_fused)};
}

}  // namespace

EvalResult zeta_fused(const ComplexValue& s, const PrecisionContext& ctx) {
    EmOut out = em_core(s, ctx);
    return {std::move(out.fused), out.err_fused, {}};
}

EvalResult zeta(const ComplexValue& s, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    ComplexValue s_minus_1 = s - 1.0;
    Real dist = abs(s_minus_1);
    if (dist < pow2_real(-static_cast<long>(p) / 2, p))
        throw PoleError("zeta: pole at s = 1 (argument within 2^(-precision/2))");
    EmOut out = em_core(s, ctx);
    ComplexValue value = out.fused / s_minus_1;
    EvalResult r{std::move(value),
                 clamp_err(out.err_zeta +
                           mag_double(abs(out.fused)) / mag_double(dist) *
                               ldexp_clamped(-static_cast<long>(p) + 4)),
                 {}};
    if (dist < pow2_real(-static_cast<long>(p) / 4, p))
        r.flags.set(EvalFlag::NEAR_POLE);
    return r;
}

EvalResult log_gamma(const ComplexValue& z, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    if (!z.is_finite())
        throw DomainError("log_gamma: non-finite argument");

    // Pole proximity: distance to the nearest non-positive integer.
    if (z.re < 0.5) {
        Real nearest = floor(z.re + 0.5);
        if (nearest <= 0.0) {
            Real d = abs(ComplexValue(z.re - nearest, z.im));
            if (d < pow2_real(-static_cast<long>(p) / 2, p))
                throw PoleError("log_gamma: argument within 2^(-precision/2) of a pole at " +
                                nearest.to_string(8));
        }
    }

    // Shift z rightward until the Stirling series converges fast enough:
    // |w| >= R with Re w >= 1 keeps sec(arg(w)/2)^2 <= 2 in the tail bound.
    const double radius = 0.22 * static_cast<double>(p) + 6.0;
    Real radius_r(radius, p);
    ComplexValue w = z;
    ComplexValue prod(1.0, 0.0, p);
    double arg_sum = 0.0;
    long shifts = 0;
    while (abs(w) < radius_r || w.re < 1.0) {
        arg_sum += std::atan2(w.im.to_double(), w.re.to_double());
        prod *= w;
        w += ComplexValue(1.0, 0.0, p);
        if (++shifts > 100000)
            throw PrecisionError("log_gamma: recurrence shift failed to terminate");
    }

    // log of the shift product, branch-corrected so it matches the sum of
    // principal logs of the individual factors.
    ComplexValue log_prod(p);
    if (shifts > 0) {
        Real mag = abs(prod);
        if (mag.is_zero())
            throw PoleError("log_gamma: argument at a pole");
        Real principal_arg = arg(prod);
        double turns = std::round((arg_sum - principal_arg.to_double()) / (2.0 * M_PI));
        log_prod = ComplexValue(log(mag), principal_arg + Real::pi(p) * (2.0 * turns));
    }

    // Stirling: (w - 1/2) log w - w + ln(2pi)/2 + sum_k c_k w^{1-2k},
    // c_k = B_{2k}/(2k(2k-1)); remainder after k terms is bounded by the
    // first omitted term times 2^{k+1} on this half-plane.
    ComplexValue lw = log(w);
    Real half_ln_2pi = log(Real::pi(p) * 2.0) * 0.5;
    ComplexValue base = (w - 0.5) * lw - w + half_ln_2pi;

    ComplexValue iw = inv(w);
    ComplexValue iw2 = iw * iw;
    ComplexValue w_pow = iw;  // w^{-(2k-1)}
    ComplexValue series(p);
    const long target_e = exp2_bound(base) - static_cast<long>(p) - 6;
    int coeff_count = 48;
    auto coeffs = ctx.caches().stirling_coeffs(coeff_count);
    long trunc_e = 0;
    bool converged = false;
    int k = 1;
    const int k_cap = static_cast<int>(M_PI * radius) + 16;
    for (; k <= k_cap; ++k) {
        if (k > coeff_count) {
            coeff_count *= 2;
            coeffs = ctx.caches().stirling_coeffs(coeff_count);
        }
        ComplexValue term = w_pow * (*coeffs)[k - 1];
        trunc_e = exp2_bound(term) + (k + 1);
        if (trunc_e <= target_e) {
            converged = true;  // remainder bounded by this first omitted term
            break;
        }
        series += term;
        w_pow = w_pow * iw2;
    }
    if (!converged)
        throw PrecisionError("log_gamma: Stirling series failed to meet the tolerance");

    ComplexValue value = base + series - log_prod;
    long round_e = std::max({exp2_bound(base), exp2_bound(log_prod), exp2_bound(value)}) -
                   static_cast<long>(p) +
                   static_cast<long>(std::ceil(std::log2(static_cast<double>(shifts + 4 * k + 16))));
    double err = ldexp_clamped(trunc_e) + ldexp_clamped(round_e);
    return {std::move(value), clamp_err(err), {}};
}

EvalResult xi(const ComplexValue& s, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    EvalResult g = zeta_fused(s, ctx);
    ComplexValue half_s(s.re * 0.5, s.im * 0.5);
    EvalResult lg = log_gamma(half_s + 1.0, ctx);

    Real ln_pi = log(Real::pi(p));
    ComplexValue pref_log = lg.value - half_s * ln_pi;
    ComplexValue prefactor = exp(pref_log);
    ComplexValue value = prefactor * g.value;

    double pref_mag = mag_double(abs(prefactor));
    double g_mag = mag_double(abs(g.value));
    double pref_rel = lg.err_bound + mag_double(abs(pref_log)) *
                                         ldexp_clamped(-static_cast<long>(p) + 4);
    double err = pref_mag * g.err_bound + pref_mag * g_mag * pref_rel;
    EvalResult r{std::move(value), clamp_err(err), {}};
    r.flags.bits = static_cast<std::uint8_t>(g.flags.bits | lg.flags.bits);
    return r;
}

EvalResult f_ratio(const ComplexValue& s, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    EvalResult numer = xi(s * 2.0, ctx);
    EvalResult denom = xi(s, ctx);
    Real num_mag = abs(numer.value);
    Real den_mag = abs(denom.value);
    if (den_mag < num_mag * pow2_real(-static_cast<long>(p) / 2, p))
        throw NearZeroDivisor("f_ratio: |xi(s)| below 2^(-precision/2)*|xi(2s)| at s = " +
                              s.to_string(20));

    ComplexValue value = numer.value / denom.value;
    double rel = numer.err_bound / std::max(mag_double(num_mag), kErrFloor) +
                 denom.err_bound / std::max(mag_double(den_mag), kErrFloor) +
                 ldexp_clamped(-static_cast<long>(p) + 4);
    double err = clamp_err(mag_double(abs(value)) * rel);
    EvalResult r{std::move(value), err, {}};
    r.flags.bits = static_cast<std::uint8_t>(numer.flags.bits | denom.flags.bits);
    if (den_mag < num_mag * pow2_real(-static_cast<long>(p) / 4, p))
        r.flags.set(EvalFlag::NEAR_POLE);
    return r;
}

Real xi_symmetry_residual(const ComplexValue& s, const PrecisionContext& ctx) {
    ComplexValue reflected(1.0 - s.re, -s.im);
    return abs(xi(s, ctx).value - xi(reflected, ctx).value);
}

EvalResult xi_critical_line(const Real& t, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.working_prec();
    return xi(ComplexValue(Real(0.5, p), t.to_prec(p)), ctx);
}

}  // namespace rhxi::special
