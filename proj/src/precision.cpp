#include "rhxi/precision.hpp"

#include <cmath>

namespace rhxi {

static void check_invariants(int precision_bits, double target_tol, int guard_bits) {
    if (precision_bits < 64)
        throw DomainError("precision_bits must be >= 64");
    if (guard_bits < 32)
        throw DomainError("guard_bits must be >= 32");
    if (!(target_tol > 0.0) || !std::isfinite(target_tol))
        throw DomainError("target_tol must be a positive finite number");
    // The tolerance must leave guard_bits of headroom at the working precision.
    double min_tol = std::ldexp(1.0, guard_bits - precision_bits);
    if (min_tol > 0.0 && target_tol < min_tol)
        throw DomainError("target_tol too small for precision_bits (needs guard_bits of headroom)");
}

PrecisionContext::PrecisionContext(int precision_bits, double target_tol, int guard_bits)
    : precision_bits_(precision_bits), target_tol_(target_tol), guard_bits_(guard_bits) {
    check_invariants(precision_bits, target_tol, guard_bits);
    caches_ = std::make_shared<detail::Caches>(static_cast<mpfr_prec_t>(precision_bits));
}

PrecisionContext::PrecisionContext(int bits, double tol, int guard,
                                   std::shared_ptr<detail::Caches> caches)
    : precision_bits_(bits), target_tol_(tol), guard_bits_(guard), caches_(std::move(caches)) {
    check_invariants(bits, tol, guard);
}

PrecisionContext PrecisionContext::for_tolerance(double target_tol, int guard_bits) {
    if (!(target_tol > 0.0) || !std::isfinite(target_tol))
        throw DomainError("target_tol must be a positive finite number");
    int digits_bits = static_cast<int>(std::ceil(-std::log2(target_tol)));
    if (digits_bits < 0)
        digits_bits = 0;
    int bits = digits_bits + guard_bits;
    if (bits < 64)
        bits = 64;
    return PrecisionContext(bits, target_tol, guard_bits);
}

PrecisionContext PrecisionContext::with_target_tol(double tol) const {
    return PrecisionContext(precision_bits_, tol, guard_bits_, caches_);
}

namespace detail {

void Caches::grow_bernoulli_locked(int count) {
    // B_{2k}/(2k)! = (-1)^{k+1} * 2 * zeta(2k) / (2pi)^{2k}, with zeta at even
    // integers straight from mpfr. The Stirling coefficient B_{2k}/(2k(2k-1))
    // is the same value times (2k-2)!.
    auto bern = std::make_shared<std::vector<Real>>(*bern_over_fact_);
    auto stir = std::make_shared<std::vector<Real>>(*stirling_coeffs_);
    mpfr_prec_t p = prec_ + 32;
    Real two_pi = Real::pi(p) * 2.0;
    for (int k = static_cast<int>(bern->size()) + 1; k <= count; ++k) {
        Real z = Real::zeta_ui(2 * static_cast<unsigned long>(k), p);
        Real v = (z * 2.0) / pow_si(two_pi, 2 * k);
        if (k % 2 == 0)
            v = -v;
        bern->push_back(v.to_prec(prec_));
        Real fact = Real::factorial_ui(2 * static_cast<unsigned long>(k) - 2, p);
        stir->push_back((v * fact).to_prec(prec_));
    }
    bern_over_fact_ = std::move(bern);
    stirling_coeffs_ = std::move(stir);
}

std::shared_ptr<const std::vector<Real>> Caches::bernoulli_over_fact(int count) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(bern_over_fact_->size()) < count)
        grow_bernoulli_locked(count);
    return bern_over_fact_;
}

std::shared_ptr<const std::vector<Real>> Caches::stirling_coeffs(int count) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(stirling_coeffs_->size()) < count)
        grow_bernoulli_locked(count);
    return stirling_coeffs_;
}

// Legendre P_n and P_n' at x by the three-term recurrence.
static void legendre_pair(int n, const Real& x, Real& pn, Real& dpn) {
    mpfr_prec_t p = x.prec();
    Real p0(1.0, p), p1 = x;
    for (int k = 2; k <= n; ++k) {
        // k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}
        Real pk = (x * p1 * static_cast<double>(2 * k - 1) - p0 * static_cast<double>(k - 1)) /
                  static_cast<double>(k);
        p0 = p1;
        p1 = pk;
    }
    pn = p1;
    // (1-x^2) P_n' = n (P_{n-1} - x P_n)
    dpn = (p0 - x * p1) * static_cast<double>(n) / (Real(1.0, p) - x * x);
}

const Caches::GaussRule& Caches::gauss_rule(int order) {
    std::lock_guard<std::mutex> lock(mu_);
    for (auto& [ord, rule] : gauss_)
        if (ord == order)
            return *rule;

    mpfr_prec_t p = prec_ + 32;
    auto rule = std::make_unique<GaussRule>();
    rule->nodes.reserve(order);
    rule->weights.reserve(order);
    Real one(1.0, p);
    Real tiny = pow_si(Real(2.0, p), -static_cast<long>(prec_) - 16);
    // Newton from double Chebyshev seeds; the step underflows the working
    // precision long before 60 iterations given quadratic convergence.
    for (int i = 0; i < order; ++i) {
        double seed = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        Real x(seed, p);
        Real pn(p), dpn(p);
        for (int it = 0; it < 60; ++it) {
            legendre_pair(order, x, pn, dpn);
            Real step = pn / dpn;
            x = x - step;
            if (step.is_zero() || abs(step) < abs(x) * tiny)
                break;
        }
        legendre_pair(order, x, pn, dpn);
        Real w = Real(2.0, p) / ((one - x * x) * dpn * dpn);
        rule->nodes.push_back(x.to_prec(prec_));
        rule->weights.push_back(w.to_prec(prec_));
    }
    gauss_.emplace_back(order, std::move(rule));
    return *gauss_.back().second;
}

std::vector<int> smallest_prime_factors(int n) {
    std::vector<int> spf(n, 0);
    for (int i = 2; i < n; ++i) {
        if (spf[i] == 0) {
            for (long long j = i; j < n; j += i)
                if (spf[j] == 0)
                    spf[j] = static_cast<int>(i);
        }
    }
    return spf;
}

}  // namespace detail

}  // namespace rhxi
