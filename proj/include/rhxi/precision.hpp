#pragma once

#include "rhxi/complex_value.hpp"
#include "rhxi/errors.hpp"
#include "rhxi/real.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace rhxi {

namespace detail {
class Caches;  // Bernoulli tables, Gauss nodes; owned by the context.
}

// Working precision, target tolerance and guard digits governing every
// evaluation. Immutable after construction; cheap to copy (derived contexts
// at the same precision share the internal tables).
class PrecisionContext {
  public:
    // Throws DomainError unless precision_bits >= 64, guard_bits >= 32 and
    // target_tol >= 2^(guard_bits - precision_bits).
    PrecisionContext(int precision_bits, double target_tol, int guard_bits = 64);

    // Smallest context satisfying the invariants for a given tolerance:
    // precision_bits = ceil(-log2 tol) + guard_bits.
    static PrecisionContext for_tolerance(double target_tol, int guard_bits = 64);

    int precision_bits() const { return precision_bits_; }
    double target_tol() const { return target_tol_; }
    int guard_bits() const { return guard_bits_; }
    mpfr_prec_t working_prec() const { return precision_bits_; }

    // Same precision (and shared tables), different tolerance.
    PrecisionContext with_target_tol(double tol) const;

    Real make_real(double x = 0.0) const { return Real(x, working_prec()); }
    ComplexValue make_complex(double re, double im) const {
        return ComplexValue(re, im, working_prec());
    }
    Real pi() const { return Real::pi(working_prec()); }

    detail::Caches& caches() const { return *caches_; }

  private:
    PrecisionContext(int bits, double tol, int guard, std::shared_ptr<detail::Caches> caches);
    int precision_bits_;
    double target_tol_;
    int guard_bits_;
    std::shared_ptr<detail::Caches> caches_;
};

enum class EvalFlag : std::uint8_t {
    NEAR_POLE = 1,
    CANCELLATION = 2,
};

struct EvalFlags {
    std::uint8_t bits = 0;
    bool has(EvalFlag f) const { return bits & static_cast<std::uint8_t>(f); }
    void set(EvalFlag f) { bits |= static_cast<std::uint8_t>(f); }
    bool any() const { return bits != 0; }
};

// Value plus a first-order absolute error estimate. err_bound stays at or
// below the context's target tolerance unless a flag is set.
struct EvalResult {
    ComplexValue value;
    double err_bound = 0.0;
    EvalFlags flags;
};

namespace detail {

// Lazily grown per-precision tables. Thread-safe: growth happens under a
// mutex and snapshots/entries stay valid for the life of the cache.
class Caches {
  public:
    explicit Caches(mpfr_prec_t prec) : prec_(prec) {}
    Caches(const Caches&) = delete;
    Caches& operator=(const Caches&) = delete;

    // B_{2k}/(2k)! for k = 1..count at least (index 0 holds k=1).
    std::shared_ptr<const std::vector<Real>> bernoulli_over_fact(int count);
    // B_{2k}/(2k(2k-1)) for k = 1..count at least (Stirling series coefficients).
    std::shared_ptr<const std::vector<Real>> stirling_coeffs(int count);

    // Gauss-Legendre nodes/weights on [-1,1] for the given order.
    struct GaussRule {
        std::vector<Real> nodes;
        std::vector<Real> weights;
    };
    const GaussRule& gauss_rule(int order);

    mpfr_prec_t prec() const { return prec_; }

  private:
    mpfr_prec_t prec_;
    std::mutex mu_;
    std::shared_ptr<const std::vector<Real>> bern_over_fact_ =
        std::make_shared<std::vector<Real>>();
    std::shared_ptr<const std::vector<Real>> stirling_coeffs_ =
        std::make_shared<std::vector<Real>>();
    std::vector<std::pair<int, std::unique_ptr<GaussRule>>> gauss_;
    void grow_bernoulli_locked(int count);
};

// Smallest-prime-factor table for 0..n-1 (spf[0]=spf[1]=0).
std::vector<int> smallest_prime_factors(int n);

}  // namespace detail

}  // namespace rhxi
