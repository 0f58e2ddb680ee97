#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhxi/errors.hpp"
#include "rhxi/precision.hpp"
#include "rhxi/special.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace rhxi;
using oracles::complex_at;
using oracles::real_at;

namespace {
const PrecisionContext& ctx256() {
    static PrecisionContext c(256, 1e-40);
    return c;
}
ComplexValue cpx(double re, double im, const PrecisionContext& c) {
    return {re, im, c.working_prec()};
}
}  // namespace

TEST_CASE("zeta at classical points") {
    auto& c = ctx256();
    const mpfr_prec_t p = c.working_prec();

    auto z2 = special::zeta(cpx(2.0, 0.0, c), c);
    Real want = Real::pi(p) * Real::pi(p) / 6.0;
    CHECK(abs(z2.value - want).to_double() < 1e-70);
    CHECK(abs(z2.value - want).to_double() <= z2.err_bound);
    CHECK(z2.value.im.is_zero());

    auto z0 = special::zeta(cpx(0.0, 0.0, c), c);
    CHECK(abs(z0.value + 0.5).to_double() < 1e-70);

    auto zh = special::zeta(cpx(0.5, 0.0, c), c);
    CHECK(abs(zh.value - real_at(oracles::kZetaHalf, p)).to_double() < 1e-58);
}

TEST_CASE("zeta off the real axis against frozen references") {
    auto& c = ctx256();
    const mpfr_prec_t p = c.working_prec();
    struct Case {
        double re, im;
        std::string_view wre, wim;
        double tol;
    };
    const Case cases[] = {
        {0.75, 10.0, oracles::kZeta75T10Re, oracles::kZeta75T10Im, 1e-48},
        {-0.5, 3.0, oracles::kZetaM5T3Re, oracles::kZetaM5T3Im, 1e-40},
        {4.0, 40.0, oracles::kZeta4T40Re, oracles::kZeta4T40Im, 1e-41},
    };
    for (const auto& t : cases) {
        auto r = special::zeta(cpx(t.re, t.im, c), c);
        CHECK(abs(r.value - complex_at(t.wre, t.wim, p)).to_double() < t.tol);
    }
}

TEST_CASE("zeta agrees with the alternating-series method") {
    auto& c = ctx256();
    const mpfr_prec_t p = c.working_prec();
    // sanity on the oracle itself first (decimal inputs built exactly)
    auto eta_check = oracles::eta_series(complex_at("0.3", "7.0", p), 128, p);
    CHECK(abs(eta_check - complex_at(oracles::kEta37Re, oracles::kEta37Im, p)).to_double() <
          1e-40);
    auto eta_check2 = oracles::eta_series(complex_at("1.7", "-4.0", p), 128, p);
    CHECK(abs(eta_check2 - complex_at(oracles::kEta174Re, oracles::kEta174Im, p)).to_double() <
          1e-40);
    auto eta_half = oracles::eta_series(cpx(0.5, 0.0, c), 128, p);
    CHECK(abs(eta_half - ComplexValue(real_at(oracles::kEtaHalf, p), Real(0.0, p))).to_double() <
          1e-40);

    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> sig(0.2, 3.0), tt(0.5, 30.0);
    for (int i = 0; i < 10; ++i) {
        ComplexValue s = cpx(sig(rng), tt(rng), c);
        auto mine = special::zeta(s, c);
        auto other = oracles::zeta_via_eta(s, 128, p);
        CHECK(abs(mine.value - other).to_double() < 1e-40);
    }
}

TEST_CASE("zeta pole handling at s = 1") {
    auto& c = ctx256();
    CHECK_THROWS_AS(special::zeta(cpx(1.0, 0.0, c), c), PoleError);
    auto fused = special::zeta_fused(cpx(1.0, 0.0, c), c);
    CHECK(abs(fused.value - 1.0).to_double() == 0.0);  // (s-1)zeta(s) -> exactly 1
    auto near = special::zeta(cpx(1.0, 1e-30, c), c);
    CHECK(near.flags.has(EvalFlag::NEAR_POLE));
    CHECK(abs(near.value).to_double() > 1e25);
}

TEST_CASE("log_gamma at checked points") {
    auto& c = ctx256();
    const mpfr_prec_t p = c.working_prec();
    auto at1 = special::log_gamma(cpx(1.0, 0.0, c), c);
    CHECK(abs(at1.value).to_double() < 1e-70);
    auto quarter = special::log_gamma(cpx(0.25, 0.0, c), c);
    CHECK(abs(quarter.value - real_at(oracles::kLogGammaQuarter, p)).to_double() < 1e-58);
    auto off = special::log_gamma(cpx(2.5, 7.0, c), c);
    CHECK(abs(off.value - complex_at(oracles::kLogGamma25T7Re, oracles::kLogGamma25T7Im, p))
              .to_double() < 1e-48);
}

TEST_CASE("log_gamma recurrence and pole rejection") {
    auto& c = ctx256();
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> re(-4.5, 4.0), im(0.1, 20.0);
    for (int i = 0; i < 25; ++i) {
        ComplexValue z = cpx(re(rng), im(rng), c);
        auto lhs = special::log_gamma(z + 1.0, c);
        auto rhs = special::log_gamma(z, c);
        ComplexValue resid = lhs.value - rhs.value - log(z);
        // branch offsets are multiples of 2 pi; accept only the zero offset
        CHECK(abs(resid).to_double() < 1e-60);
    }
    CHECK_THROWS_AS(special::log_gamma(cpx(0.0, 0.0, c), c), PoleError);
    CHECK_THROWS_AS(special::log_gamma(cpx(-3.0, 0.0, c), c), PoleError);
    CHECK_NOTHROW(special::log_gamma(cpx(-2.5, 0.0, c), c));
}

TEST_CASE("xi fixed values") {
    auto& c = ctx256();
    const mpfr_prec_t p = c.working_prec();
    auto x0 = special::xi(cpx(0.0, 0.0, c), c);
    auto x1 = special::xi(cpx(1.0, 0.0, c), c);
    CHECK(abs(x0.value - 0.5).to_double() < 1e-70);
    CHECK(abs(x1.value - 0.5).to_double() < 1e-70);
    auto x2 = special::xi(cpx(2.0, 0.0, c), c);
    CHECK(abs(x2.value - Real::pi(p) / 6.0).to_double() < 1e-70);
    auto x4 = special::xi(cpx(4.0, 0.0, c), c);
    CHECK(abs(x4.value - Real::pi(p) * Real::pi(p) / 15.0).to_double() < 1e-69);
    auto xh = special::xi(cpx(0.5, 0.0, c), c);
    CHECK(abs(xh.value - real_at(oracles::kXiHalf, p)).to_double() < 1e-60);
    auto x32 = special::xi(cpx(1.5, 0.0, c), c);
    CHECK(abs(x32.value - real_at(oracles::kXiThreeHalves, p)).to_double() < 1e-49);
    auto x3 = special::xi(cpx(3.0, 0.0, c), c);
    CHECK(abs(x3.value - real_at(oracles::kXiThree, p)).to_double() < 1e-48);
    // decimal 0.3 differs from double 0.3; build the input from the string
    ComplexValue s32(Real::from_string("0.3", p), Real(2.0, p));
    auto x32i = special::xi(s32, c);
    CHECK(abs(x32i.value - complex_at(oracles::kXiP3P2Re, oracles::kXiP3P2Im, p)).to_double() <
          1e-49);
}

TEST_CASE("xi reflection and conjugation symmetries") {
    auto& c = ctx256();
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> re(-5.0, 6.0), im(0.0, 40.0);
    for (int i = 0; i < 100; ++i) {
        ComplexValue s = cpx(re(rng), im(rng), c);
        auto a = special::xi(s, c);
        auto b = special::xi(ComplexValue(Real(1.0, c.working_prec()) - s.re, -s.im), c);
        double allowance = 10.0 * (a.err_bound + b.err_bound);
        CHECK(abs(a.value - b.value).to_double() <= allowance);
        Real resid = special::xi_symmetry_residual(s, c);
        CHECK(resid.to_double() <= allowance);
        // conjugate inputs give conjugate outputs, bit for bit
        auto cj = special::xi(s.conj(), c);
        CHECK(cj.value.re == a.value.re);
        CHECK((cj.value.im + a.value.im).is_zero());
    }
}

TEST_CASE("xi is real on the half line") {
    auto& c = ctx256();
    for (double t : {0.0, 3.7, 14.0, 21.5, 33.0}) {
        auto r = special::xi_critical_line(Real(t, c.working_prec()), c);
        CHECK(abs(r.value.im).to_double() <= r.err_bound);
    }
}

TEST_CASE("ratio of completed values") {
    auto& c = ctx256();
    const mpfr_prec_t p = c.working_prec();
    auto f2 = special::f_ratio(cpx(2.0, 0.0, c), c);
    CHECK(abs(f2.value - real_at(oracles::kFTwo, p)).to_double() < 1e-58);
    CHECK(abs(f2.value - f2.value.re).to_double() == 0.0);

    // directly on a deeply-refined zero the denominator is flagged hopeless
    PrecisionContext c128(128, 1e-15);
    ComplexValue rho(Real(0.5, c128.working_prec()),
                     real_at(oracles::kGamma1, c128.working_prec()));
    CHECK_THROWS_AS(special::f_ratio(rho, c128), NearZeroDivisor);

    // a binary-double ordinate is far from the zero at this precision: the
    // soft flag trips, the hard error does not
    auto soft = special::f_ratio(cpx(0.5, 14.134725141734694, c128), c128);
    CHECK(soft.flags.has(EvalFlag::NEAR_POLE));
}

TEST_CASE("domain limits are enforced") {
    auto& c = ctx256();
    CHECK_THROWS_AS(special::zeta(cpx(7.5, 0.0, c), c), DomainError);
    CHECK_THROWS_AS(special::zeta(cpx(1.0, 600.0, c), c), DomainError);
    CHECK_THROWS_AS(special::xi(cpx(-8.0, 1.0, c), c), DomainError);
}

TEST_CASE("evaluation error bounds are honest") {
    // Against a much higher-precision run of the same input: the reported
    // bound must cover the observed difference.
    auto& c = ctx256();
    PrecisionContext fine(512, 1e-100);
    auto pairs = {std::pair<double, double>{0.5, 0.0}, {0.75, 10.0}, {0.25, 21.5}};
    for (auto [re, im] : pairs) {
        auto a = special::zeta(cpx(re, im, c), c);
        auto b = special::zeta(cpx(re, im, fine), fine);
        CHECK(abs(a.value - b.value).to_double() <= a.err_bound);
        auto xa = special::xi(cpx(re, im, c), c);
        auto xb = special::xi(cpx(re, im, fine), fine);
        CHECK(abs(xa.value - xb.value).to_double() <= xa.err_bound);
        CHECK(a.err_bound > 0.0);  // bounds never collapse to an exact claim
    }
}

TEST_CASE("same input, same bits, same output") {
    auto& c = ctx256();
    auto a = special::xi(cpx(0.4, 17.25, c), c);
    auto b = special::xi(cpx(0.4, 17.25, c), c);
    CHECK(a.value.to_string(80) == b.value.to_string(80));
    CHECK(a.err_bound == b.err_bound);
}
