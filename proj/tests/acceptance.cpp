// End-to-end acceptance checks. One line per criterion:
//   [PASS] criterion N: <what was verified>
//   [FAIL] criterion N: <what went wrong>
// Exit status 0 only if every criterion passed.

#include "rhxi/errors.hpp"
#include "rhxi/precision.hpp"
#include "rhxi/quadrature.hpp"
#include "rhxi/report.hpp"
#include "rhxi/special.hpp"
#include "rhxi/sweep.hpp"
#include "rhxi/zeros.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rhxi;

namespace {

int g_failures = 0;

void emit(int n, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

template <typename Fn>
void criterion(int n, Fn&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        emit(n, false, std::string("unexpected exception: ") + e.what());
    }
}

std::string run_capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p)
        return out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, got);
    pclose(p);
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

}  // namespace

int main() {
    // 1. The entire-integrand line integral equals its closed form,
    //    independent of the offset, to 1e-10 at 256 bits / tol 1e-12.
    criterion(1, [] {
        report::RunConfig cfg;
        cfg.precision_bits = 256;
        cfg.target_tol = 1e-12;
        std::stringstream out, err;
        int rc = report::cmd_xicheck(cfg, {0.0, 0.1, 0.3}, {out, err});
        bool ok = (rc == 0) && out.str().find("FAIL") == std::string::npos;
        emit(1, ok,
               ok ? "j(eps) matches the closed form within 1e-10 at eps = 0, 0.1, 0.3"
                  : "self-check mismatch, rc=" + std::to_string(rc) + "\n" + out.str());
    });

    // 2. Full default sweep at tol 1e-8: flat against the reference line,
    //    every point within 5x combined bounds, no jump flags.
    criterion(2, [] {
        PrecisionContext ctx(256, 1e-8);
        sweep::SweepOptions so;
        so.tol = 1e-8;
        auto r = sweep::sweep(sweep::default_eps_grid(), ctx, so);
        double worst = 0.0;
        bool all_ok = true;
        for (size_t i = 0; i < r.values.size(); ++i) {
            if (r.failed[i]) {
                all_ok = false;
                continue;
            }
            double dev = abs(r.values[i] - r.reference).to_double();
            double bar = 5.0 * (r.err_bounds[i] + r.reference_err);
            worst = std::max(worst, dev / bar);
            if (dev > bar)
                all_ok = false;
        }
        bool ok = all_ok && r.jumps.empty() && r.values.size() == 24;
        emit(2, ok,
               ok ? "24-point sweep flat to 5x error bounds (worst ratio " + fmt(worst) +
                        "), no jumps"
                  : "sweep deviated or flagged jumps (worst ratio " + fmt(worst) + ", " +
                        std::to_string(r.jumps.size()) + " jumps)");
    });

    // 3. An injected pole (residue 0.01 at 0.75 + 10i) is detected: exactly
    //    one jump bracketing eps = 0.25, size recovered within 1%.
    criterion(3, [] {
        PrecisionContext ctx(256, 1e-6);
        mpfr_prec_t p = ctx.working_prec();
        ComplexValue c(Real(0.01, p), Real(0.0, p));
        ComplexValue s0(Real(0.75, p), Real(10.0, p));
        auto term = sweep::inject_pole(c, s0);
        sweep::SweepOptions so;
        so.tol = 1e-6;
        so.extra = &term;
        auto r = sweep::sweep(sweep::default_eps_grid(), ctx, so);
        bool one = r.jumps.size() == 1;
        bool brackets = one && r.jumps[0].eps_lo < 0.25 && 0.25 < r.jumps[0].eps_hi;
        double rec = 0.0, rel = 1.0;
        if (one) {
            auto est = sweep::residue_from_jump(r.jumps[0], r);
            rec = est.residue.re.to_double();
            rel = std::fabs(rec - 0.01) / 0.01;
        }
        bool ok = one && brackets && rel <= 0.01;
        emit(3, ok,
               ok ? "injected pole flagged once at (0.24, 0.26); recovered residue " + fmt(rec) +
                        " (rel err " + fmt(rel) + ")"
                  : "jump count " + std::to_string(r.jumps.size()) + ", recovered " + fmt(rec));
    });

    // 4. Special-function suite: classical zeta values, the independent
    //    alternating-series oracle, fixed xi values, and the reflection
    //    identity on 100 pseudorandom points.
    criterion(4, [] {
        PrecisionContext ctx(256, 1e-30);
        const mpfr_prec_t p = ctx.working_prec();
        bool ok = true;
        std::string why;

        auto z2 = special::zeta(ComplexValue(Real(2.0, p), Real(0.0, p)), ctx);
        Real pi = Real::pi(p);
        if (abs(z2.value.re - pi * pi / 6.0).to_double() > 1e-30)
            ok = false, why += " zeta(2);";
        auto z0 = special::zeta(ComplexValue(Real(0.0, p), Real(0.0, p)), ctx);
        if (abs(z0.value.re + 0.5).to_double() > 1e-30)
            ok = false, why += " zeta(0);";

        auto zh = special::zeta(ComplexValue(Real(0.5, p), Real(0.0, p)), ctx);
        auto oracle = oracles::zeta_via_eta(ComplexValue(Real(0.5, p), Real(0.0, p)), 128, p);
        if (abs(zh.value - oracle).to_double() > 1e-29)
            ok = false, why += " zeta(1/2) vs series oracle;";

        auto x0 = special::xi(ComplexValue(Real(0.0, p), Real(0.0, p)), ctx);
        auto x1 = special::xi(ComplexValue(Real(1.0, p), Real(0.0, p)), ctx);
        if (abs(x0.value.re - 0.5).to_double() > 1e-30 ||
            abs(x1.value.re - 0.5).to_double() > 1e-30)
            ok = false, why += " xi(0)/xi(1);";

        std::mt19937 rng(20240612);
        std::uniform_real_distribution<double> sig(-2.0, 3.0), tau(0.0, 40.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            ComplexValue s(Real(sig(rng), p), Real(tau(rng), p));
            ComplexValue m = ComplexValue(Real(1.0, p), Real(0.0, p)) - s;
            auto a = special::xi(s, ctx);
            auto b = special::xi(m, ctx);
            double dev = abs(a.value - b.value).to_double();
            double bar = 10.0 * (a.err_bound + b.err_bound);
            worst = std::max(worst, dev / bar);
            if (dev > bar) {
                ok = false;
                why += " reflection at point " + std::to_string(i) + ";";
                break;
            }
        }
        emit(4, ok,
               ok ? "zeta/xi fixed values and 100-point reflection identity (worst ratio " +
                        fmt(worst) + ")"
                  : "mismatches:" + why);
    });

    // 5. Zero finder: first three ordinates to 1e-8, and the ratio refuses
    //    to evaluate on top of each refined zero.
    criterion(5, [] {
        PrecisionContext ctx(256, 1e-40);
        auto zl = zeros::scan_zeros(30.0, 0.25, ctx);
        bool ok = zl.ordinates.size() == 3 && !zl.step_too_coarse;
        const std::string_view frozen[] = {oracles::kGamma1, oracles::kGamma2, oracles::kGamma3};
        for (size_t i = 0; ok && i < 3; ++i) {
            Real want = oracles::real_at(frozen[i], ctx.working_prec());
            if (abs(zl.ordinates[i] - want).to_double() > 1e-8)
                ok = false;
        }
        int guarded = 0;
        for (size_t i = 0; ok && i < 3; ++i) {
            try {
                special::f_ratio(ComplexValue(Real(0.5, ctx.working_prec()), zl.ordinates[i]),
                                 ctx);
            } catch (const NearZeroDivisor&) {
                ++guarded;
            }
        }
        ok = ok && guarded == 3;
        emit(5, ok,
               ok ? "ordinates 14.134725 / 21.022040 / 25.010858 to 1e-8; ratio guarded at each"
                  : "zero scan mismatch (found " + std::to_string(zl.ordinates.size()) +
                        " ordinates, " + std::to_string(guarded) + " guarded)");
    });

    // 6. Quadrature self-consistency: doubling the height moves the result
    //    by less than the reported tail bound; tightening the tolerance
    //    tenfold stays within the old tolerance.
    criterion(6, [] {
        bool ok = true;
        std::string why;
        {
            PrecisionContext ctx(192, 1e-6);
            quadrature::LineOptions lo;
            lo.tol = 1e-6;
            auto a = quadrature::i_of_eps(0.3, ctx, lo);
            quadrature::LineOptions lo2 = lo;
            lo2.t_override = 2.0 * a.t_used;
            auto b = quadrature::i_of_eps(0.3, ctx, lo2);
            if (abs(a.value - b.value).to_double() > a.tail_err)
                ok = false, why += " i(0.3) height doubling;";

            PrecisionContext ctx10(192, 1e-7);
            quadrature::LineOptions lo10;
            lo10.tol = 1e-7;
            auto c = quadrature::i_of_eps(0.3, ctx10, lo10);
            if (abs(a.value - c.value).to_double() > 1e-6)
                ok = false, why += " i(0.3) tolerance tightening;";
        }
        {
            PrecisionContext ctx(192, 1e-8);
            quadrature::LineOptions lo;
            lo.tol = 1e-8;
            auto a = quadrature::j_of_eps(0.1, ctx, lo);
            quadrature::LineOptions lo2 = lo;
            lo2.t_override = 2.0 * a.t_used;
            auto b = quadrature::j_of_eps(0.1, ctx, lo2);
            if (abs(a.value - b.value).to_double() > a.tail_err)
                ok = false, why += " j(0.1) height doubling;";

            PrecisionContext ctx10(192, 1e-9);
            quadrature::LineOptions lo10;
            lo10.tol = 1e-9;
            auto c = quadrature::j_of_eps(0.1, ctx10, lo10);
            if (abs(a.value - c.value).to_double() > 1e-8)
                ok = false, why += " j(0.1) tolerance tightening;";
        }
        emit(6, ok,
               ok ? "height doubling within tail bounds; tol/10 within the old tol (i and j lines)"
                  : "instability:" + why);
    });

    // 7. Determinism: identical invocations produce byte-identical output.
    //    Exercises the installed CLI when RHXI_CLI points at it, and the
    //    in-process command layer either way.
    criterion(7, [] {
        bool ok = true;
        std::string detail = "in-process integrate + sweep byte-identical";
        {
            report::RunConfig cfg;
            cfg.precision_bits = 128;
            cfg.target_tol = 1e-6;
            report::InjectSpec none;
            std::stringstream o1, e1, o2, e2;
            int r1 = report::cmd_integrate(cfg, 0.3, none, {o1, e1});
            int r2 = report::cmd_integrate(cfg, 0.3, none, {o2, e2});
            ok = ok && r1 == 0 && r2 == 0 && o1.str() == o2.str();

            cfg.eps_min = 0.1;
            cfg.eps_max = 0.2;
            cfg.eps_steps = 2;
            cfg.target_tol = 1e-5;
            std::stringstream s1, s2, se1, se2;
            int q1 = report::cmd_sweep(cfg, none, {s1, se1});
            int q2 = report::cmd_sweep(cfg, none, {s2, se2});
            ok = ok && q1 == 0 && q2 == 0 && s1.str() == s2.str();
        }
        if (const char* cli = std::getenv("RHXI_CLI")) {
            std::string base = std::string("\"") + cli + "\"";
            std::string cmd =
                base + " integrate --eps 0.3 --tol 1e-6 --precision-bits 128";
            std::string a = run_capture(cmd);
            std::string b = run_capture(cmd);
            std::string z = base + " zeros --tmax 30 --precision-bits 128";
            std::string za = run_capture(z);
            std::string zb = run_capture(z);
            bool cli_ok = !a.empty() && a == b && !za.empty() && za == zb;
            ok = ok && cli_ok;
            detail = cli_ok ? "CLI integrate + zeros and in-process commands byte-identical"
                            : "CLI output differed between runs";
        }
        emit(7, ok, ok ? detail : "repeat runs differed");
    });

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
