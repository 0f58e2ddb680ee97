#include "rhxi/errors.hpp"
#include "rhxi/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

struct CommonFlags {
    long precision_bits = 0;
    double tol = 0.0;
    double t_cap = -1.0;
    double threshold = -1.0;
    std::string out;
    std::string format;
    std::string config_path;
    CLI::Option* o_bits = nullptr;
    CLI::Option* o_tol = nullptr;
    CLI::Option* o_tmax = nullptr;
    CLI::Option* o_threshold = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_config = nullptr;
};

void add_common(CLI::App* sub, CommonFlags& f, bool with_tmax = true) {
    f.o_bits = sub->add_option("--precision-bits", f.precision_bits, "working precision in bits");
    f.o_tol = sub->add_option("--tol", f.tol, "target tolerance for the result");
    if (with_tmax)
        f.o_tmax = sub->add_option("--tmax", f.t_cap,
                                   "cap on the truncation height (0 = pick from the tail model)");
    f.o_threshold =
        sub->add_option("--threshold", f.threshold, "jump significance threshold (inf disables)");
    f.o_out = sub->add_option("--out", f.out, "output path (default: stdout)");
    f.o_format =
        sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    f.o_config = sub->add_option("--config", f.config_path, "key=value settings file");
}

// defaults < environment < config file < explicit flags
rhxi::report::RunConfig resolve(const CommonFlags& f) {
    rhxi::report::RunConfig cfg;
    rhxi::report::apply_env(cfg);
    if (f.o_config->count())
        rhxi::report::apply_config_file(cfg, f.config_path);
    if (f.o_bits->count())
        cfg.precision_bits = f.precision_bits;
    if (f.o_tol->count())
        cfg.target_tol = f.tol;
    if (f.o_tmax && f.o_tmax->count())
        cfg.t_cap = f.t_cap;
    if (f.o_threshold->count())
        cfg.threshold = f.threshold;
    if (f.o_out->count())
        cfg.output_path = f.out;
    if (f.o_format->count())
        cfg.output_format =
            f.format == "json" ? rhxi::report::OutputFormat::JSON : rhxi::report::OutputFormat::CSV;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertical-line integrals of the completed-zeta ratio, with jump detection"};
    app.require_subcommand(1);

    CommonFlags fi, fs, fx, fz, fp;

    auto* c_integrate = app.add_subcommand("integrate", "I(eps) at a single offset");
    double one_eps = 0.0;
    std::string inject_integrate;
    c_integrate->add_option("--eps", one_eps, "offset from the critical line")->required();
    c_integrate->add_option("--inject", inject_integrate, "add c/(s-s0) to the integrand: <c>@<s0>");
    add_common(c_integrate, fi);

    auto* c_sweep = app.add_subcommand("sweep", "I(eps) across a grid, with jump detection");
    double eps_min = 0.0, eps_max = 0.0;
    long eps_steps = 0;
    std::string inject_sweep;
    c_sweep->add_option("--eps-min", eps_min, "first grid offset");
    c_sweep->add_option("--eps-max", eps_max, "last grid offset");
    c_sweep->add_option("--eps-steps", eps_steps, "number of grid points");
    c_sweep->add_option("--inject", inject_sweep, "add c/(s-s0) to the integrand: <c>@<s0>");
    add_common(c_sweep, fs);

    auto* c_xicheck =
        app.add_subcommand("xicheck", "entire-integrand self-check against the closed form");
    std::vector<double> xicheck_eps;
    c_xicheck->add_option("--eps", xicheck_eps, "offsets to check (default: 0 0.1 0.3)");
    add_common(c_xicheck, fx);

    auto* c_zeros = app.add_subcommand("zeros", "critical-line zero ordinates up to a height");
    double zeros_tmax = 30.0;
    c_zeros->add_option("--tmax", zeros_tmax, "scan ceiling (at most 200)");
    add_common(c_zeros, fz, /*with_tmax=*/false);

    auto* c_plot = app.add_subcommand("plot", "render a sweep CSV as an SVG");
    std::string plot_in;
    c_plot->add_option("--in", plot_in, "input CSV path")->required();
    add_common(c_plot, fp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    rhxi::report::CommandIO io{std::cout, std::cerr};
    try {
        if (app.got_subcommand(c_integrate)) {
            auto cfg = resolve(fi);
            rhxi::report::InjectSpec inject;
            if (c_integrate->count("--inject"))
                inject = rhxi::report::parse_inject(inject_integrate, cfg.precision_bits);
            return rhxi::report::cmd_integrate(cfg, one_eps, inject, io);
        }
        if (app.got_subcommand(c_sweep)) {
            auto cfg = resolve(fs);
            if (c_sweep->count("--eps-min"))
                cfg.eps_min = eps_min;
            if (c_sweep->count("--eps-max"))
                cfg.eps_max = eps_max;
            if (c_sweep->count("--eps-steps"))
                cfg.eps_steps = eps_steps;
            rhxi::report::InjectSpec inject;
            if (c_sweep->count("--inject"))
                inject = rhxi::report::parse_inject(inject_sweep, cfg.precision_bits);
            return rhxi::report::cmd_sweep(cfg, inject, io);
        }
        if (app.got_subcommand(c_xicheck)) {
            auto cfg = resolve(fx);
            if (xicheck_eps.empty())
                xicheck_eps = {0.0, 0.1, 0.3};
            return rhxi::report::cmd_xicheck(cfg, xicheck_eps, io);
        }
        if (app.got_subcommand(c_zeros)) {
            auto cfg = resolve(fz);
            return rhxi::report::cmd_zeros(cfg, zeros_tmax, io);
        }
        if (app.got_subcommand(c_plot)) {
            auto cfg = resolve(fp);
            return rhxi::report::cmd_plot(cfg, plot_in, io);
        }
    } catch (const rhxi::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rhxi::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rhxi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
