#include "rhxi/report.hpp"

#include "rhxi/errors.hpp"
#include "rhxi/quadrature.hpp"
#include "rhxi/zeros.hpp"

#include <json.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace rhxi::report {

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

bool parse_double_strict(const std::string& s, double& out) {
    if (s == "inf" || s == "+inf") {
        out = std::numeric_limits<double>::infinity();
        return true;
    }
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') {
        ++first;  // from_chars takes '-' but not '+'
        if (first != last && (*first == '+' || *first == '-'))
            return false;
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_long_strict(const std::string& s, long& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Numbers that may be inf keep JSON valid by degrading to text.
ordered_json json_number(double x) {
    if (std::isfinite(x))
        return x;
    return fmt_double(x);
}

}  // namespace

void RunConfig::validate() const {
    if (precision_bits < 64 || precision_bits > 16384)
        throw DomainError("precision_bits must lie in [64, 16384]");
    if (!(target_tol > 0.0) || !std::isfinite(target_tol))
        throw DomainError("target_tol must be positive and finite");
    if (!(eps_min > 0.0) || !(eps_max < 1.0) || !(eps_min <= eps_max))
        throw DomainError("need 0 < eps_min <= eps_max < 1");
    if (eps_steps < 1)
        throw DomainError("eps_steps must be >= 1");
    if (t_cap != 0.0 && (!(t_cap >= 12.0) || !(t_cap <= 260.0)))
        throw DomainError("t_cap must be 0 (auto) or in [12, 260]");
    if (std::isnan(threshold) || !(threshold > 0.0))
        throw DomainError("threshold must be positive (+inf disables jump flags)");
}

std::vector<double> RunConfig::grid() const {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(eps_steps));
    if (eps_steps == 1) {
        g.push_back(eps_min);
        return g;
    }
    const double step = (eps_max - eps_min) / static_cast<double>(eps_steps - 1);
    for (long i = 0; i < eps_steps; ++i)
        g.push_back(eps_min + step * static_cast<double>(i));
    g.back() = eps_max;  // no drift at the top end
    return g;
}

PrecisionContext RunConfig::context() const {
    validate();
    return PrecisionContext(static_cast<mpfr_prec_t>(precision_bits), target_tol);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot read config file: " + path);
    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        auto bad = [&]() {
            return UsageError("config line " + std::to_string(lineno) + ": bad value for " + key);
        };
        if (key == "precision_bits") {
            if (!parse_long_strict(val, cfg.precision_bits))
                throw bad();
        } else if (key == "target_tol") {
            if (!parse_double_strict(val, cfg.target_tol))
                throw bad();
        } else if (key == "eps_min") {
            if (!parse_double_strict(val, cfg.eps_min))
                throw bad();
        } else if (key == "eps_max") {
            if (!parse_double_strict(val, cfg.eps_max))
                throw bad();
        } else if (key == "eps_steps") {
            if (!parse_long_strict(val, cfg.eps_steps))
                throw bad();
        } else if (key == "t_cap") {
            if (!parse_double_strict(val, cfg.t_cap))
                throw bad();
        } else if (key == "threshold") {
            if (!parse_double_strict(val, cfg.threshold))
                throw bad();
        } else if (key == "format") {
            if (val == "csv")
                cfg.output_format = OutputFormat::CSV;
            else if (val == "json")
                cfg.output_format = OutputFormat::JSON;
            else
                throw bad();
        } else if (key == "out") {
            cfg.output_path = val;
        } else {
            throw UsageError("config line " + std::to_string(lineno) + ": unknown key " + key);
        }
    }
}

void apply_env(RunConfig& cfg) {
    const char* v = std::getenv("RHXI_PRECISION_BITS");
    if (!v)
        return;
    long bits = 0;
    if (!parse_long_strict(v, bits))
        throw UsageError("RHXI_PRECISION_BITS is not an integer");
    cfg.precision_bits = bits;
}

int serialization_digits(long precision_bits) {
    return static_cast<int>(std::ceil(0.302 * static_cast<double>(precision_bits))) + 2;
}

ComplexValue parse_complex(const std::string& text, long precision_bits) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw UsageError("empty complex literal");
    const bool has_i = s.back() == 'i' || s.back() == 'j';
    std::string body = has_i ? s.substr(0, s.size() - 1) : s;
    // Split at the last sign that is not an exponent sign and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re_part, im_part;
    if (has_i) {
        if (split == std::string::npos) {
            re_part = "0";
            im_part = body;
        } else {
            re_part = body.substr(0, split);
            im_part = body.substr(split);
        }
    } else {
        if (split != std::string::npos)
            throw UsageError("malformed complex literal (missing i?): " + text);
        re_part = body;
        im_part = "0";
    }
    if (im_part.empty() || im_part == "+")
        im_part = "1";
    else if (im_part == "-")
        im_part = "-1";
    double probe;
    if (!parse_double_strict(re_part, probe) || !parse_double_strict(im_part, probe))
        throw UsageError("malformed complex literal: " + text);
    const auto p = static_cast<mpfr_prec_t>(precision_bits);
    return {Real::from_string(re_part, p), Real::from_string(im_part, p)};
}

InjectSpec parse_inject(const std::string& text, long precision_bits) {
    auto at = text.find('@');
    if (at == std::string::npos || text.find('@', at + 1) != std::string::npos)
        throw UsageError("--inject expects <complex>@<complex>, e.g. 0.01@0.75+10i");
    InjectSpec spec;
    spec.c = parse_complex(text.substr(0, at), precision_bits);
    spec.s0 = parse_complex(text.substr(at + 1), precision_bits);
    spec.active = true;
    return spec;
}

// ---- serialization ----

namespace {
constexpr const char* kCsvHeader = "eps,i_value,err_bound,t_used,failed";
}

void write_sweep_csv(std::ostream& os, const sweep::SweepResult& res, int digits) {
    os << kCsvHeader << "\n";
    for (std::size_t i = 0; i < res.eps_grid.size(); ++i) {
        os << fmt_double(res.eps_grid[i]) << ',' << res.values[i].to_string(digits) << ','
           << fmt_double(res.err_bounds[i]) << ',' << fmt_double(res.t_used[i]) << ','
           << (res.failed[i] ? 1 : 0) << "\n";
    }
}

void write_sweep_json(std::ostream& os, const sweep::SweepResult& res, const RunConfig& cfg,
                      int digits) {
    ordered_json root;
    root["config"] = {
        {"precision_bits", cfg.precision_bits},
        {"target_tol", cfg.target_tol},
        {"eps_min", cfg.eps_min},
        {"eps_max", cfg.eps_max},
        {"eps_steps", cfg.eps_steps},
        {"t_cap", cfg.t_cap},
        {"threshold", json_number(cfg.threshold)},
        {"format", cfg.output_format == OutputFormat::JSON ? "json" : "csv"},
    };
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < res.eps_grid.size(); ++i) {
        rows.push_back({
            {"eps", res.eps_grid[i]},
            {"i_value", res.values[i].to_string(digits)},
            {"err_bound", json_number(res.err_bounds[i])},
            {"t_used", res.t_used[i]},
            {"failed", static_cast<bool>(res.failed[i])},
        });
    }
    root["results"] = std::move(rows);
    root["reference"] = {
        {"value", res.reference.to_string(digits)},
        {"err_bound", json_number(res.reference_err)},
    };
    ordered_json jumps = ordered_json::array();
    for (const auto& j : res.jumps) {
        jumps.push_back({
            {"eps_lo", j.eps_lo},
            {"eps_hi", j.eps_hi},
            {"delta", j.delta.to_string(digits)},
            {"significance", json_number(j.significance)},
        });
    }
    root["jumps"] = std::move(jumps);
    os << root.dump(2) << "\n";
}

CsvSweep parse_sweep_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw UsageError("empty CSV input");
    if (trim(line) != kCsvHeader)
        throw UsageError("bad CSV header; expected " + std::string(kCsvHeader));
    CsvSweep out;
    long lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        std::array<std::string, 5> cell;
        std::size_t start = 0;
        for (int c = 0; c < 5; ++c) {
            auto comma = line.find(',', start);
            if (c < 4) {
                if (comma == std::string::npos)
                    throw UsageError("CSV line " + std::to_string(lineno) + ": expected 5 fields");
                cell[c] = line.substr(start, comma - start);
                start = comma + 1;
            } else {
                if (comma != std::string::npos)
                    throw UsageError("CSV line " + std::to_string(lineno) + ": expected 5 fields");
                cell[c] = line.substr(start);
            }
        }
        double eps, val, err, t;
        long failed;
        if (!parse_double_strict(trim(cell[0]), eps) || !parse_double_strict(trim(cell[1]), val) ||
            !parse_double_strict(trim(cell[2]), err) || !parse_double_strict(trim(cell[3]), t) ||
            !parse_long_strict(trim(cell[4]), failed) || (failed != 0 && failed != 1))
            throw UsageError("CSV line " + std::to_string(lineno) + ": unparsable field");
        out.eps.push_back(eps);
        out.value_text.push_back(trim(cell[1]));
        out.value.push_back(val);
        out.err_bound.push_back(err);
        out.t_used.push_back(t);
        out.failed.push_back(failed == 1);
    }
    if (out.eps.empty())
        throw UsageError("CSV input has a header but no rows");
    return out;
}

// ---- command entry points ----

namespace {

struct WallTimer {
    std::ostream& err;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~WallTimer() {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char buf[64];
        std::snprintf(buf, sizeof buf, "# wall_time_s=%.3f\n", s);
        err << buf;  // timing stays off the data stream
    }
};

int run_guarded(CommandIO io, const std::function<int()>& body) {
    WallTimer timer{io.err};
    try {
        return body();
    } catch (const UsageError& e) {
        io.err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        io.err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        io.err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return 3;
    }
}

int with_output(const RunConfig& cfg, CommandIO io, const std::function<int(std::ostream&)>& fn) {
    if (cfg.output_path.empty())
        return fn(io.out);
    std::ofstream f(cfg.output_path);
    if (!f)
        throw UsageError("cannot open output file: " + cfg.output_path);
    int rc = fn(f);
    if (!f.good())
        throw UsageError("short write to " + cfg.output_path);
    return rc;
}

// Single-row result reported in the sweep schema so downstream tooling is
// shared between `integrate` and `sweep`.
sweep::SweepResult single_point_result(double eps, const quadrature::IntegralResult& r) {
    sweep::SweepResult res;
    res.eps_grid = {eps};
    res.values.push_back(r.value);
    res.err_bounds.push_back(r.quad_err + r.tail_err);
    res.t_used.push_back(r.t_used);
    res.failed.push_back(false);
    res.reference = Real(0.0, r.value.prec());
    res.reference_err = 0.0;
    return res;
}

}  // namespace

int cmd_integrate(const RunConfig& cfg, double eps, const InjectSpec& inject, CommandIO io) {
    return run_guarded(io, [&]() -> int {
        PrecisionContext ctx = cfg.context();
        quadrature::LineTerm term;
        quadrature::LineOptions lo;
        lo.tol = cfg.target_tol;
        lo.t_override = cfg.t_cap;
        if (inject.active) {
            term = sweep::inject_pole(inject.c, inject.s0);
            lo.extra = &term;
        }
        auto r = quadrature::i_of_eps(eps, ctx, lo);
        const int digits = serialization_digits(cfg.precision_bits);
        return with_output(cfg, io, [&](std::ostream& os) {
            auto res = single_point_result(eps, r);
            if (cfg.output_format == OutputFormat::JSON)
                write_sweep_json(os, res, cfg, digits);
            else
                write_sweep_csv(os, res, digits);
            return 0;
        });
    });
}

int cmd_sweep(const RunConfig& cfg, const InjectSpec& inject, CommandIO io) {
    return run_guarded(io, [&]() -> int {
        PrecisionContext ctx = cfg.context();
        quadrature::LineTerm term;
        sweep::SweepOptions so;
        so.tol = cfg.target_tol;
        so.threshold = cfg.threshold;
        if (inject.active) {
            term = sweep::inject_pole(inject.c, inject.s0);
            so.extra = &term;
        }
        auto res = sweep::sweep(cfg.grid(), ctx, so);
        const int digits = serialization_digits(cfg.precision_bits);
        int rc = with_output(cfg, io, [&](std::ostream& os) {
            if (cfg.output_format == OutputFormat::JSON)
                write_sweep_json(os, res, cfg, digits);
            else
                write_sweep_csv(os, res, digits);
            return 0;
        });
        if (rc != 0)
            return rc;
        if (!res.jumps.empty()) {
            for (const auto& j : res.jumps)
                io.err << "jump flagged on (" << fmt_double(j.eps_lo) << ", "
                       << fmt_double(j.eps_hi) << "), significance " << fmt_double(j.significance)
                       << "\n";
            return 10;
        }
        return 0;
    });
}

int cmd_xicheck(const RunConfig& cfg, const std::vector<double>& eps_list, CommandIO io) {
    return run_guarded(io, [&]() -> int {
        PrecisionContext ctx = cfg.context();
        const int digits = serialization_digits(cfg.precision_bits);
        const Real closed = quadrature::closed_form_j(ctx);
        // Pass bar: two orders above the requested tolerance, so an honest
        // engine passes with slack while a real defect still trips it.
        const double allow = 100.0 * cfg.target_tol;
        bool all_ok = true;
        return with_output(cfg, io, [&](std::ostream& os) {
            os << "eps,j_value,closed_form,abs_diff,status\n";
            for (double eps : eps_list) {
                quadrature::LineOptions lo;
                lo.tol = cfg.target_tol;
                lo.t_override = cfg.t_cap;
                auto r = quadrature::j_of_eps(eps, ctx, lo);
                Real diff = abs(r.value - closed);
                const bool ok = diff < allow;
                all_ok = all_ok && ok;
                os << fmt_double(eps) << ',' << r.value.to_string(digits) << ','
                   << closed.to_string(digits) << ',' << diff.to_string(6) << ','
                   << (ok ? "PASS" : "FAIL") << "\n";
            }
            return all_ok ? 0 : 4;
        });
    });
}

int cmd_zeros(const RunConfig& cfg, double t_max, CommandIO io) {
    return run_guarded(io, [&]() -> int {
        PrecisionContext ctx = cfg.context();
        auto zl = zeros::scan_zeros(t_max, 0.25, ctx);
        const int digits = serialization_digits(cfg.precision_bits);
        if (zl.step_too_coarse)
            io.err << "warning: zero count below the density estimate; scan step may be coarse\n";
        return with_output(cfg, io, [&](std::ostream& os) {
            os << "index,ordinate,radius\n";
            for (std::size_t i = 0; i < zl.ordinates.size(); ++i)
                os << i + 1 << ',' << zl.ordinates[i].to_string(digits) << ','
                   << zl.radii[i].to_string(6) << "\n";
            return 0;
        });
    });
}

int cmd_plot(const RunConfig& cfg, const std::string& input_path, CommandIO io) {
    return run_guarded(io, [&]() -> int {
        CsvSweep data;
        if (input_path.empty() || input_path == "-") {
            throw UsageError("plot needs an input CSV path");
        }
        std::ifstream f(input_path);
        if (!f)
            throw UsageError("cannot read CSV input: " + input_path);
        data = parse_sweep_csv(f);
        std::string svg = render_sweep_svg(data);
        return with_output(cfg, io, [&](std::ostream& os) {
            os << svg;
            return 0;
        });
    });
}

}  // namespace rhxi::report
