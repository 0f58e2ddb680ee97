#pragma once

#include "rhxi/precision.hpp"
#include "rhxi/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rhxi::report {

enum class OutputFormat { CSV, JSON };

// Settings shared by the command entry points. Sources, lowest to highest
// priority: built-in defaults, RHXI_PRECISION_BITS in the environment, a
// key=value config file, explicit command-line flags.
struct RunConfig {
    long precision_bits = 256;
    double target_tol = 1e-10;
    double eps_min = 0.02;
    double eps_max = 0.48;
    long eps_steps = 24;
    double t_cap = 0.0;  // 0 = pick the height from the tail model
    double threshold = 5.0;
    OutputFormat output_format = OutputFormat::CSV;
    std::string output_path;  // empty = stdout

    void validate() const;             // DomainError on out-of-range settings
    std::vector<double> grid() const;  // eps_steps points from eps_min to eps_max
    PrecisionContext context() const;
};

// Overlay `path` (lines of key=value, '#' comments) onto cfg.
// Unknown keys or unparsable values raise UsageError.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Overlay RHXI_PRECISION_BITS if present; UsageError when set but invalid.
void apply_env(RunConfig& cfg);

// Decimal digits that round-trip the working precision: ceil(0.302 p) + 2.
int serialization_digits(long precision_bits);

// --inject argument: "<complex>@<complex>", e.g. 0.01@0.75+10i.
struct InjectSpec {
    bool active = false;
    ComplexValue c;
    ComplexValue s0;
};
InjectSpec parse_inject(const std::string& text, long precision_bits);
// One complex literal: "a", "bi", "a+bi", "a-bi" (exponents allowed).
ComplexValue parse_complex(const std::string& text, long precision_bits);

// ---- sweep serialization ----

void write_sweep_csv(std::ostream& os, const sweep::SweepResult& res, int digits);
void write_sweep_json(std::ostream& os, const sweep::SweepResult& res, const RunConfig& cfg,
                      int digits);

// Rows parsed back from the CSV form (values both as text and as double).
struct CsvSweep {
    std::vector<double> eps;
    std::vector<std::string> value_text;
    std::vector<double> value;
    std::vector<double> err_bound;
    std::vector<double> t_used;
    std::vector<bool> failed;
};
// UsageError on a missing/odd header, ragged rows, or an empty table.
CsvSweep parse_sweep_csv(std::istream& is);

// 800x500 plot of I(epsilon) with error bars; UsageError when no usable rows.
std::string render_sweep_svg(const CsvSweep& data, int width = 800, int height = 500);

// ---- command entry points (shared by the CLI and the tests) ----
// Exit codes: 0 done, 2 usage/precondition, 3 numeric failure,
// 4 self-check mismatch, 10 sweep flagged at least one jump.

struct CommandIO {
    std::ostream& out;
    std::ostream& err;
};

int cmd_integrate(const RunConfig& cfg, double eps, const InjectSpec& inject, CommandIO io);
int cmd_sweep(const RunConfig& cfg, const InjectSpec& inject, CommandIO io);
int cmd_xicheck(const RunConfig& cfg, const std::vector<double>& eps_list, CommandIO io);
int cmd_zeros(const RunConfig& cfg, double t_max, CommandIO io);
int cmd_plot(const RunConfig& cfg, const std::string& input_path, CommandIO io);

}  // namespace rhxi::report
