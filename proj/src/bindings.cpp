#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rhxi/errors.hpp"
#include "rhxi/precision.hpp"
#include "rhxi/quadrature.hpp"
#include "rhxi/report.hpp"
#include "rhxi/special.hpp"
#include "rhxi/sweep.hpp"
#include "rhxi/zeros.hpp"

#include <complex>

namespace py = pybind11;
using namespace rhxi;

namespace {

PrecisionContext make_ctx(long bits, double tol) {
    return PrecisionContext(static_cast<mpfr_prec_t>(bits), tol);
}

std::complex<double> to_std(const ComplexValue& z) {
    return {z.re.to_double(), z.im.to_double()};
}

ComplexValue from_std(std::complex<double> z, mpfr_prec_t p) {
    return {z.real(), z.imag(), p};
}

py::dict eval_dict(const EvalResult& r, long bits) {
    const int digits = report::serialization_digits(bits);
    py::dict d;
    d["value"] = to_std(r.value);
    d["value_str"] = r.value.to_string(digits);
    d["err_bound"] = r.err_bound;
    d["near_pole"] = r.flags.has(EvalFlag::NEAR_POLE);
    return d;
}

py::dict integral_dict(const quadrature::IntegralResult& r, long bits) {
    const int digits = report::serialization_digits(bits);
    py::dict d;
    d["value"] = r.value.to_double();
    d["value_str"] = r.value.to_string(digits);
    d["quad_err"] = r.quad_err;
    d["tail_err"] = r.tail_err;
    d["t_used"] = r.t_used;
    d["panels"] = r.panels;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "vertical-line integrals of the completed-zeta ratio";

    auto base = py::register_exception<Error>(m, "RhxiError");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
    py::register_exception<NearZeroDivisor>(m, "NearZeroDivisor", base.ptr());
    py::register_exception<NearPoleOnContour>(m, "NearPoleOnContour", base.ptr());
    py::register_exception<MaxPanelsExceeded>(m, "MaxPanelsExceeded", base.ptr());
    py::register_exception<NonFiniteIntegrand>(m, "NonFiniteIntegrand", base.ptr());
    py::register_exception<CalibrationError>(m, "CalibrationError", base.ptr());
    py::register_exception<CircleContainsMultipleZeros>(m, "CircleContainsMultipleZeros",
                                                        base.ptr());
    py::register_exception<NoSignChange>(m, "NoSignChange", base.ptr());

    m.def(
        "zeta",
        [](std::complex<double> s, long bits, double tol) {
            auto ctx = make_ctx(bits, tol);
            return eval_dict(special::zeta(from_std(s, ctx.working_prec()), ctx), bits);
        },
        py::arg("s"), py::arg("precision_bits") = 256, py::arg("tol") = 1e-10);

    m.def(
        "xi",
        [](std::complex<double> s, long bits, double tol) {
            auto ctx = make_ctx(bits, tol);
            return eval_dict(special::xi(from_std(s, ctx.working_prec()), ctx), bits);
        },
        py::arg("s"), py::arg("precision_bits") = 256, py::arg("tol") = 1e-10);

    m.def(
        "f_ratio",
        [](std::complex<double> s, long bits, double tol) {
            auto ctx = make_ctx(bits, tol);
            return eval_dict(special::f_ratio(from_std(s, ctx.working_prec()), ctx), bits);
        },
        py::arg("s"), py::arg("precision_bits") = 256, py::arg("tol") = 1e-10);

    m.def(
        "log_gamma",
        [](std::complex<double> z, long bits, double tol) {
            auto ctx = make_ctx(bits, tol);
            return eval_dict(special::log_gamma(from_std(z, ctx.working_prec()), ctx), bits);
        },
        py::arg("z"), py::arg("precision_bits") = 256, py::arg("tol") = 1e-10);

    m.def(
        "i_of_eps",
        [](double eps, double tol, long bits, double t_cap) {
            auto ctx = make_ctx(bits, tol);
            quadrature::LineOptions lo;
            lo.tol = tol;
            lo.t_override = t_cap;
            return integral_dict(quadrature::i_of_eps(eps, ctx, lo), bits);
        },
        py::arg("eps"), py::arg("tol") = 1e-8, py::arg("precision_bits") = 256,
        py::arg("t_cap") = 0.0);

    m.def(
        "reference_value",
        [](double tol, long bits) {
            auto ctx = make_ctx(bits, tol);
            quadrature::LineOptions lo;
            lo.tol = tol;
            return integral_dict(quadrature::reference_value(ctx, lo), bits);
        },
        py::arg("tol") = 1e-8, py::arg("precision_bits") = 256);

    m.def(
        "j_of_eps",
        [](double eps, double tol, long bits) {
            auto ctx = make_ctx(bits, tol);
            quadrature::LineOptions lo;
            lo.tol = tol;
            return integral_dict(quadrature::j_of_eps(eps, ctx, lo), bits);
        },
        py::arg("eps"), py::arg("tol") = 1e-10, py::arg("precision_bits") = 256);

    m.def(
        "closed_form_j",
        [](long bits) {
            auto ctx = make_ctx(bits, 1e-10);
            Real v = quadrature::closed_form_j(ctx);
            py::dict d;
            d["value"] = v.to_double();
            d["value_str"] = v.to_string(report::serialization_digits(bits));
            return d;
        },
        py::arg("precision_bits") = 256);

    m.def(
        "scan_zeros",
        [](double t_max, long bits) {
            auto ctx = make_ctx(bits, 1e-10);
            auto zl = zeros::scan_zeros(t_max, 0.25, ctx);
            const int digits = report::serialization_digits(bits);
            py::list out;
            for (std::size_t i = 0; i < zl.ordinates.size(); ++i) {
                py::dict d;
                d["ordinate"] = zl.ordinates[i].to_double();
                d["ordinate_str"] = zl.ordinates[i].to_string(digits);
                d["radius"] = zl.radii[i].to_double();
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("t_max"), py::arg("precision_bits") = 256);

    m.def(
        "residue_at",
        [](std::complex<double> rho, long bits, double radius) {
            auto ctx = make_ctx(bits, 1e-10);
            auto est = sweep::residue_at(from_std(rho, ctx.working_prec()), ctx, radius);
            py::dict d;
            d["residue"] = to_std(est.residue);
            d["cross_check"] = to_std(est.cross_check);
            d["winding"] = est.winding;
            d["err"] = est.err;
            return d;
        },
        py::arg("rho"), py::arg("precision_bits") = 256, py::arg("radius") = 0.0);

    m.def("default_eps_grid", &sweep::default_eps_grid);

    m.def(
        "sweep",
        [](const std::vector<double>& grid, double tol, long bits, double threshold,
           py::object inject) {
            auto ctx = make_ctx(bits, tol);
            quadrature::LineTerm term;
            sweep::SweepOptions so;
            so.tol = tol;
            so.threshold = threshold;
            if (!inject.is_none()) {
                auto pair = inject.cast<std::pair<std::complex<double>, std::complex<double>>>();
                term = sweep::inject_pole(from_std(pair.first, ctx.working_prec()),
                                          from_std(pair.second, ctx.working_prec()));
                so.extra = &term;
            }
            auto res = sweep::sweep(grid, ctx, so);
            const int digits = report::serialization_digits(bits);
            py::dict d;
            py::list eps, values, value_strs, errs, ts, failed, jumps;
            for (std::size_t i = 0; i < res.eps_grid.size(); ++i) {
                eps.append(res.eps_grid[i]);
                values.append(res.values[i].to_double());
                value_strs.append(res.values[i].to_string(digits));
                errs.append(res.err_bounds[i]);
                ts.append(res.t_used[i]);
                failed.append(static_cast<bool>(res.failed[i]));
            }
            for (const auto& j : res.jumps) {
                py::dict jd;
                jd["eps_lo"] = j.eps_lo;
                jd["eps_hi"] = j.eps_hi;
                jd["delta"] = j.delta.to_double();
                jd["significance"] = j.significance;
                jumps.append(std::move(jd));
            }
            d["eps"] = std::move(eps);
            d["values"] = std::move(values);
            d["value_strs"] = std::move(value_strs);
            d["err_bounds"] = std::move(errs);
            d["t_used"] = std::move(ts);
            d["failed"] = std::move(failed);
            d["reference"] = res.reference.to_double();
            d["reference_str"] = res.reference.to_string(digits);
            d["reference_err"] = res.reference_err;
            d["jumps"] = std::move(jumps);
            return d;
        },
        py::arg("eps_grid"), py::arg("tol") = 1e-8, py::arg("precision_bits") = 256,
        py::arg("threshold") = 5.0, py::arg("inject") = py::none());

    m.attr("__version__") = "0.1.0";
}
