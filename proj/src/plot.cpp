#include "rhxi/report.hpp"

#include "rhxi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace rhxi::report {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string label(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

std::string render_sweep_svg(const CsvSweep& data, int width, int height) {
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < data.eps.size(); ++i)
        if (!data.failed[i] && std::isfinite(data.value[i]) && std::isfinite(data.err_bound[i]))
            usable.push_back(i);
    if (usable.empty())
        throw UsageError("no plottable rows (all failed or non-finite)");

    double x_lo = data.eps[usable.front()], x_hi = x_lo;
    double y_lo = data.value[usable.front()] - data.err_bound[usable.front()];
    double y_hi = data.value[usable.front()] + data.err_bound[usable.front()];
    for (std::size_t i : usable) {
        x_lo = std::min(x_lo, data.eps[i]);
        x_hi = std::max(x_hi, data.eps[i]);
        y_lo = std::min(y_lo, data.value[i] - data.err_bound[i]);
        y_hi = std::max(y_hi, data.value[i] + data.err_bound[i]);
    }
    if (x_hi - x_lo < 1e-12) {
        x_lo -= 0.01;
        x_hi += 0.01;
    }
    if (y_hi - y_lo < 1e-15 * std::max(1.0, std::fabs(y_hi))) {
        const double pad = std::max(1e-15 * std::fabs(y_hi), 1e-15);
        y_lo -= pad;
        y_hi += pad;
    }
    // 5% breathing room
    const double xr = x_hi - x_lo, yr = y_hi - y_lo;
    x_lo -= 0.05 * xr;
    x_hi += 0.05 * xr;
    y_lo -= 0.05 * yr;
    y_hi += 0.05 * yr;

    const double px0 = 80, px1 = width - 25;
    const double py0 = height - 55, py1 = 20;  // y axis grows upward
    auto X = [&](double e) { return px0 + (e - x_lo) / (x_hi - x_lo) * (px1 - px0); };
    auto Y = [&](double v) { return py0 + (v - y_lo) / (y_hi - y_lo) * (py1 - py0); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    s += "<line x1=\"" + num(px0) + "\" y1=\"" + num(py0) + "\" x2=\"" + num(px1) + "\" y2=\"" +
         num(py0) + "\"/>\n";
    s += "<line x1=\"" + num(px0) + "\" y1=\"" + num(py0) + "\" x2=\"" + num(px0) + "\" y2=\"" +
         num(py1) + "\"/>\n";
    s += "</g>\n";

    // ticks
    s += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double fx = x_lo + (x_hi - x_lo) * k / 4.0;
        const double fy = y_lo + (y_hi - y_lo) * k / 4.0;
        s += "<line stroke=\"black\" x1=\"" + num(X(fx)) + "\" y1=\"" + num(py0) + "\" x2=\"" +
             num(X(fx)) + "\" y2=\"" + num(py0 + 5) + "\"/>\n";
        s += "<text text-anchor=\"middle\" x=\"" + num(X(fx)) + "\" y=\"" + num(py0 + 20) + "\">" +
             label(fx) + "</text>\n";
        s += "<line stroke=\"black\" x1=\"" + num(px0 - 5) + "\" y1=\"" + num(Y(fy)) + "\" x2=\"" +
             num(px0) + "\" y2=\"" + num(Y(fy)) + "\"/>\n";
        s += "<text text-anchor=\"end\" x=\"" + num(px0 - 8) + "\" y=\"" + num(Y(fy) + 4) + "\">" +
             label(fy) + "</text>\n";
    }
    s += "<text text-anchor=\"middle\" x=\"" + num((px0 + px1) / 2) + "\" y=\"" +
         num(height - 12.0) + "\">epsilon</text>\n";
    s += "<text text-anchor=\"middle\" transform=\"translate(18 " + num((py0 + py1) / 2) +
         ") rotate(-90)\">I(epsilon)</text>\n";
    s += "</g>\n";

    // error bars under the line so markers stay visible
    s += "<g stroke=\"#888888\" stroke-width=\"1\">\n";
    for (std::size_t i : usable) {
        const double x = X(data.eps[i]);
        const double ylo = Y(data.value[i] - data.err_bound[i]);
        const double yhi = Y(data.value[i] + data.err_bound[i]);
        s += "<line x1=\"" + num(x) + "\" y1=\"" + num(ylo) + "\" x2=\"" + num(x) + "\" y2=\"" +
             num(yhi) + "\"/>\n";
        s += "<line x1=\"" + num(x - 3) + "\" y1=\"" + num(ylo) + "\" x2=\"" + num(x + 3) +
             "\" y2=\"" + num(ylo) + "\"/>\n";
        s += "<line x1=\"" + num(x - 3) + "\" y1=\"" + num(yhi) + "\" x2=\"" + num(x + 3) +
             "\" y2=\"" + num(yhi) + "\"/>\n";
    }
    s += "</g>\n";

    if (usable.size() > 1) {
        s += "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i : usable)
            s += num(X(data.eps[i])) + "," + num(Y(data.value[i])) + " ";
        s += "\"/>\n";
    }
    s += "<g fill=\"#1f6fb2\">\n";
    for (std::size_t i : usable)
        s += "<circle cx=\"" + num(X(data.eps[i])) + "\" cy=\"" + num(Y(data.value[i])) +
             "\" r=\"3\"/>\n";
    s += "</g>\n";

    // failed points get a red marker on the axis so gaps are explained
    s += "<g stroke=\"#c0392b\" stroke-width=\"1.5\">\n";
    for (std::size_t i = 0; i < data.eps.size(); ++i) {
        if (!data.failed[i])
            continue;
        const double x = X(data.eps[i]);
        s += "<line x1=\"" + num(x - 4) + "\" y1=\"" + num(py0 - 4) + "\" x2=\"" + num(x + 4) +
             "\" y2=\"" + num(py0 + 4) + "\"/>\n";
        s += "<line x1=\"" + num(x - 4) + "\" y1=\"" + num(py0 + 4) + "\" x2=\"" + num(x + 4) +
             "\" y2=\"" + num(py0 - 4) + "\"/>\n";
    }
    s += "</g>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace rhxi::report
