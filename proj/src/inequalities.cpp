#include "entgeom/inequalities.hpp"

#include <algorithm>
#include <cmath>

namespace entgeom {

namespace {

void check_unit_interval(double y, const char* what) {
    if (y < 0.0 || y > 1.0)
        throw OutOfRange(std::string(what) + ": value outside [0,1]");
}

} // namespace

double heaviside_ramp(double x) {
    return std::max(0.0, x);
}

std::vector<ConstraintReport> polygon_check(const std::vector<double>& y) {
    double total = 0.0;
    for (double yn : y) {
        check_unit_interval(yn, "polygon_check");
        total += yn;
    }
    std::vector<ConstraintReport> out;
    out.reserve(y.size());
    for (std::size_t n = 0; n < y.size(); ++n)
        out.emplace_back("polygon-" + std::to_string(n + 1), total - 2.0 * y[n]);
    return out;
}

double polygon_min_margin(const std::vector<double>& y) {
    // margin_n = total - 2 y_n, minimized at the largest component
    double total = 0.0, ymax = 0.0;
    for (double yn : y) {
        total += yn;
        ymax = std::max(ymax, yn);
    }
    return total - 2.0 * ymax;
}

std::pair<ConstraintReport, ConstraintReport> qutetrit_check(double y1, double y2, double y34) {
    check_unit_interval(y1, "qutetrit_check");
    check_unit_interval(y2, "qutetrit_check");
    check_unit_interval(y34, "qutetrit_check");
    const double g = 1.0 - y34;
    const double ma =
        1.0 - std::sqrt(heaviside_ramp(3.0 * g * g - 1.0) / 2.0) - std::abs(y1 - y2);
    const double h = heaviside_ramp(1.0 - y1 - y2);
    const double mb =
        1.0 - std::sqrt(((1.0 - y1) * (1.0 - y1) + (1.0 - y2) * (1.0 - y2) + h * h) / 3.0) - y34;
    return {ConstraintReport("qutetrit-diff", ma), ConstraintReport("qutetrit-pair", mb)};
}

double qutetrit_min_margin(double y1, double y2, double y34) {
    const auto [a, b] = qutetrit_check(y1, y2, y34);
    return std::min(a.margin, b.margin);
}

double qubit_qutrit_curve_residual(double y1, double y2) {
    check_unit_interval(y1, "qubit_qutrit_curve_residual");
    check_unit_interval(y2, "qubit_qutrit_curve_residual");
    const double q1 = 1.0 - y1, q2 = 1.0 - y2;
    return (q1 * q1 + 1.0) / 2.0 - (2.0 * q2 * q2 + 1.0) / 3.0;
}

ConstraintReport classical_pair_check(double y1, double y2, double y34) {
    check_unit_interval(y1, "classical_pair_check");
    check_unit_interval(y2, "classical_pair_check");
    check_unit_interval(y34, "classical_pair_check");
    const double lower = y34 - std::abs(y1 - y2) / 2.0;
    const double upper = (y1 + y2) / 2.0 - y34;
    return ConstraintReport("classical-pair", std::min(lower, upper));
}

} // namespace entgeom
