#pragma once

#include <string>
#include <vector>

#include "entgeom/errors.hpp"

namespace entgeom {

inline constexpr double kConstraintTol = 1e-9;

struct ConstraintReport {
    std::string name;
    double margin = 0.0;  // >= 0 means satisfied
    bool satisfied = false;

    ConstraintReport() = default;
    ConstraintReport(std::string n, double m)
        : name(std::move(n)), margin(m), satisfied(m >= -kConstraintTol) {}
};

double heaviside_ramp(double x);

// margin_n = sum_{n' != n} Y_{n'} - Y_n
std::vector<ConstraintReport> polygon_check(const std::vector<double>& y);
double polygon_min_margin(const std::vector<double>& y);

// Tight two-qubit + qutetrit bounds; first = |Y1-Y2| bound, second = Y34 bound.
std::pair<ConstraintReport, ConstraintReport> qutetrit_check(double y1, double y2, double y34);
double qutetrit_min_margin(double y1, double y2, double y34);

// Zero for every pure qubit x qutrit state.
double qubit_qutrit_curve_residual(double y1, double y2);

// |Y1-Y2|/2 <= Y34 <= (Y1+Y2)/2
ConstraintReport classical_pair_check(double y1, double y2, double y34);

} // namespace entgeom
