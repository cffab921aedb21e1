#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entgeom/montecarlo.hpp"
#include "entgeom/state.hpp"

namespace entgeom {

// State file format: { "dims": [2,2,4], "coefficients": [[re,im], ...] }
// with exactly D entries in row-major order; NaN/Inf rejected.
PureState load_state_json(std::istream& in);
PureState load_state_file(const std::string& path);
std::string state_to_json(const PureState& state);

// Report JSON with pinned key order; wall_time_s is the only
// run-to-run-varying field.
std::string campaign_report_to_json(const CampaignReport& report);

std::string boundary_rows_to_csv(const std::vector<BoundaryRow>& rows);

// 17-significant-digit float formatting used by all CSV output
std::string format_g17(double x);

} // namespace entgeom
