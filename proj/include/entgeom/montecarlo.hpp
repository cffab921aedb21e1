#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entgeom/density.hpp"
#include "entgeom/rng.hpp"
#include "entgeom/state.hpp"

namespace entgeom {

struct CampaignReport {
    std::string kind;    // "campaign" or "volume"
    std::string target;  // dims string or region id
    std::string constraint_set;
    std::uint64_t seed = 0;
    std::int64_t sample_count = 0;
    std::int64_t violation_count = 0;  // misses for volume campaigns
    double min_margin = 0.0;
    std::optional<double> volume_estimate;
    std::optional<double> standard_error;
    double wall_time_s = 0.0;
};

enum class ConstraintSet { Polygon, Qutetrit, Curve, I1 };

ConstraintSet parse_constraint_set(const std::string& name);
std::string constraint_set_name(ConstraintSet set);

// Default checks for a dims profile; throws IncompatibleConstraintSet when
// nothing applies.
ConstraintSet default_constraint_set(const PartyDims& dims);

// Amplitudes i.i.d. standard complex normal, then normalized (Haar /
// unitarily invariant measure). Deterministic per (dims, seed).
PureState haar_random_state(const PartyDims& dims, std::uint64_t seed);
PureState haar_random_state_from(const PartyDims& dims, Rng& rng);

// tr(rho_n^2) of the single-party reduced state, allocation-light.
double reduced_purity(const PureState& state, int party);

struct CampaignOptions {
    int threads = 1;
    std::string* csv_out = nullptr;  // optional per-sample stream
};

CampaignReport violation_campaign(const PartyDims& dims, std::int64_t n_samples,
                                  std::uint64_t seed, ConstraintSet set,
                                  const CampaignOptions& opts = {});

CampaignReport region_volume(const std::string& region_id, std::int64_t n_samples,
                             std::uint64_t seed, const CampaignOptions& opts = {});

struct BoundaryRow {
    double y1 = 0.0, y2 = 0.0, y3_lower = 0.0, y3_upper = 0.0;
};

std::vector<BoundaryRow> boundary_scan(const std::string& region_id, int resolution);

} // namespace entgeom
