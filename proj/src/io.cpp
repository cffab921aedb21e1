#include "entgeom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>

#include "json.hpp"

namespace entgeom {

using nlohmann::ordered_json;

PureState load_state_json(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError(std::string("state file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("coefficients"))
        throw ParseError("state file: need 'dims' and 'coefficients'");

    std::vector<int> dims;
    for (const auto& d : j.at("dims")) {
        if (!d.is_number_integer())
            throw ParseError("state file: dims must be integers");
        dims.push_back(d.get<int>());
    }
    PartyDims pd(dims);

    std::vector<cplx> coeffs;
    for (const auto& c : j.at("coefficients")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ParseError("state file: coefficients must be [re,im] pairs");
        const double re = c[0].get<double>();
        const double im = c[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError("state file: NaN/Inf coefficient");
        coeffs.emplace_back(re, im);
    }
    if (static_cast<std::int64_t>(coeffs.size()) != pd.total())
        throw DimensionMismatch("state file: expected " + std::to_string(pd.total()) +
                                " coefficients, got " + std::to_string(coeffs.size()));
    return PureState{pd, std::move(coeffs)};
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open state file: " + path);
    return load_state_json(in);
}

std::string state_to_json(const PureState& state) {
    ordered_json j;
    j["dims"] = state.dims.dims();
    auto& arr = j["coefficients"] = ordered_json::array();
    for (const cplx& c : state.coeffs)
        arr.push_back({c.real(), c.imag()});
    return j.dump(2) + "\n";
}

std::string campaign_report_to_json(const CampaignReport& r) {
    ordered_json j;
    j["kind"] = r.kind;
    j["target"] = r.target;
    j["constraint_set"] = r.constraint_set;
    j["seed"] = r.seed;
    j["sample_count"] = r.sample_count;
    j["generator"] = kGeneratorName;
    j["version"] = ENTGEOM_VERSION;
    j["violation_count"] = r.violation_count;
    j["min_margin"] = r.min_margin;
    if (r.volume_estimate) {
        j["volume_estimate"] = *r.volume_estimate;
        j["standard_error"] = *r.standard_error;
    }
    j["wall_time_s"] = r.wall_time_s;
    return j.dump(2) + "\n";
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string boundary_rows_to_csv(const std::vector<BoundaryRow>& rows) {
    std::string out = "y1,y2,y3_lower,y3_upper\n";
    for (const BoundaryRow& r : rows) {
        out += format_g17(r.y1);
        out += ',';
        out += format_g17(r.y2);
        out += ',';
        out += format_g17(r.y3_lower);
        out += ',';
        out += format_g17(r.y3_upper);
        out += '\n';
    }
    return out;
}

} // namespace entgeom
