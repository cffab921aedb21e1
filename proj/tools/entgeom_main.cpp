// entgeom: analyze entanglement profiles of pure N-party states and run
// seeded Monte Carlo campaigns over the constraint regions.
//
// Exit codes: 0 success, 1 input/parse error, 2 constraint or numerical
// anomaly (analyze found a violated constraint, or a campaign found
// violations).

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "entgeom/density.hpp"
#include "entgeom/geometry.hpp"
#include "entgeom/inequalities.hpp"
#include "entgeom/io.hpp"
#include "entgeom/montecarlo.hpp"
#include "entgeom/schmidt.hpp"
#include "entgeom/state.hpp"

namespace {

using namespace entgeom;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitAnomaly = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw ParseError("cannot open output file: " + out_path);
    f << text;
}

struct AnalyzeConfig {
    std::string input;
    std::string state_name;
    std::vector<int> dims;
    std::string out;
    std::string format = "json";
    bool renormalize = false;
};

PureState load_analyze_state(const AnalyzeConfig& cfg) {
    PureState st;
    if (!cfg.input.empty()) {
        st = load_state_file(cfg.input);
    } else if (!cfg.state_name.empty()) {
        if (cfg.dims.empty())
            throw ParseError("--state requires --dims");
        st = named_state(cfg.state_name, cfg.dims);
    } else {
        throw ParseError("need --input or --state");
    }
    if (cfg.renormalize) st = renormalized(st);
    validate(st);
    return st;
}

ordered_json constraint_to_json(const ConstraintReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["margin"] = r.margin;
    j["satisfied"] = r.satisfied;
    return j;
}

int cmd_analyze(const AnalyzeConfig& cfg) {
    if (cfg.format != "json")
        throw ParseError("analyze supports --format json only");
    const PureState st = load_analyze_state(cfg);
    const PartyDims& pd = st.dims;
    const EntanglementProfile prof = profile(st);

    std::vector<ConstraintReport> constraints;
    if (pd.all_qubits() && pd.count() >= 2) {
        for (const auto& r : polygon_check(prof.y)) constraints.push_back(r);
    } else if (pd.count() == 3 && pd.dims() == std::vector<int>{2, 2, 4}) {
        auto [a, b] = qutetrit_check(prof.y[0], prof.y[1], prof.y[2]);
        constraints.push_back(a);
        constraints.push_back(b);
    } else if (pd.count() == 2 && pd.dims() == std::vector<int>{2, 3}) {
        const double res = qubit_qutrit_curve_residual(prof.y[0], prof.y[1]);
        constraints.emplace_back("qubit-qutrit-curve", -std::abs(res));
    }

    const SchmidtForm schmidt = to_schmidt(st);
    double max_offdiag = 0.0;
    for (int n = 0; n < pd.count(); ++n)
        max_offdiag =
            std::max(max_offdiag, partial_trace(schmidt.state, {n}).max_offdiag());

    ordered_json j;
    j["dims"] = pd.dims();
    j["q"] = prof.q;
    j["y"] = prof.y;
    j["schmidt_weight"] = prof.schmidt_weight;
    j["entropy"] = prof.entropy;
    auto& cons = j["constraints"] = ordered_json::array();
    for (const auto& r : constraints) cons.push_back(constraint_to_json(r));
    j["schmidt_max_offdiag"] = max_offdiag;

    if (pd.all_qubits()) {
        std::vector<double> i1(static_cast<std::size_t>(pd.count()));
        for (int n = 0; n < pd.count(); ++n) i1[static_cast<std::size_t>(n)] = i1_margin(schmidt, n);
        j["i1_margins"] = i1;
        for (double m : i1)
            if (m < -1e-9) constraints.emplace_back("i1", m);
    }

    if (pd.all_qubits() && pd.count() == 3) {
        const PartialCom pc = partial_coms(schmidt);
        ordered_json p;
        p["g"] = pc.g;
        p["G"] = pc.G;
        p["v"] = pc.v;
        p["V"] = pc.V;
        p["v_defined"] = pc.v_defined;
        p["V_defined"] = pc.V_defined;
        if (pc.kappa) p["kappa"] = *pc.kappa;
        j["partial_com"] = p;
    }
    j["version"] = ENTGEOM_VERSION;
    emit(j.dump(2) + "\n", cfg.out);

    for (const auto& r : constraints)
        if (!r.satisfied) return kExitAnomaly;
    return kExitOk;
}

struct CampaignConfig {
    std::vector<int> dims;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
    std::string constraints;  // empty -> default for dims
    std::string region;
    int resolution = 0;
    std::string out;
    std::string format = "json";
    int threads = 1;
};

// Shared tail for campaign/volume: the JSON report goes to stdout; with
// --format csv the per-sample stream is the primary artifact and lands in
// --out (or stdout when no --out was given, suppressing the report there).
int emit_report(const CampaignReport& report, const std::string& csv,
                const CampaignConfig& cfg) {
    const std::string json = campaign_report_to_json(report);
    if (cfg.format == "csv") {
        emit(csv, cfg.out);
        if (!cfg.out.empty()) std::cout << json;
    } else {
        emit(json, cfg.out);
    }
    return report.violation_count == 0 ? kExitOk : kExitAnomaly;
}

int cmd_campaign(const CampaignConfig& cfg) {
    const PartyDims pd(cfg.dims);
    const ConstraintSet set = cfg.constraints.empty()
                                  ? default_constraint_set(pd)
                                  : parse_constraint_set(cfg.constraints);
    CampaignOptions opts;
    opts.threads = cfg.threads;
    std::string csv;
    if (cfg.format == "csv") opts.csv_out = &csv;
    const CampaignReport report =
        violation_campaign(pd, cfg.samples, cfg.seed, set, opts);
    return emit_report(report, csv, cfg);
}

int cmd_volume(const CampaignConfig& cfg) {
    CampaignOptions opts;
    opts.threads = cfg.threads;
    std::string csv;
    if (cfg.format == "csv") opts.csv_out = &csv;
    const CampaignReport report =
        region_volume(cfg.region, cfg.samples, cfg.seed, opts);
    const std::string json = campaign_report_to_json(report);
    if (cfg.format == "csv") {
        emit(csv, cfg.out);
        if (!cfg.out.empty()) std::cout << json;
    } else {
        emit(json, cfg.out);
    }
    return kExitOk;  // misses are expected, not an anomaly
}

int cmd_boundary(const CampaignConfig& cfg) {
    const std::vector<BoundaryRow> rows = boundary_scan(cfg.region, cfg.resolution);
    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const BoundaryRow& r : rows) {
            ordered_json row;
            row["y1"] = r.y1;
            row["y2"] = r.y2;
            row["y3_lower"] = r.y3_lower;
            row["y3_upper"] = r.y3_upper;
            arr.push_back(row);
        }
        emit(arr.dump(2) + "\n", cfg.out);
    } else {
        emit(boundary_rows_to_csv(rows), cfg.out);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Purity-based entanglement measures, constraint checks, and "
                 "Monte Carlo region campaigns for pure N-party states"};
    app.require_subcommand(1);

    AnalyzeConfig ac;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Entanglement profile and constraint margins of one state");
    analyze->add_option("--input", ac.input, "State file (JSON)");
    analyze->add_option("--state", ac.state_name, "Named fixture: ghz, w, product, bell");
    analyze->add_option("--dims", ac.dims, "Party dimensions, e.g. 2,2,2")->delimiter(',');
    analyze->add_option("--out", ac.out, "Output path (default stdout)");
    analyze->add_option("--format", ac.format, "json")->check(CLI::IsMember({"json", "csv"}));
    analyze->add_flag("--renormalize", ac.renormalize, "Rescale the input to unit norm");

    CampaignConfig cc;
    CLI::App* campaign = app.add_subcommand(
        "campaign", "Constraint-violation sweep over Haar-random states");
    campaign->add_option("--dims", cc.dims, "Party dimensions")->delimiter(',')->required();
    campaign->add_option("--samples", cc.samples, "Number of random states")->required();
    campaign->add_option("--seed", cc.seed, "PRNG seed (required; no time seeding)")->required();
    campaign->add_option("--constraints", cc.constraints,
                         "polygon, qutetrit, curve, or i1 (default: by dims)");
    campaign->add_option("--threads", cc.threads, "Worker threads")->check(CLI::PositiveNumber);
    campaign->add_option("--out", cc.out, "Output path (default stdout)");
    campaign->add_option("--format", cc.format, "json report or csv sample stream")
        ->check(CLI::IsMember({"json", "csv"}));

    CampaignConfig vc;
    CLI::App* volume = app.add_subcommand(
        "volume", "Hit-or-miss Monte Carlo volume of a constraint region");
    volume->add_option("--region", vc.region,
                       "polygon-N, qutetrit, classical-pair, or intersection")->required();
    volume->add_option("--samples", vc.samples, "Number of sample points")->required();
    volume->add_option("--seed", vc.seed, "PRNG seed (required; no time seeding)")->required();
    volume->add_option("--threads", vc.threads, "Worker threads")->check(CLI::PositiveNumber);
    volume->add_option("--out", vc.out, "Output path (default stdout)");
    volume->add_option("--format", vc.format, "json report or csv sample stream")
        ->check(CLI::IsMember({"json", "csv"}));

    CampaignConfig bc;
    CLI::App* boundary = app.add_subcommand(
        "boundary", "Grid of allowed-region boundary surfaces over (Y1, Y2)");
    boundary->add_option("--region", bc.region, "polygon-3, qutetrit, or classical-pair")
        ->required();
    boundary->add_option("--resolution", bc.resolution, "Grid points per axis (>= 2)")
        ->required();
    boundary->add_option("--out", bc.out, "Output path (default stdout)");
    bc.format = "csv";
    boundary->add_option("--format", bc.format, "csv grid (default) or json")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(ac);
        if (campaign->parsed()) return cmd_campaign(cc);
        if (volume->parsed()) return cmd_volume(vc);
        return cmd_boundary(bc);
    } catch (const NegativeRadicand& e) {
        std::cerr << "entgeom: " << e.what() << "\n";
        return kExitAnomaly;
    } catch (const NoConvergence& e) {
        std::cerr << "entgeom: " << e.what() << "\n";
        return kExitAnomaly;
    } catch (const Error& e) {
        std::cerr << "entgeom: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "entgeom: " << e.what() << "\n";
        return kExitInputError;
    }
}
