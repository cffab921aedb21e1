// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failures. argv[1] must point at the entgeom CLI binary (used by the
// determinism criterion).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "entgeom/density.hpp"
#include "entgeom/geometry.hpp"
#include "entgeom/inequalities.hpp"
#include "entgeom/io.hpp"
#include "entgeom/montecarlo.hpp"
#include "entgeom/schmidt.hpp"
#include "entgeom/state.hpp"
#include "oracles.hpp"

using namespace entgeom;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail
              << "\n";
    if (!ok) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(double x) { return format_g17(x); }

// ---------------------------------------------------------------- criterion 1
void volumes_vs_reference() {
    struct Case {
        const char* region;
        double reference;
    };
    const std::array<Case, 4> cases{{{"polygon-3", 0.5},
                                     {"qutetrit", 0.3457},
                                     {"classical-pair", 1.0 / 3.0},
                                     {"intersection", 0.3024}}};
    const std::int64_t n = 10'000'000;
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const CampaignReport r = region_volume(c.region, n, 2);
        const double dt = elapsed_s(t0);
        const double dev = std::abs(*r.volume_estimate - c.reference);
        const bool within = dev <= 4.0 * *r.standard_error && dt <= 60.0;
        ok = ok && within;
        detail += std::string(c.region) + " est " + fmt(*r.volume_estimate) +
                  " ref " + fmt(c.reference) + " dev/se " +
                  fmt(dev / *r.standard_error) + " (" + fmt(dt) + " s); ";
    }
    report(1, ok, "volume reproduction at 1e7 samples within 4 se: " + detail);
}

// ---------------------------------------------------------------- criterion 2
void polygon_hypervolume_formula() {
    bool ok = true;
    std::string detail;
    for (int nparties = 3; nparties <= 5; ++nparties) {
        double fact = 1.0;
        for (int k = 2; k < nparties; ++k) fact *= k;
        const double closed = 1.0 - 1.0 / fact;
        const CampaignReport r =
            region_volume("polygon-" + std::to_string(nparties), 10'000'000, 3);
        const double dev = std::abs(*r.volume_estimate - closed);
        ok = ok && dev <= 4.0 * *r.standard_error;
        detail += "N=" + std::to_string(nparties) + " est " +
                  fmt(*r.volume_estimate) + " closed " + fmt(closed) + "; ";
    }
    report(2, ok, "polygon-N volume matches 1-1/(N-1)!: " + detail);
}

// ---------------------------------------------------------------- criterion 3
void violation_free_campaigns() {
    const std::vector<std::vector<int>> profiles{{2, 2, 2}, {2, 2, 2, 2}, {2, 2, 4}};
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& dims : profiles) {
        const PartyDims pd(dims);
        const CampaignReport r =
            violation_campaign(pd, 1'000'000, 1, default_constraint_set(pd));
        ok = ok && r.violation_count == 0 && r.min_margin >= -1e-9;
        detail += r.target + " violations " + std::to_string(r.violation_count) +
                  " min margin " + fmt(r.min_margin) + "; ";
    }
    const double dt = elapsed_s(t0);
    ok = ok && dt <= 300.0;
    report(3, ok,
           "1e6-state campaigns violation-free in " + fmt(dt) + " s: " + detail);
}

// ---------------------------------------------------------------- criterion 4
void curve_exactness() {
    const PartyDims pd({2, 3});
    Rng rng(7);
    double worst = 0.0;
    for (int i = 0; i < 100'000; ++i) {
        const PureState st = haar_random_state_from(pd, rng);
        const double y1 = 1.0 - q_from_purity(reduced_purity(st, 0), 2);
        const double y2 = 1.0 - q_from_purity(reduced_purity(st, 1), 3);
        worst = std::max(worst, std::abs(qubit_qutrit_curve_residual(y1, y2)));
    }
    report(4, worst <= 1e-9,
           "qubit-qutrit curve residual over 1e5 states, max " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 5
void com_norm_identity() {
    Rng rng(9);
    double worst = 0.0;
    for (int m = 2; m <= 8; ++m) {
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<double> lambda(static_cast<std::size_t>(m));
            double total = 0.0;
            for (double& l : lambda) {
                l = -std::log(1.0 - rng.uniform());  // exponential -> Dirichlet
                total += l;
            }
            double p = 0.0;
            for (double& l : lambda) {
                l /= total;
                p += l * l;
            }
            const auto com = single_party_com(lambda);
            double nrm = 0.0;
            for (double x : com) nrm += x * x;
            worst = std::max(worst, std::abs(std::sqrt(nrm) - q_from_purity(p, m)));
        }
    }
    report(5, worst <= 1e-10,
           "||single_party_com|| vs q_measure, M=2..8, max dev " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 6
bool in_parity_tetrahedron(const std::vector<double>& q, int parity, double tol) {
    for (int i = 0; i < 8; ++i) {
        const int b1 = (i >> 2) & 1, b2 = (i >> 1) & 1, b3 = i & 1;
        if ((b1 + b2 + b3) % 2 != parity) continue;
        const double dot = q[0] * (b1 ? -1.0 : 1.0) + q[1] * (b2 ? -1.0 : 1.0) +
                           q[2] * (b3 ? -1.0 : 1.0);
        if ((1.0 + dot) / 4.0 < -tol) return false;
    }
    return true;
}

void collinearity_and_containment() {
    const PartyDims pd({2, 2, 2});
    Rng rng(11);
    double worst_cross = 0.0;
    bool contained = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const SchmidtForm sf = to_schmidt(oracles::random_state(pd, rng));
        const PartialCom pc = partial_coms(sf);
        if (pc.v_defined && pc.V_defined) {
            const std::array<double, 3> cr{pc.v[1] * pc.V[2] - pc.v[2] * pc.V[1],
                                           pc.v[2] * pc.V[0] - pc.v[0] * pc.V[2],
                                           pc.v[0] * pc.V[1] - pc.v[1] * pc.V[0]};
            const double nv = std::sqrt(pc.v[0] * pc.v[0] + pc.v[1] * pc.v[1] +
                                        pc.v[2] * pc.v[2]);
            const double nV = std::sqrt(pc.V[0] * pc.V[0] + pc.V[1] * pc.V[1] +
                                        pc.V[2] * pc.V[2]);
            const double ncr =
                std::sqrt(cr[0] * cr[0] + cr[1] * cr[1] + cr[2] * cr[2]);
            worst_cross =
                std::max(worst_cross, ncr / std::max(1.0, nv * nV));
        }
        const auto q = hypercube_com(sf);
        contained = contained && (in_parity_tetrahedron(q, 0, 1e-9) ||
                                  in_parity_tetrahedron(q, 1, 1e-9));
    }
    report(6, worst_cross <= 1e-9 && contained,
           "collinearity max ||v x V||/max(1,|v||V|) = " + fmt(worst_cross) +
               ", tetrahedra-union containment " +
               (contained ? "holds" : "violated"));
}

// ---------------------------------------------------------------- criterion 7
void i1_nonnegativity() {
    bool ok = true;
    std::string detail;
    for (int nparties = 3; nparties <= 5; ++nparties) {
        const PartyDims pd(std::vector<int>(static_cast<std::size_t>(nparties), 2));
        Rng rng(13 + static_cast<std::uint64_t>(nparties));
        double worst = 1e300;
        for (int i = 0; i < 1'000'000; ++i) {
            const PureState st = haar_random_state_from(pd, rng);
            double qsum = 0.0, qmin = 1e300;
            for (int n = 0; n < nparties; ++n) {
                const double q = q_from_purity(reduced_purity(st, n), 2);
                qsum += q;
                qmin = std::min(qmin, q);
            }
            worst = std::min(worst, (nparties - 2 + qmin - (qsum - qmin)) / 2.0);
        }
        ok = ok && worst >= -1e-10;
        detail += "N=" + std::to_string(nparties) + " min I1 " + fmt(worst) + "; ";

        // equality case: product fixtures have Q_n = 1 everywhere, so I1 = 0
        const SchmidtForm prod = to_schmidt(named_state("product", pd.dims()));
        double worst_prod = 0.0;
        for (int n = 0; n < nparties; ++n)
            worst_prod = std::max(worst_prod, std::abs(i1_margin(prod, n)));
        ok = ok && worst_prod <= 1e-12;
        detail += "product |I1| " + fmt(worst_prod) + "; ";
    }
    report(7, ok, "I1 >= -1e-10 over 1e6 states per N: " + detail);
}

// ---------------------------------------------------------------- criterion 8
void oracle_equivalence() {
    Rng rng(17);
    double worst_trace = 0.0;
    for (const auto& dims : oracles::all_dims_profiles(64)) {
        const PartyDims pd(dims);
        if (pd.count() < 2) continue;
        const PureState st = oracles::random_state(pd, rng);
        const int subsets = 1 << pd.count();
        for (int mask = 1; mask < subsets - 1; ++mask) {
            std::vector<int> keep;
            for (int n = 0; n < pd.count(); ++n)
                if (mask & (1 << n)) keep.push_back(n);
            worst_trace = std::max(
                worst_trace, oracles::max_entry_dev(partial_trace(st, keep),
                                                    oracles::naive_partial_trace(st, keep)));
        }
    }

    double worst_recon = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_u64() % 15);  // 2..16
        const DensityMatrix h = oracles::random_hermitian(m, rng);
        const EigenDecomposition e = eigh(h);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                cplx s = 0.0;
                for (int t = 0; t < m; ++t)
                    s += e.eigenvalues[static_cast<std::size_t>(t)] *
                         e.eigenvectors[static_cast<std::size_t>(j) * m + t] *
                         std::conj(e.eigenvectors[static_cast<std::size_t>(k) * m + t]);
                worst_recon = std::max(worst_recon, std::abs(s - h.at(j, k)));
            }
    }
    report(8, worst_trace <= 1e-12 && worst_recon <= 1e-10,
           "partial_trace vs oracle max dev " + fmt(worst_trace) +
               ", eigh reconstruction max dev " + fmt(worst_recon));
}

// ---------------------------------------------------------------- criterion 9
void fixture_table() {
    double worst = 0.0;
    auto track = [&](double got, double want) {
        worst = std::max(worst, std::abs(got - want));
    };

    for (const auto& dims : {std::vector<int>{2, 2, 2}, {2, 2, 2, 2}}) {
        const EntanglementProfile p = profile(named_state("ghz", dims));
        for (double y : p.y) track(y, 1.0);
    }
    for (double y : profile(named_state("w", {2, 2, 2})).y) track(y, 2.0 / 3.0);
    for (double y : profile(named_state("product", {2, 2, 2})).y) track(y, 0.0);

    PartyDims pd23({2, 3});
    PureState bell{pd23, std::vector<cplx>(6, 0.0)};
    const double r2 = 1.0 / std::sqrt(2.0);
    bell.coeffs[pd23.flatten({0, 0})] = r2;
    bell.coeffs[pd23.flatten({1, 1})] = r2;
    const EntanglementProfile pb = profile(bell);
    track(pb.y[0], 1.0);
    track(pb.y[1], 0.5);

    report(9, worst <= 1e-10, "fixture Y table, max dev " + fmt(worst));
}

// --------------------------------------------------------------- criterion 10
std::string g_cli;

int run_cli(const std::string& args, const std::string& out_file) {
    const std::string cmd = g_cli + " " + args + " > " + out_file + " 2>/dev/null";
    return std::system(cmd.c_str());
}

std::string slurp_without_timing(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("wall_time") == std::string::npos) out << line << '\n';
    return out.str();
}

void determinism() {
    bool ok = true;
    std::string detail;
    const std::string dir = "/tmp/entgeom_accept";
    std::system(("mkdir -p " + dir).c_str());

    struct Run {
        const char* label;
        std::string args;
    };
    const std::vector<Run> runs{
        {"campaign-json", "campaign --dims 2,2,2 --samples 20000 --seed 5"},
        {"campaign-json-mt",
         "campaign --dims 2,2,2 --samples 20000 --seed 5 --threads 3"},
        {"campaign-csv",
         "campaign --dims 2,2,4 --samples 5000 --seed 6 --format csv"},
        {"campaign-csv-mt",
         "campaign --dims 2,2,4 --samples 5000 --seed 6 --format csv --threads 3"},
        {"volume-json", "volume --region qutetrit --samples 50000 --seed 7"},
        {"volume-json-mt",
         "volume --region qutetrit --samples 50000 --seed 7 --threads 3"},
        {"boundary-csv", "boundary --region classical-pair --resolution 64"},
        {"analyze-json", "analyze --state w --dims 2,2,2"},
    };
    // pairs of runs whose outputs must agree byte-for-byte (minus timing):
    // each entry repeated, plus single-thread vs multi-thread variants
    std::vector<std::string> first(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const std::string a = dir + "/a_" + std::to_string(i);
        const std::string b = dir + "/b_" + std::to_string(i);
        if (run_cli(runs[i].args, a) != 0 || run_cli(runs[i].args, b) != 0) {
            ok = false;
            detail += std::string(runs[i].label) + " exited nonzero; ";
            continue;
        }
        first[i] = slurp_without_timing(a);
        if (first[i] != slurp_without_timing(b)) {
            ok = false;
            detail += std::string(runs[i].label) + " rerun differs; ";
        }
    }
    const std::vector<std::pair<int, int>> thread_pairs{{0, 1}, {2, 3}, {4, 5}};
    for (auto [a, b] : thread_pairs)
        if (ok && first[static_cast<std::size_t>(a)] != first[static_cast<std::size_t>(b)]) {
            ok = false;
            detail += std::string(runs[static_cast<std::size_t>(a)].label) +
                      " vs --threads 3 differs; ";
        }
    if (detail.empty()) detail = "all reruns and thread variants byte-identical";
    report(10, ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: entgeom_acceptance <path-to-entgeom-cli>\n";
        return 64;
    }
    g_cli = argv[1];

    volumes_vs_reference();
    polygon_hypervolume_formula();
    violation_free_campaigns();
    curve_exactness();
    com_norm_identity();
    collinearity_and_containment();
    i1_nonnegativity();
    oracle_equivalence();
    fixture_table();
    determinism();

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                  : std::to_string(g_failures) + " CRITERIA FAILED")
              << "\n";
    return g_failures;
}
