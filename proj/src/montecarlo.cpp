#include "entgeom/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "entgeom/inequalities.hpp"

namespace entgeom {

namespace {

constexpr std::int64_t kChunkSize = 8192;

std::string dims_string(const PartyDims& dims) {
    std::string s;
    for (int d : dims.dims()) {
        if (!s.empty()) s += ',';
        s += std::to_string(d);
    }
    return s;
}

void append_g17(std::string& out, double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out += buf;
}

struct ChunkResult {
    std::int64_t violations = 0;
    std::int64_t hits = 0;  // margin >= 0, used for hit-or-miss volumes
    double min_margin = std::numeric_limits<double>::infinity();
    std::string csv;
};

// Runs fn(rng, sample_index, chunk_csv) over n_samples split into fixed-size
// chunks, each with its own generator; aggregation is in chunk order so
// results are independent of the thread count.
template <class Fn>
ChunkResult run_chunks(std::int64_t n_samples, std::uint64_t seed, int threads,
                       bool want_csv, Fn fn) {
    const std::int64_t n_chunks = (n_samples + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkResult> results(static_cast<std::size_t>(n_chunks));
    const int T = std::max(1, threads);

    auto worker = [&](int t) {
        for (std::int64_t c = t; c < n_chunks; c += T) {
            Rng rng = Rng::for_chunk(seed, static_cast<std::uint64_t>(c));
            ChunkResult& r = results[static_cast<std::size_t>(c)];
            const std::int64_t begin = c * kChunkSize;
            const std::int64_t end = std::min(begin + kChunkSize, n_samples);
            for (std::int64_t i = begin; i < end; ++i) {
                const double margin = fn(rng, i, want_csv ? &r.csv : nullptr);
                r.min_margin = std::min(r.min_margin, margin);
                if (margin < -kConstraintTol) ++r.violations;
                if (margin >= 0.0) ++r.hits;
            }
        }
    };

    if (T == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(T));
        for (int t = 0; t < T; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    ChunkResult total;
    for (ChunkResult& r : results) {
        total.violations += r.violations;
        total.hits += r.hits;
        total.min_margin = std::min(total.min_margin, r.min_margin);
        if (want_csv) total.csv += r.csv;
    }
    return total;
}

void append_csv_row(std::string* csv, std::int64_t idx, const double* y, int ny,
                    double margin) {
    if (!csv) return;
    *csv += std::to_string(idx);
    for (int k = 0; k < ny; ++k) {
        *csv += ',';
        append_g17(*csv, y[k]);
    }
    *csv += ',';
    append_g17(*csv, margin);
    *csv += '\n';
}

struct Region {
    enum Kind { PolygonN, Qutetrit, ClassicalPair, QutetritClassical } kind;
    int n = 3;  // for PolygonN
};

Region parse_region(const std::string& id) {
    if (id.rfind("polygon-", 0) == 0) {
        int n = 0;
        const char* b = id.c_str() + 8;
        auto [p, ec] = std::from_chars(b, id.c_str() + id.size(), n);
        if (ec != std::errc{} || p != id.c_str() + id.size() || n < 2)
            throw UnknownRegion("bad polygon region: " + id);
        return {Region::PolygonN, n};
    }
    if (id == "qutetrit") return {Region::Qutetrit, 3};
    if (id == "classical-pair") return {Region::ClassicalPair, 3};
    if (id == "qutetrit-classical" || id == "intersection")
        return {Region::QutetritClassical, 3};
    throw UnknownRegion("unknown region: " + id);
}

int region_dim(const Region& r) {
    return r.kind == Region::PolygonN ? r.n : 3;
}

double region_margin(const Region& r, const double* y) {
    switch (r.kind) {
        case Region::PolygonN: {
            double total = 0.0, ymax = 0.0;
            for (int k = 0; k < r.n; ++k) {
                total += y[k];
                ymax = std::max(ymax, y[k]);
            }
            return total - 2.0 * ymax;
        }
        case Region::Qutetrit:
            return qutetrit_min_margin(y[0], y[1], y[2]);
        case Region::ClassicalPair:
            return classical_pair_check(y[0], y[1], y[2]).margin;
        case Region::QutetritClassical:
            return std::min(qutetrit_min_margin(y[0], y[1], y[2]),
                            classical_pair_check(y[0], y[1], y[2]).margin);
    }
    return 0.0;
}

} // namespace

ConstraintSet parse_constraint_set(const std::string& name) {
    if (name == "polygon") return ConstraintSet::Polygon;
    if (name == "qutetrit") return ConstraintSet::Qutetrit;
    if (name == "curve") return ConstraintSet::Curve;
    if (name == "i1") return ConstraintSet::I1;
    throw IncompatibleConstraintSet("unknown constraint set: " + name);
}

std::string constraint_set_name(ConstraintSet set) {
    switch (set) {
        case ConstraintSet::Polygon: return "polygon";
        case ConstraintSet::Qutetrit: return "qutetrit";
        case ConstraintSet::Curve: return "curve";
        case ConstraintSet::I1: return "i1";
    }
    return "?";
}

ConstraintSet default_constraint_set(const PartyDims& dims) {
    if (dims.dims() == std::vector<int>{2, 2, 4}) return ConstraintSet::Qutetrit;
    if (dims.dims() == std::vector<int>{2, 3}) return ConstraintSet::Curve;
    return ConstraintSet::Polygon;
}

PureState haar_random_state_from(const PartyDims& dims, Rng& rng) {
    PureState st{dims, std::vector<cplx>(static_cast<std::size_t>(dims.total()))};
    double norm_sq = 0.0;
    for (cplx& c : st.coeffs) {
        c = cplx(rng.normal(), rng.normal());
        norm_sq += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (cplx& c : st.coeffs) c *= inv;
    return st;
}

PureState haar_random_state(const PartyDims& dims, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_state_from(dims, rng);
}

double reduced_purity(const PureState& state, int party) {
    const int N = state.dims.count();
    if (party < 0 || party >= N)
        throw BadPartyIndex("reduced_purity: bad party index");
    const int m = state.dims.dim(party);
    std::int64_t stride = 1;
    for (int n = party + 1; n < N; ++n) stride *= state.dims.dim(n);
    const std::int64_t blocks = state.dims.total() / (stride * m);

    double p = 0.0;
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            cplx s = 0.0;
            for (std::int64_t hi = 0; hi < blocks; ++hi) {
                const cplx* ra = &state.coeffs[(hi * m + a) * stride];
                const cplx* rb = &state.coeffs[(hi * m + b) * stride];
                for (std::int64_t lo = 0; lo < stride; ++lo)
                    s += ra[lo] * std::conj(rb[lo]);
            }
            p += (a == b ? 1.0 : 2.0) * std::norm(s);
        }
    }
    return p;
}

CampaignReport violation_campaign(const PartyDims& dims, std::int64_t n_samples,
                                  std::uint64_t seed, ConstraintSet set,
                                  const CampaignOptions& opts) {
    const int N = dims.count();
    switch (set) {
        case ConstraintSet::Polygon:
            break;
        case ConstraintSet::I1:
            if (!dims.all_qubits())
                throw IncompatibleConstraintSet("i1 needs all-qubit dims");
            break;
        case ConstraintSet::Qutetrit:
            if (dims.dims() != std::vector<int>{2, 2, 4})
                throw IncompatibleConstraintSet("qutetrit set needs dims 2,2,4");
            break;
        case ConstraintSet::Curve:
            if (dims.dims() != std::vector<int>{2, 3})
                throw IncompatibleConstraintSet("curve set needs dims 2,3");
            break;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto eval = [&](Rng& rng, std::int64_t idx, std::string* csv) -> double {
        const PureState st = haar_random_state_from(dims, rng);
        std::vector<double> y(static_cast<std::size_t>(N));
        for (int n = 0; n < N; ++n)
            y[n] = 1.0 - q_from_purity(reduced_purity(st, n), dims.dim(n));
        double margin = 0.0;
        switch (set) {
            case ConstraintSet::Polygon: {
                double total = 0.0, ymax = 0.0;
                for (int n = 0; n < N; ++n) {
                    total += y[n];
                    ymax = std::max(ymax, y[n]);
                }
                margin = total - 2.0 * ymax;
                break;
            }
            case ConstraintSet::I1: {
                // I_n = polygon margin in Y over 2, evaluated per the signed
                // Q sum convention (Q_n >= 0 always holds here)
                double qsum = 0.0, qmin = 1.0;
                for (int n = 0; n < N; ++n) {
                    const double q = 1.0 - y[n];
                    qsum += q;
                    qmin = std::min(qmin, q);
                }
                margin = (N - 2 + qmin - (qsum - qmin)) / 2.0;
                break;
            }
            case ConstraintSet::Qutetrit:
                margin = qutetrit_min_margin(y[0], y[1], y[2]);
                break;
            case ConstraintSet::Curve:
                margin = -std::abs(qubit_qutrit_curve_residual(y[0], y[1]));
                break;
        }
        append_csv_row(csv, idx, y.data(), N, margin);
        return margin;
    };

    ChunkResult total =
        run_chunks(n_samples, seed, opts.threads, opts.csv_out != nullptr, eval);
    if (opts.csv_out) *opts.csv_out = std::move(total.csv);

    CampaignReport rep;
    rep.kind = "campaign";
    rep.target = dims_string(dims);
    rep.constraint_set = constraint_set_name(set);
    rep.seed = seed;
    rep.sample_count = n_samples;
    rep.violation_count = total.violations;
    rep.min_margin = total.min_margin;
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CampaignReport region_volume(const std::string& region_id, std::int64_t n_samples,
                             std::uint64_t seed, const CampaignOptions& opts) {
    const Region region = parse_region(region_id);
    const int dim = region_dim(region);
    const auto t0 = std::chrono::steady_clock::now();

    auto eval = [&](Rng& rng, std::int64_t idx, std::string* csv) -> double {
        double y[16];
        for (int k = 0; k < dim; ++k) y[k] = rng.uniform();
        const double margin = region_margin(region, y);
        append_csv_row(csv, idx, y, dim, margin);
        return margin;
    };

    ChunkResult total =
        run_chunks(n_samples, seed, opts.threads, opts.csv_out != nullptr, eval);
    if (opts.csv_out) *opts.csv_out = std::move(total.csv);

    // hit-or-miss: a sample is inside iff its margin is nonnegative
    CampaignReport rep;
    rep.kind = "volume";
    rep.target = region_id;
    rep.constraint_set = "region";
    rep.seed = seed;
    rep.sample_count = n_samples;
    rep.min_margin = total.min_margin;
    rep.violation_count = n_samples - total.hits;
    const double p = static_cast<double>(total.hits) / static_cast<double>(n_samples);
    rep.volume_estimate = p;
    rep.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples));
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<BoundaryRow> boundary_scan(const std::string& region_id, int resolution) {
    const Region region = parse_region(region_id);
    if (resolution < 2)
        throw OutOfRange("boundary_scan: resolution must be >= 2");

    auto bounds = [&](double y1, double y2) -> std::pair<double, double> {
        const double d = std::abs(y1 - y2);
        switch (region.kind) {
            case Region::PolygonN:  // interpreted as polygon-3
                return {d, std::min(1.0, y1 + y2)};
            case Region::Qutetrit: {
                const double lo = 1.0 - std::sqrt((1.0 + 2.0 * (1.0 - d) * (1.0 - d)) / 3.0);
                const double h = heaviside_ramp(1.0 - y1 - y2);
                const double hi = 1.0 - std::sqrt(((1.0 - y1) * (1.0 - y1) +
                                                   (1.0 - y2) * (1.0 - y2) + h * h) / 3.0);
                return {lo, hi};
            }
            case Region::ClassicalPair:
                return {d / 2.0, (y1 + y2) / 2.0};
            case Region::QutetritClassical: {
                const double lo_q = 1.0 - std::sqrt((1.0 + 2.0 * (1.0 - d) * (1.0 - d)) / 3.0);
                const double h = heaviside_ramp(1.0 - y1 - y2);
                const double hi_q = 1.0 - std::sqrt(((1.0 - y1) * (1.0 - y1) +
                                                     (1.0 - y2) * (1.0 - y2) + h * h) / 3.0);
                return {std::max(lo_q, d / 2.0), std::min(hi_q, (y1 + y2) / 2.0)};
            }
        }
        return {0.0, 0.0};
    };

    if (region.kind == Region::PolygonN && region.n != 3)
        throw UnknownRegion("boundary_scan: only polygon-3 has a 2D scan");

    std::vector<BoundaryRow> rows;
    rows.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int j = 0; j < resolution; ++j) {
        for (int k = 0; k < resolution; ++k) {
            const double y1 = static_cast<double>(j) / (resolution - 1);
            const double y2 = static_cast<double>(k) / (resolution - 1);
            const auto [lo, hi] = bounds(y1, y2);
            rows.push_back({y1, y2, lo, hi});
        }
    }
    return rows;
}

} // namespace entgeom
