// Python bindings for the entgeom core: state construction, entanglement
// profiles, Schmidt transforms, constraint checks, and the Monte Carlo
// campaign drivers.

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entgeom/classical.hpp"
#include "entgeom/density.hpp"
#include "entgeom/geometry.hpp"
#include "entgeom/inequalities.hpp"
#include "entgeom/io.hpp"
#include "entgeom/montecarlo.hpp"
#include "entgeom/schmidt.hpp"
#include "entgeom/state.hpp"

namespace py = pybind11;
using namespace entgeom;

namespace {

PureState make_state(const std::vector<int>& dims, const std::vector<cplx>& coeffs,
                     bool renormalize) {
    PureState st{PartyDims(dims), coeffs};
    if (renormalize) st = renormalized(st);
    validate(st);
    return st;
}

py::dict profile_dict(const PureState& st) {
    const EntanglementProfile p = profile(st);
    py::dict d;
    d["q"] = p.q;
    d["y"] = p.y;
    d["schmidt_weight"] = p.schmidt_weight;
    d["entropy"] = p.entropy;
    return d;
}

py::dict report_dict(const CampaignReport& r) {
    py::dict d;
    d["kind"] = r.kind;
    d["target"] = r.target;
    d["constraint_set"] = r.constraint_set;
    d["seed"] = r.seed;
    d["sample_count"] = r.sample_count;
    d["generator"] = std::string(kGeneratorName);
    d["version"] = std::string(ENTGEOM_VERSION);
    d["violation_count"] = r.violation_count;
    d["min_margin"] = r.min_margin;
    if (r.volume_estimate) {
        d["volume_estimate"] = *r.volume_estimate;
        d["standard_error"] = *r.standard_error;
    }
    d["wall_time_s"] = r.wall_time_s;
    return d;
}

py::dict constraint_dict(const ConstraintReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["margin"] = r.margin;
    d["satisfied"] = r.satisfied;
    return d;
}

std::vector<std::vector<cplx>> density_rows(const DensityMatrix& rho) {
    std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(rho.dim));
    for (int j = 0; j < rho.dim; ++j)
        rows[static_cast<std::size_t>(j)].assign(
            rho.entries.begin() + static_cast<std::ptrdiff_t>(j) * rho.dim,
            rho.entries.begin() + static_cast<std::ptrdiff_t>(j + 1) * rho.dim);
    return rows;
}

} // namespace

PYBIND11_MODULE(_entgeom, m) {
    m.doc() = "Purity-based entanglement measures and constraint-region "
              "Monte Carlo for pure N-party states";
    m.attr("__version__") = ENTGEOM_VERSION;

    py::register_exception<Error>(m, "EntgeomError", PyExc_ValueError);

    py::class_<PureState>(m, "PureState")
        .def(py::init(&make_state), py::arg("dims"), py::arg("coefficients"),
             py::arg("renormalize") = false)
        .def_property_readonly(
            "dims", [](const PureState& st) { return st.dims.dims(); })
        .def_property_readonly(
            "coefficients", [](const PureState& st) { return st.coeffs; })
        .def("norm_sq", &PureState::norm_sq)
        .def("to_json", &state_to_json);

    m.def("named_state", &named_state, py::arg("name"), py::arg("dims"),
          "Fixture states: ghz, w, product, bell");
    m.def(
        "state_from_json",
        [](const std::string& text) {
            std::istringstream in(text);
            return load_state_json(in);
        },
        py::arg("text"));
    m.def(
        "haar_random_state",
        [](const std::vector<int>& dims, std::uint64_t seed) {
            return haar_random_state(PartyDims(dims), seed);
        },
        py::arg("dims"), py::arg("seed"));

    m.def("profile", &profile_dict, py::arg("state"),
          "Per-party q, y, schmidt_weight, entropy");
    m.def(
        "partial_trace",
        [](const PureState& st, const std::vector<int>& keep) {
            return density_rows(partial_trace(st, keep));
        },
        py::arg("state"), py::arg("keep"));
    m.def(
        "purity",
        [](const PureState& st, const std::vector<int>& keep) {
            return purity(partial_trace(st, keep));
        },
        py::arg("state"), py::arg("keep"));
    m.def("q_from_purity", &q_from_purity, py::arg("purity"), py::arg("m"));

    m.def(
        "to_schmidt",
        [](const PureState& st) { return to_schmidt(st).state; },
        py::arg("state"),
        "State rotated so every single-party reduced matrix is diagonal");

    m.def("polygon_check",
          [](const std::vector<double>& y) {
              py::list out;
              for (const auto& r : polygon_check(y)) out.append(constraint_dict(r));
              return out;
          },
          py::arg("y"));
    m.def("qutetrit_check",
          [](double y1, double y2, double y34) {
              auto [a, b] = qutetrit_check(y1, y2, y34);
              return py::make_tuple(constraint_dict(a), constraint_dict(b));
          },
          py::arg("y1"), py::arg("y2"), py::arg("y34"));
    m.def("qubit_qutrit_curve_residual", &qubit_qutrit_curve_residual,
          py::arg("y1"), py::arg("y2"));
    m.def("classical_pair_check",
          [](double y1, double y2, double y34) {
              return constraint_dict(classical_pair_check(y1, y2, y34));
          },
          py::arg("y1"), py::arg("y2"), py::arg("y34"));

    m.def(
        "violation_campaign",
        [](const std::vector<int>& dims, std::int64_t samples, std::uint64_t seed,
           const std::string& constraints, int threads) {
            const PartyDims pd(dims);
            const ConstraintSet set = constraints.empty()
                                          ? default_constraint_set(pd)
                                          : parse_constraint_set(constraints);
            CampaignOptions opts;
            opts.threads = threads;
            return report_dict(violation_campaign(pd, samples, seed, set, opts));
        },
        py::arg("dims"), py::arg("samples"), py::arg("seed"),
        py::arg("constraints") = std::string(), py::arg("threads") = 1);
    m.def(
        "region_volume",
        [](const std::string& region, std::int64_t samples, std::uint64_t seed,
           int threads) {
            CampaignOptions opts;
            opts.threads = threads;
            return report_dict(region_volume(region, samples, seed, opts));
        },
        py::arg("region"), py::arg("samples"), py::arg("seed"),
        py::arg("threads") = 1);
    m.def(
        "boundary_scan",
        [](const std::string& region, int resolution) {
            py::list out;
            for (const BoundaryRow& r : boundary_scan(region, resolution))
                out.append(py::make_tuple(r.y1, r.y2, r.y3_lower, r.y3_upper));
            return out;
        },
        py::arg("region"), py::arg("resolution"));

    m.def(
        "random_allocation_y",
        [](int n, std::uint64_t seed) {
            return ownership_y(random_allocation(n, seed));
        },
        py::arg("n"), py::arg("seed"),
        "Y vector of a random classical ownership allocation");
}
