#include "entgeom/geometry.hpp"

#include <cmath>

namespace entgeom {

namespace {

void check_probability_vector(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) {
        if (x < -1e-12)
            throw NotProbabilityVector("masses must be nonnegative");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-10)
        throw NotProbabilityVector("masses must sum to 1");
}

} // namespace

std::vector<std::vector<double>> simplex_vertices(int m) {
    if (m < 2)
        throw BadDimension("simplex_vertices: need M >= 2");
    const int dim = m - 1;
    const double c = -1.0 / (m - 1);  // required pairwise dot product
    std::vector<std::vector<double>> v(static_cast<std::size_t>(m),
                                       std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    v[0][0] = 1.0;
    for (int i = 1; i < m; ++i) {
        double norm_sq = 0.0;
        for (int j = 0; j < std::min(i, dim); ++j) {
            double dot = 0.0;
            for (int l = 0; l < j; ++l) dot += v[i][l] * v[j][l];
            v[i][j] = (c - dot) / v[j][j];
            norm_sq += v[i][j] * v[i][j];
        }
        if (i < dim)
            v[i][i] = std::sqrt(std::max(0.0, 1.0 - norm_sq));
    }
    return v;
}

std::vector<double> single_party_com(const std::vector<double>& eigenvalues) {
    check_probability_vector(eigenvalues);
    const int m = static_cast<int>(eigenvalues.size());
    if (m < 2)
        throw BadDimension("single_party_com: need M >= 2");
    const auto verts = simplex_vertices(m);
    std::vector<double> com(static_cast<std::size_t>(m - 1), 0.0);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < m - 1; ++j)
            com[j] += eigenvalues[k] * verts[k][j];
    return com;
}

std::vector<double> hypercube_com(const SchmidtForm& schmidt) {
    if (!schmidt.state.dims.all_qubits())
        throw NotQubits("hypercube_com: all parties must be qubits");
    const int N = schmidt.state.dims.count();
    std::vector<double> q(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) q[n] = signed_mass_q(schmidt, n);
    return q;
}

PartialCom partial_coms(const SchmidtForm& schmidt) {
    const PureState& st = schmidt.state;
    if (st.dims.dims() != std::vector<int>{2, 2, 2})
        throw NotThreeQubits("partial_coms: dims must be [2,2,2]");

    PartialCom out;
    std::array<double, 3> sum_lo{}, sum_hi{};
    for (int i = 0; i < 8; ++i) {
        const int i1 = (i >> 2) & 1, i2 = (i >> 1) & 1, i3 = i & 1;
        const double mass = std::norm(st.coeffs[static_cast<std::size_t>(i)]);
        const std::array<double, 3> corner{i1 ? -1.0 : 1.0, i2 ? -1.0 : 1.0, i3 ? -1.0 : 1.0};
        if ((i1 + i2 + i3) % 2 == 0) {
            out.g += mass;
            for (int j = 0; j < 3; ++j) sum_lo[j] += mass * corner[j];
        } else {
            out.G += mass;
            for (int j = 0; j < 3; ++j) sum_hi[j] += mass * corner[j];
        }
    }
    if (out.g > 1e-14) {
        out.v_defined = true;
        for (int j = 0; j < 3; ++j) out.v[j] = sum_lo[j] / out.g;
    }
    if (out.G > 1e-14) {
        out.V_defined = true;
        for (int j = 0; j < 3; ++j) out.V[j] = sum_hi[j] / out.G;
    }
    double nv = 0.0, nV = 0.0, dot = 0.0;
    for (int j = 0; j < 3; ++j) {
        nv += out.v[j] * out.v[j];
        nV += out.V[j] * out.V[j];
        dot += out.g * out.v[j] * out.G * out.V[j];
    }
    nv = std::sqrt(nv);
    nV = std::sqrt(nV);
    if (out.v_defined && out.V_defined && nv > 1e-8 && nV > 1e-8)
        out.kappa = dot / (out.g * nv * out.g * nv);
    return out;
}

double i1_margin(const SchmidtForm& schmidt, int party) {
    const int N = schmidt.state.dims.count();
    if (!schmidt.state.dims.all_qubits())
        throw NotQubits("i1_margin: all parties must be qubits");
    if (party < 0 || party >= N)
        throw BadPartyIndex("i1_margin: bad party index");
    double sum_others = 0.0;
    for (int n = 0; n < N; ++n)
        if (n != party) sum_others += signed_mass_q(schmidt, n);
    return (N - 2 + signed_mass_q(schmidt, party) - sum_others) / 2.0;
}

std::array<double, 3> tetra_com(const std::array<double, 4>& masses) {
    check_probability_vector({masses.begin(), masses.end()});
    static const std::array<std::array<double, 3>, 4> corners{{
        {1.0, 1.0, 1.0}, {-1.0, -1.0, 1.0}, {-1.0, 1.0, -1.0}, {1.0, -1.0, -1.0}}};
    const double r = 1.0 / std::sqrt(3.0);
    std::array<double, 3> com{};
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 3; ++j)
            com[j] += masses[k] * corners[k][j] * r;
    return com;
}

PairProjection pair_projection(const SchmidtForm& schmidt, int party) {
    const PureState& st = schmidt.state;
    const int N = st.dims.count();
    if (party < 0 || party + 1 >= N)
        throw BadPartyIndex("pair_projection: need an adjacent pair");
    if (st.dims.dim(party) != 2 || st.dims.dim(party + 1) != 2)
        throw NotQubits("pair_projection: both parties must be qubits");

    std::int64_t stride_b = 1;
    for (int n = party + 2; n < N; ++n) stride_b *= st.dims.dim(n);
    const std::int64_t stride_a = stride_b * 2;

    PairProjection out;
    for (std::int64_t i = 0; i < st.dims.total(); ++i) {
        const int ia = static_cast<int>((i / stride_a) & 1);
        const int ib = static_cast<int>((i / stride_b) & 1);
        const double mass = std::norm(st.coeffs[static_cast<std::size_t>(i)]);
        out.q_a += (ia ? -1.0 : 1.0) * mass;
        out.q_b += (ib ? -1.0 : 1.0) * mass;
        out.q_v += ((ia + ib) % 2 ? -1.0 : 1.0) * mass;
    }
    return out;
}

} // namespace entgeom
