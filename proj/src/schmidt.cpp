#include "entgeom/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entgeom {

namespace {

double offdiag_norm_sq(const std::vector<cplx>& a, int m) {
    double s = 0.0;
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            if (j != k) s += std::norm(a[static_cast<std::size_t>(j) * m + k]);
    return s;
}

} // namespace

EigenDecomposition eigh(const DensityMatrix& rho) {
    const int m = rho.dim;
    std::vector<cplx> a = rho.entries;
    std::vector<cplx> v(static_cast<std::size_t>(m) * m, 0.0);
    for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j) * m + j] = 1.0;

    double fro_sq = 0.0;
    for (const cplx& e : a) fro_sq += std::norm(e);
    const double thresh_sq = 1e-26 * fro_sq;  // (1e-13 * fro)^2

    int sweep = 0;
    while (offdiag_norm_sq(a, m) > thresh_sq) {
        if (++sweep > 100)
            throw NoConvergence("eigh: Jacobi sweep cap exceeded");
        for (int p = 0; p < m - 1; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const cplx apq = a[static_cast<std::size_t>(p) * m + q];
                const double b = std::abs(apq);
                if (b == 0.0) continue;
                const double alpha = a[static_cast<std::size_t>(p) * m + p].real();
                const double gamma = a[static_cast<std::size_t>(q) * m + q].real();
                const double phi = std::arg(apq);
                const double theta = 0.5 * std::atan2(2.0 * b, alpha - gamma);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // plane rotation R: R[p][p]=c, R[p][q]=-s,
                //                   R[q][p]=s e^{-i phi}, R[q][q]=c e^{-i phi}
                const cplx rqp = s * std::polar(1.0, -phi);
                const cplx rqq = c * std::polar(1.0, -phi);
                // columns: A <- A R
                for (int k = 0; k < m; ++k) {
                    const cplx akp = a[static_cast<std::size_t>(k) * m + p];
                    const cplx akq = a[static_cast<std::size_t>(k) * m + q];
                    a[static_cast<std::size_t>(k) * m + p] = c * akp + rqp * akq;
                    a[static_cast<std::size_t>(k) * m + q] = -s * akp + rqq * akq;
                }
                // rows: A <- R^dag A
                for (int k = 0; k < m; ++k) {
                    const cplx apk = a[static_cast<std::size_t>(p) * m + k];
                    const cplx aqk = a[static_cast<std::size_t>(q) * m + k];
                    a[static_cast<std::size_t>(p) * m + k] = c * apk + std::conj(rqp) * aqk;
                    a[static_cast<std::size_t>(q) * m + k] = -s * apk + std::conj(rqq) * aqk;
                }
                for (int k = 0; k < m; ++k) {
                    const cplx vkp = v[static_cast<std::size_t>(k) * m + p];
                    const cplx vkq = v[static_cast<std::size_t>(k) * m + q];
                    v[static_cast<std::size_t>(k) * m + p] = c * vkp + rqp * vkq;
                    v[static_cast<std::size_t>(k) * m + q] = -s * vkp + rqq * vkq;
                }
            }
        }
    }

    EigenDecomposition out;
    out.dim = m;
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) diag[j] = a[static_cast<std::size_t>(j) * m + j].real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return diag[i] > diag[j]; });

    out.eigenvalues.resize(static_cast<std::size_t>(m));
    out.eigenvectors.assign(static_cast<std::size_t>(m) * m, 0.0);
    for (int k = 0; k < m; ++k) {
        const int src = order[k];
        out.eigenvalues[k] = diag[src];
        // phase: largest-modulus entry real nonnegative, ties at lowest row
        int best = 0;
        double bestmod = -1.0;
        for (int r = 0; r < m; ++r) {
            const double mod = std::abs(v[static_cast<std::size_t>(r) * m + src]);
            if (mod > bestmod + 1e-15) { bestmod = mod; best = r; }
        }
        cplx ph = 1.0;
        const cplx z = v[static_cast<std::size_t>(best) * m + src];
        if (std::abs(z) > 0.0) ph = std::conj(z) / std::abs(z);
        for (int r = 0; r < m; ++r)
            out.eigenvectors[static_cast<std::size_t>(r) * m + k] =
                v[static_cast<std::size_t>(r) * m + src] * ph;
    }
    return out;
}

SchmidtForm to_schmidt(const PureState& state) {
    validate(state);
    const int N = state.dims.count();
    SchmidtForm out{state, {}};
    out.unitaries.reserve(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) {
        const int m = state.dims.dim(n);
        // rho_n of the original state; local rotations on other parties do
        // not change it
        const EigenDecomposition eig = eigh(partial_trace(state, {n}));
        // W = U^dag turns rho into W rho W^dag = diag(lambda)
        LocalUnitary u;
        u.party = n;
        u.matrix.resize(static_cast<std::size_t>(m) * m);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                u.matrix[static_cast<std::size_t>(j) * m + k] =
                    std::conj(eig.eigenvectors[static_cast<std::size_t>(k) * m + j]);
        out.state = apply_local_unitary(out.state, u);
        out.unitaries.push_back(std::move(u));
    }
    return out;
}

double signed_mass_q(const SchmidtForm& schmidt, int party) {
    const PureState& st = schmidt.state;
    const int N = st.dims.count();
    if (party < 0 || party >= N)
        throw BadPartyIndex("signed_mass_q: bad party index");
    if (!st.dims.all_qubits())
        throw NotQubits("signed_mass_q: all parties must be qubits");
    std::int64_t stride = 1;
    for (int n = party + 1; n < N; ++n) stride *= 2;
    double s = 0.0;
    for (std::int64_t i = 0; i < st.dims.total(); ++i) {
        const int bit = static_cast<int>((i / stride) & 1);
        s += (bit ? -1.0 : 1.0) * std::norm(st.coeffs[i]);
    }
    return s;
}

} // namespace entgeom
