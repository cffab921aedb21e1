#include "entgeom/density.hpp"

#include <algorithm>
#include <cmath>

#include "entgeom/schmidt.hpp"

namespace entgeom {

double DensityMatrix::max_offdiag() const {
    double m = 0.0;
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            if (j != k) m = std::max(m, std::abs(at(j, k)));
    return m;
}

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep) {
    const int N = state.dims.count();
    if (keep.empty())
        throw EmptyKeepSet("partial_trace: keep set is empty");
    std::vector<bool> kept(static_cast<std::size_t>(N), false);
    for (int p : keep) {
        if (p < 0 || p >= N)
            throw BadPartyIndex("partial_trace: party index out of range");
        kept[static_cast<std::size_t>(p)] = true;
    }

    std::int64_t dk = 1, dt = 1;
    for (int n = 0; n < N; ++n)
        (kept[n] ? dk : dt) *= state.dims.dim(n);

    // Reshape amplitudes into X[a][b], a = kept multi-index, b = traced one;
    // then rho = X X^dag.
    std::vector<cplx> x(static_cast<std::size_t>(dk) * dt);
    const std::int64_t D = state.dims.total();
    std::vector<std::int64_t> stride_a(static_cast<std::size_t>(N)), stride_b(static_cast<std::size_t>(N));
    {
        std::int64_t sa = dk, sb = dt;
        for (int n = 0; n < N; ++n) {
            const int d = state.dims.dim(n);
            if (kept[n]) { sa /= d; stride_a[n] = sa; stride_b[n] = 0; }
            else         { sb /= d; stride_b[n] = sb; stride_a[n] = 0; }
        }
    }
    std::vector<int> idx(static_cast<std::size_t>(N), 0);
    for (std::int64_t i = 0; i < D; ++i) {
        std::int64_t a = 0, b = 0, r = i;
        for (int n = N - 1; n >= 0; --n) {
            const int d = state.dims.dim(n);
            const int ind = static_cast<int>(r % d);
            r /= d;
            a += ind * stride_a[n];
            b += ind * stride_b[n];
        }
        x[static_cast<std::size_t>(a) * dt + b] = state.coeffs[i];
    }

    DensityMatrix rho{static_cast<int>(dk), std::vector<cplx>(static_cast<std::size_t>(dk) * dk)};
    for (std::int64_t j = 0; j < dk; ++j) {
        for (std::int64_t k = j; k < dk; ++k) {
            cplx s = 0.0;
            const cplx* rowj = &x[static_cast<std::size_t>(j) * dt];
            const cplx* rowk = &x[static_cast<std::size_t>(k) * dt];
            for (std::int64_t b = 0; b < dt; ++b)
                s += rowj[b] * std::conj(rowk[b]);
            rho.entries[static_cast<std::size_t>(j) * dk + k] = s;
            rho.entries[static_cast<std::size_t>(k) * dk + j] = std::conj(s);
        }
    }
    return rho;
}

double purity(const DensityMatrix& rho) {
    double s = 0.0;
    for (const cplx& e : rho.entries) s += std::norm(e);
    return s;
}

double q_from_purity(double p, int m) {
    const double radicand = (m * p - 1.0) / (m - 1.0);
    if (radicand < -1e-12)
        throw NegativeRadicand("q_measure: radicand " + std::to_string(radicand));
    return std::clamp(std::sqrt(std::max(radicand, 0.0)), 0.0, 1.0);
}

double q_measure(const DensityMatrix& rho) {
    if (rho.dim < 2)
        throw BadDimension("q_measure: need M >= 2");
    return q_from_purity(purity(rho), rho.dim);
}

double schmidt_weight(const DensityMatrix& rho) {
    return 1.0 / purity(rho);
}

static double xlog2x(double x) {
    return (x < 1e-14) ? 0.0 : x * std::log2(x);
}

double entropy_from_y(double y) {
    if (y < 0.0 || y > 1.0)
        throw OutOfRange("entropy_from_y: y must be in [0,1]");
    return 1.0 - (xlog2x(2.0 - y) + xlog2x(y)) / 2.0;
}

double entropy_from_eigenvalues(const std::vector<double>& lambda) {
    double s = 0.0;
    for (double l : lambda) s -= xlog2x(l);
    return s;
}

EntanglementProfile profile(const PureState& state) {
    validate(state);
    const int N = state.dims.count();
    EntanglementProfile p;
    p.q.reserve(N); p.y.reserve(N);
    p.schmidt_weight.reserve(N); p.entropy.reserve(N);
    for (int n = 0; n < N; ++n) {
        const DensityMatrix rho = partial_trace(state, {n});
        const double q = q_measure(rho);
        p.q.push_back(q);
        p.y.push_back(1.0 - q);
        p.schmidt_weight.push_back(schmidt_weight(rho));
        p.entropy.push_back(entropy_from_eigenvalues(eigh(rho).eigenvalues));
    }
    return p;
}

} // namespace entgeom
