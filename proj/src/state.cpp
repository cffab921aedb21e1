#include "entgeom/state.hpp"

#include <cmath>
#include <numeric>

namespace entgeom {

PartyDims::PartyDims(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw DimensionMismatch("PartyDims: need at least one party");
    total_ = 1;
    for (int d : dims_) {
        if (d < 2)
            throw DimensionMismatch("PartyDims: every local dimension must be >= 2");
        total_ *= d;
    }
}

int PartyDims::dim(int party) const {
    if (party < 0 || party >= count())
        throw BadPartyIndex("party index out of range");
    return dims_[static_cast<std::size_t>(party)];
}

bool PartyDims::all_qubits() const {
    for (int d : dims_)
        if (d != 2) return false;
    return true;
}

std::int64_t PartyDims::flatten(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != count())
        throw DimensionMismatch("flatten: index arity mismatch");
    std::int64_t k = 0;
    for (int n = 0; n < count(); ++n) {
        if (idx[n] < 0 || idx[n] >= dims_[n])
            throw BadPartyIndex("flatten: index out of range");
        k = k * dims_[n] + idx[n];
    }
    return k;
}

std::vector<int> PartyDims::unflatten(std::int64_t k) const {
    std::vector<int> idx(dims_.size());
    for (int n = count() - 1; n >= 0; --n) {
        idx[n] = static_cast<int>(k % dims_[n]);
        k /= dims_[n];
    }
    return idx;
}

double PureState::norm_sq() const {
    double s = 0.0;
    for (const cplx& c : coeffs) s += std::norm(c);
    return s;
}

void validate(const PureState& state) {
    if (static_cast<std::int64_t>(state.coeffs.size()) != state.dims.total())
        throw DimensionMismatch("state: coefficient count does not match total dimension");
    const double dev = std::abs(state.norm_sq() - 1.0);
    if (dev > kNormTol)
        throw NotNormalized("state: |sum|c|^2 - 1| = " + std::to_string(dev));
}

PureState renormalized(const PureState& state) {
    if (static_cast<std::int64_t>(state.coeffs.size()) != state.dims.total())
        throw DimensionMismatch("state: coefficient count does not match total dimension");
    const double n = std::sqrt(state.norm_sq());
    if (n == 0.0)
        throw NotNormalized("state: zero vector cannot be normalized");
    PureState out = state;
    for (cplx& c : out.coeffs) c /= n;
    return out;
}

static void check_unitary(const std::vector<cplx>& u, int m) {
    if (static_cast<std::int64_t>(u.size()) != static_cast<std::int64_t>(m) * m)
        throw DimensionMismatch("local unitary: matrix size mismatch");
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            cplx s = 0.0;
            for (int l = 0; l < m; ++l)
                s += std::conj(u[l * m + j]) * u[l * m + k];
            const double want = (j == k) ? 1.0 : 0.0;
            if (std::abs(s - want) > kUnitaryTol)
                throw NotUnitary("local unitary: U^dag U deviates from identity");
        }
    }
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u) {
    const int N = state.dims.count();
    if (u.party < 0 || u.party >= N)
        throw BadPartyIndex("apply_local_unitary: bad party index");
    const int m = state.dims.dim(u.party);
    check_unitary(u.matrix, m);

    // stride of the target party; amplitudes split as (hi, a, lo)
    std::int64_t stride = 1;
    for (int n = u.party + 1; n < N; ++n) stride *= state.dims.dim(n);
    const std::int64_t blocks = state.dims.total() / (stride * m);

    PureState out{state.dims, std::vector<cplx>(state.coeffs.size())};
    for (std::int64_t hi = 0; hi < blocks; ++hi) {
        const std::int64_t base = hi * m * stride;
        for (std::int64_t lo = 0; lo < stride; ++lo) {
            for (int a = 0; a < m; ++a) {
                cplx s = 0.0;
                for (int b = 0; b < m; ++b)
                    s += u.matrix[a * m + b] * state.coeffs[base + b * stride + lo];
                out.coeffs[base + a * stride + lo] = s;
            }
        }
    }
    return out;
}

PureState merge_parties(const PureState& state, int n) {
    const int N = state.dims.count();
    if (n < 0 || n + 1 >= N)
        throw BadPartyIndex("merge_parties: need an adjacent pair inside [0, N-1)");
    std::vector<int> d = state.dims.dims();
    d[n] *= d[n + 1];
    d.erase(d.begin() + n + 1);
    return PureState{PartyDims(d), state.coeffs};
}

PureState permute_parties(const PureState& state, const std::vector<int>& perm) {
    const int N = state.dims.count();
    if (static_cast<int>(perm.size()) != N)
        throw BadPartyIndex("permute_parties: permutation arity mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= N || seen[p])
            throw BadPartyIndex("permute_parties: not a permutation");
        seen[p] = true;
    }
    std::vector<int> nd(perm.size());
    for (int k = 0; k < N; ++k) nd[k] = state.dims.dim(perm[k]);
    PartyDims out_dims(nd);

    PureState out{out_dims, std::vector<cplx>(state.coeffs.size())};
    std::vector<int> src_idx(perm.size()), dst_idx(perm.size());
    for (std::int64_t i = 0; i < state.dims.total(); ++i) {
        src_idx = state.dims.unflatten(i);
        for (int k = 0; k < N; ++k) dst_idx[k] = src_idx[perm[k]];
        out.coeffs[out_dims.flatten(dst_idx)] = state.coeffs[i];
    }
    return out;
}

PureState named_state(const std::string& name, const std::vector<int>& dims) {
    PartyDims pd(dims);
    const int N = pd.count();
    PureState st{pd, std::vector<cplx>(pd.total(), 0.0)};

    if (name == "product") {
        st.coeffs[0] = 1.0;
    } else if (name == "ghz" || name == "bell") {
        if (name == "bell" && !(N == 2 && pd.all_qubits()))
            throw IncompatibleDims("bell: dims must be [2,2]");
        std::vector<int> ones(dims.size(), 1);
        st.coeffs[0] = 1.0 / std::sqrt(2.0);
        st.coeffs[pd.flatten(ones)] = st.coeffs[0];
    } else if (name == "w") {
        if (!pd.all_qubits())
            throw IncompatibleDims("w: all parties must be qubits");
        const double a = 1.0 / std::sqrt(static_cast<double>(N));
        for (int n = 0; n < N; ++n) {
            std::vector<int> idx(dims.size(), 0);
            idx[n] = 1;
            st.coeffs[pd.flatten(idx)] = a;
        }
    } else {
        throw UnknownName("named_state: unknown name '" + name + "'");
    }
    return st;
}

} // namespace entgeom
