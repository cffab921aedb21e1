#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "entgeom/errors.hpp"

namespace entgeom {

using cplx = std::complex<double>;

// Ordered list of per-party local dimensions.
class PartyDims {
public:
    PartyDims() = default;
    explicit PartyDims(std::vector<int> dims);

    int count() const { return static_cast<int>(dims_.size()); }
    int dim(int party) const;
    std::int64_t total() const { return total_; }
    const std::vector<int>& dims() const { return dims_; }
    bool all_qubits() const;

    // Row-major multi-index <-> flat index, party 0 slowest.
    std::int64_t flatten(const std::vector<int>& idx) const;
    std::vector<int> unflatten(std::int64_t k) const;

    bool operator==(const PartyDims&) const = default;

private:
    std::vector<int> dims_;
    std::int64_t total_ = 0;
};

// Pure N-party state: dense coefficient vector, row-major, party 0 slowest.
struct PureState {
    PartyDims dims;
    std::vector<cplx> coeffs;

    double norm_sq() const;
};

struct LocalUnitary {
    int party = 0;                // 0-based
    std::vector<cplx> matrix;     // M x M, row-major
};

inline constexpr double kNormTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-12;

// Throws DimensionMismatch or NotNormalized.
void validate(const PureState& state);

PureState renormalized(const PureState& state);

// Applies u.matrix to party u.party only.
PureState apply_local_unitary(const PureState& state, const LocalUnitary& u);

// Merges adjacent parties (n, n+1) into one party of dimension M_n*M_{n+1}.
// Pure relabeling: coefficients are copied verbatim.
PureState merge_parties(const PureState& state, int n);

// General party reordering; perm[k] = source party placed at slot k.
PureState permute_parties(const PureState& state, const std::vector<int>& perm);

// name in {ghz, w, product, bell}
PureState named_state(const std::string& name, const std::vector<int>& dims);

} // namespace entgeom
