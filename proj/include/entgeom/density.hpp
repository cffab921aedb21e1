#pragma once

#include <vector>

#include "entgeom/state.hpp"

namespace entgeom {

// Hermitian, unit-trace, positive-semidefinite matrix for one party or a
// merged party group.
struct DensityMatrix {
    int dim = 0;
    std::vector<cplx> entries;  // dim x dim, row-major

    cplx& at(int j, int k) { return entries[static_cast<std::size_t>(j) * dim + k]; }
    const cplx& at(int j, int k) const { return entries[static_cast<std::size_t>(j) * dim + k]; }

    double max_offdiag() const;
};

struct EntanglementProfile {
    std::vector<double> q;               // Q_n in [0,1]
    std::vector<double> y;               // Y_n = 1 - Q_n
    std::vector<double> schmidt_weight;  // 1/tr(rho^2) in [1, M_n]
    std::vector<double> entropy;         // von Neumann entropy, base 2
};

// Reduced density matrix over the kept parties (ascending order).
DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep);

double purity(const DensityMatrix& rho);

// Q = sqrt((M tr(rho^2) - 1)/(M - 1)), clamped to [0,1] near the edges.
double q_measure(const DensityMatrix& rho);
double q_from_purity(double p, int m);

double schmidt_weight(const DensityMatrix& rho);

// Qubit closed form; S(0) = 0, S(1) = 1.
double entropy_from_y(double y);

double entropy_from_eigenvalues(const std::vector<double>& lambda);

EntanglementProfile profile(const PureState& state);

} // namespace entgeom
