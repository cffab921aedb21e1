#pragma once

#include <vector>

#include "entgeom/density.hpp"
#include "entgeom/state.hpp"

namespace entgeom {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    std::vector<cplx> eigenvectors;   // M x M, column k paired with lambda_k
    int dim = 0;
};

// Cyclic Jacobi for Hermitian matrices. Converged when the off-diagonal
// Frobenius norm drops below 1e-13 times the matrix Frobenius norm; hard cap
// of 100 sweeps. Column phases fixed so the largest-modulus entry of each
// eigenvector is real nonnegative (ties: lowest row index).
EigenDecomposition eigh(const DensityMatrix& rho);

// State rotated so every single-party reduced density matrix is diagonal with
// a descending diagonal.
struct SchmidtForm {
    PureState state;
    std::vector<LocalUnitary> unitaries;  // the per-party rotations applied
};

SchmidtForm to_schmidt(const PureState& state);

// Q_n = sum_i (-1)^{i_n} |c_i|^2, qubit parties only.
double signed_mass_q(const SchmidtForm& schmidt, int party);

} // namespace entgeom
