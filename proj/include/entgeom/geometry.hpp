#pragma once

#include <array>
#include <optional>
#include <vector>

#include "entgeom/schmidt.hpp"

namespace entgeom {

// Vertices of the regular simplex inscribed in the unit hypersphere of
// dimension M-1: unit norm, pairwise distance sqrt(2M/(M-1)), zero sum.
std::vector<std::vector<double>> simplex_vertices(int m);

// Center of mass of masses lambda_m at the simplex vertices. Its norm equals
// the Q measure of diag(lambda).
std::vector<double> single_party_com(const std::vector<double>& eigenvalues);

// N-qubit center of mass over hypercube corners ((-1)^{i_1},...,(-1)^{i_N});
// component n equals signed_mass_q(n).
std::vector<double> hypercube_com(const SchmidtForm& schmidt);

// Partial centers of mass of a 3-qubit state: masses with even index sum
// (lowercase) versus odd (uppercase).
struct PartialCom {
    double g = 0.0, G = 0.0;
    std::array<double, 3> v{};  // zero vector when undefined
    std::array<double, 3> V{};
    bool v_defined = false;
    bool V_defined = false;
    std::optional<double> kappa;  // G*V = kappa * g*v, when both norms > 1e-8
};

PartialCom partial_coms(const SchmidtForm& schmidt);

// I_n = (N - 2 + Q_n - sum_{n' != n} Q_{n'}) / 2; nonnegative for every pure
// qubit state in the Schmidt representation.
double i1_margin(const SchmidtForm& schmidt, int party);

// Center of mass of 4 masses at tetrahedron corners (1,1,1)/sqrt3,
// (-1,-1,1)/sqrt3, (-1,1,-1)/sqrt3, (1,-1,-1)/sqrt3.
std::array<double, 3> tetra_com(const std::array<double, 4>& masses);

// (Q_n, Q_{n+1}, Q_v) with Q_v = sum_i (-1)^{i_n + i_{n+1}} |c_i|^2.
struct PairProjection {
    double q_a = 0.0, q_b = 0.0, q_v = 0.0;
};

PairProjection pair_projection(const SchmidtForm& schmidt, int party);

} // namespace entgeom
