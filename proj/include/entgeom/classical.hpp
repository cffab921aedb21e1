#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entgeom/errors.hpp"

namespace entgeom {

// Shared-resource ownership model: each of N parties owns total property 1,
// split into a solo part P_n and pairwise co-owned parts P_nm (each co-owner
// holds half of P_nm).
class OwnershipAllocation {
public:
    OwnershipAllocation(int n_parties, std::vector<double> solo,
                        std::vector<std::vector<double>> shared);

    int party_count() const { return n_; }
    double solo(int n) const;
    double shared(int n, int m) const;  // P_nm, symmetric

    // Throws InvalidAllocation unless every P_n + sum_m P_nm/2 = 1 within
    // 1e-10 and all parts are nonnegative.
    void validate() const;

private:
    int n_ = 0;
    std::vector<double> solo_;
    std::vector<std::vector<double>> shared_;  // full symmetric matrix
};

// Y_n = sum_{m != n} P_nm / 2
std::vector<double> ownership_y(const OwnershipAllocation& alloc);

// Fraction of the merged pair's property shared with the outside parties:
// for group (n,m), sum of cross pairs / 4.
double ownership_pair_y(const OwnershipAllocation& alloc, std::pair<int, int> group);

// p_nm = (Y_n + Y_m)/2 - Y_nm = P_nm / 2
double pair_sharing(const OwnershipAllocation& alloc, std::pair<int, int> pair);
double pair_sharing_from_y(double yn, double ym, double ynm);

// Valid allocation sampled deterministically per seed.
OwnershipAllocation random_allocation(int n_parties, std::uint64_t seed);

} // namespace entgeom
