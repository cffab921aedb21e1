#include "entgeom/classical.hpp"

#include <cmath>

#include "entgeom/rng.hpp"

namespace entgeom {

OwnershipAllocation::OwnershipAllocation(int n_parties, std::vector<double> solo,
                                         std::vector<std::vector<double>> shared)
    : n_(n_parties), solo_(std::move(solo)), shared_(std::move(shared)) {
    if (n_ < 2)
        throw InvalidAllocation("allocation: need at least two parties");
    if (static_cast<int>(solo_.size()) != n_ || static_cast<int>(shared_.size()) != n_)
        throw InvalidAllocation("allocation: size mismatch");
    for (const auto& row : shared_)
        if (static_cast<int>(row.size()) != n_)
            throw InvalidAllocation("allocation: shared matrix must be N x N");
    for (int n = 0; n < n_; ++n) {
        shared_[n][n] = 0.0;
        for (int m = n + 1; m < n_; ++m) {
            if (std::abs(shared_[n][m] - shared_[m][n]) > 1e-12)
                throw InvalidAllocation("allocation: shared matrix must be symmetric");
            shared_[m][n] = shared_[n][m];
        }
    }
}

double OwnershipAllocation::solo(int n) const {
    if (n < 0 || n >= n_) throw BadPartyIndex("allocation: bad party index");
    return solo_[n];
}

double OwnershipAllocation::shared(int n, int m) const {
    if (n < 0 || n >= n_ || m < 0 || m >= n_ || n == m)
        throw BadPartyIndex("allocation: bad pair");
    return shared_[n][m];
}

void OwnershipAllocation::validate() const {
    for (int n = 0; n < n_; ++n) {
        if (solo_[n] < -1e-12)
            throw InvalidAllocation("allocation: negative solo part");
        double total = solo_[n];
        for (int m = 0; m < n_; ++m) {
            if (m == n) continue;
            if (shared_[n][m] < -1e-12)
                throw InvalidAllocation("allocation: negative shared part");
            total += shared_[n][m] / 2.0;
        }
        if (std::abs(total - 1.0) > 1e-10)
            throw InvalidAllocation("allocation: party total deviates from 1");
    }
}

std::vector<double> ownership_y(const OwnershipAllocation& alloc) {
    alloc.validate();
    const int N = alloc.party_count();
    std::vector<double> y(static_cast<std::size_t>(N), 0.0);
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m)
            if (m != n) y[n] += alloc.shared(n, m) / 2.0;
    return y;
}

double ownership_pair_y(const OwnershipAllocation& alloc, std::pair<int, int> group) {
    alloc.validate();
    const int N = alloc.party_count();
    const auto [a, b] = group;
    if (a < 0 || b < 0 || a >= N || b >= N || a == b)
        throw BadGroup("ownership_pair_y: bad group");
    double s = 0.0;
    for (int k = 0; k < N; ++k) {
        if (k == a || k == b) continue;
        s += alloc.shared(a, k) + alloc.shared(b, k);
    }
    return s / 4.0;
}

double pair_sharing(const OwnershipAllocation& alloc, std::pair<int, int> pair) {
    alloc.validate();
    const double p = alloc.shared(pair.first, pair.second) / 2.0;
    if (p < -1e-10 || p > 1.0 + 1e-10)
        throw OutOfRange("pair_sharing: outside [0,1]");
    return p;
}

double pair_sharing_from_y(double yn, double ym, double ynm) {
    return (yn + ym) / 2.0 - ynm;
}

OwnershipAllocation random_allocation(int n_parties, std::uint64_t seed) {
    if (n_parties < 2)
        throw InvalidAllocation("random_allocation: need N >= 2");
    Rng rng(seed ^ 0xc1a55ca1ULL);
    const int N = n_parties;
    // Each party splits its unit budget over {solo, each partner} via an
    // exponential-Dirichlet draw; the pair amount is set by the smaller of
    // the two offers so both co-owners can fund equal halves, and the slack
    // returns to the solo part.
    std::vector<std::vector<double>> offer(static_cast<std::size_t>(N),
                                           std::vector<double>(static_cast<std::size_t>(N) + 1, 0.0));
    for (int n = 0; n < N; ++n) {
        double total = 0.0;
        for (int k = 0; k <= N; ++k) {
            if (k < N && k == n) continue;
            double u;
            do { u = rng.uniform(); } while (u <= 0.0);
            offer[n][k] = -std::log(u);
            total += offer[n][k];
        }
        for (int k = 0; k <= N; ++k) offer[n][k] /= total;
    }
    std::vector<std::vector<double>> shared(static_cast<std::size_t>(N),
                                            std::vector<double>(static_cast<std::size_t>(N), 0.0));
    std::vector<double> solo(static_cast<std::size_t>(N), 0.0);
    for (int n = 0; n < N; ++n)
        for (int m = n + 1; m < N; ++m)
            shared[n][m] = shared[m][n] = 2.0 * std::min(offer[n][m], offer[m][n]);
    for (int n = 0; n < N; ++n) {
        double committed = 0.0;
        for (int m = 0; m < N; ++m)
            if (m != n) committed += shared[n][m] / 2.0;
        solo[n] = 1.0 - committed;
    }
    OwnershipAllocation out(N, std::move(solo), std::move(shared));
    out.validate();
    return out;
}

} // namespace entgeom
