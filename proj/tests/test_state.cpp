#include "doctest.h"

#include <cmath>

#include "entgeom/density.hpp"
#include "entgeom/state.hpp"
#include "oracles.hpp"

using namespace entgeom;

namespace {
const double r2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("validate accepts a Bell state") {
    PureState st{PartyDims({2, 2}), {r2, 0.0, 0.0, r2}};
    CHECK_NOTHROW(validate(st));
}

TEST_CASE("validate rejects wrong coefficient count") {
    PureState st{PartyDims({2, 2}), {1.0, 0.0, 0.0}};
    CHECK_THROWS_AS(validate(st), DimensionMismatch);
}

TEST_CASE("validate rejects non-normalized input and renormalize fixes it") {
    PureState st{PartyDims({2}), {1.0, 1.0}};
    CHECK_THROWS_AS(validate(st), NotNormalized);
    CHECK_NOTHROW(validate(renormalized(st)));
}

TEST_CASE("PartyDims rejects dims < 2 and empty lists") {
    CHECK_THROWS_AS(PartyDims(std::vector<int>{1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(PartyDims(std::vector<int>{}), DimensionMismatch);
}

TEST_CASE("index round-trip") {
    PartyDims pd({2, 3, 4});
    for (std::int64_t k = 0; k < pd.total(); ++k)
        CHECK(pd.flatten(pd.unflatten(k)) == k);
}

TEST_CASE("identity unitary leaves the state unchanged") {
    Rng rng(11);
    PureState st = oracles::random_state(PartyDims({2, 3}), rng);
    LocalUnitary id{1, {1, 0, 0, 0, 1, 0, 0, 0, 1}};
    const PureState out = apply_local_unitary(st, id);
    for (std::size_t i = 0; i < st.coeffs.size(); ++i)
        CHECK(std::abs(out.coeffs[i] - st.coeffs[i]) < 1e-15);
}

TEST_CASE("Pauli-X on party 0 maps |00> to |10>") {
    PureState st = named_state("product", {2, 2});
    LocalUnitary x{0, {0, 1, 1, 0}};
    const PureState out = apply_local_unitary(st, x);
    CHECK(std::abs(out.coeffs[2] - cplx(1.0)) < 1e-15);
    CHECK(std::abs(out.coeffs[0]) < 1e-15);
}

TEST_CASE("Hadamard on party 0 of |00>") {
    PureState st = named_state("product", {2, 2});
    LocalUnitary h{0, {r2, r2, r2, -r2}};
    const PureState out = apply_local_unitary(st, h);
    // oracle: direct matrix-vector product on the full 4-vector
    CHECK(std::abs(out.coeffs[0] - cplx(r2)) < 1e-15);
    CHECK(std::abs(out.coeffs[2] - cplx(r2)) < 1e-15);
    CHECK(out.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("apply_local_unitary rejects non-unitary matrices and bad parties") {
    PureState st = named_state("product", {2, 2});
    CHECK_THROWS_AS(apply_local_unitary(st, LocalUnitary{0, {1, 0, 0, 2}}), NotUnitary);
    CHECK_THROWS_AS(apply_local_unitary(st, LocalUnitary{5, {1, 0, 0, 1}}), BadPartyIndex);
}

TEST_CASE("unitary application preserves norm over random pairs") {
    Rng rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        PartyDims pd({2, 3});
        PureState st = oracles::random_state(pd, rng);
        const int party = static_cast<int>(rng.next_u64() % 2);
        LocalUnitary u{party, oracles::random_unitary(pd.dim(party), rng)};
        const PureState out = apply_local_unitary(st, u);
        CHECK(std::abs(out.norm_sq() - 1.0) < 1e-12);
    }
}

TEST_CASE("merge of GHZ4 parties (2,3)") {
    PureState st = named_state("ghz", {2, 2, 2, 2});
    const PureState merged = merge_parties(st, 2);
    CHECK(merged.dims.dims() == std::vector<int>{2, 2, 4});
    CHECK(std::abs(merged.coeffs[merged.dims.flatten({0, 0, 0})] - cplx(r2)) < 1e-15);
    CHECK(std::abs(merged.coeffs[merged.dims.flatten({1, 1, 3})] - cplx(r2)) < 1e-15);
}

TEST_CASE("merge [2,3] into a single dim-6 party keeps coefficients") {
    Rng rng(3);
    PureState st = oracles::random_state(PartyDims({2, 3}), rng);
    const PureState merged = merge_parties(st, 0);
    CHECK(merged.dims.dims() == std::vector<int>{6});
    for (int i = 0; i < 6; ++i)
        CHECK(merged.coeffs[i] == st.coeffs[i]);  // bit-identical relabeling
}

TEST_CASE("merge preserves the group purity") {
    Rng rng(5);
    PureState st = oracles::random_state(PartyDims({2, 2, 4}), rng);
    const double before = purity(oracles::naive_partial_trace(st, {0, 1}));
    const PureState merged = merge_parties(st, 0);
    const double after = purity(partial_trace(merged, {0}));
    CHECK(before == doctest::Approx(after).epsilon(1e-12));
}

TEST_CASE("merge keeps untouched-party reduced matrices bit-identical") {
    Rng rng(6);
    PureState st = oracles::random_state(PartyDims({2, 3, 2}), rng);
    const DensityMatrix before = partial_trace(st, {2});
    const DensityMatrix after = partial_trace(merge_parties(st, 0), {1});
    for (std::size_t i = 0; i < before.entries.size(); ++i)
        CHECK(before.entries[i] == after.entries[i]);
}

TEST_CASE("permute_parties relabels amplitudes") {
    PureState st = named_state("w", {2, 2, 2});
    const PureState swapped = permute_parties(st, {2, 1, 0});
    for (std::size_t i = 0; i < st.coeffs.size(); ++i)
        CHECK(std::abs(swapped.coeffs[i] - st.coeffs[i]) < 1e-15);  // W is symmetric
    CHECK_THROWS_AS(permute_parties(st, {0, 0, 1}), BadPartyIndex);
}

TEST_CASE("named states") {
    const PureState ghz = named_state("ghz", {2, 2, 2});
    CHECK(std::abs(ghz.coeffs[0] - cplx(r2)) < 1e-15);
    CHECK(std::abs(ghz.coeffs[7] - cplx(r2)) < 1e-15);

    const PureState w = named_state("w", {2, 2, 2});
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(w.coeffs[1] - cplx(r3)) < 1e-15);
    CHECK(std::abs(w.coeffs[2] - cplx(r3)) < 1e-15);
    CHECK(std::abs(w.coeffs[4] - cplx(r3)) < 1e-15);

    const PureState prod = named_state("product", {2, 2});
    CHECK(std::abs(prod.coeffs[0] - cplx(1.0)) < 1e-15);

    CHECK_THROWS_AS(named_state("nope", {2, 2}), UnknownName);
    CHECK_THROWS_AS(named_state("bell", {2, 2, 2}), IncompatibleDims);
}
