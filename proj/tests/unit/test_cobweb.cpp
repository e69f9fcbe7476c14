#include <doctest.h>

#include "horadam/cobweb/cobweb.hpp"

using namespace horadam;

namespace {
const Sequence kFib = sequence_preset("fibonacci");
const Sequence kNat = sequence_preset("naturals");
}  // namespace

TEST_CASE("admissibility") {
    CHECK(is_admissible(kFib, 12));
    CHECK(is_admissible(kNat, 12));
    CHECK(is_admissible(sequence_preset("gauss:2"), 8));
    CHECK_FALSE(is_admissible(sequence_preset("custom:0,1,2,3,5"), 4));
    CHECK(is_admissible(sequence_preset("custom:0,1,1,3"), 3));
    CHECK_THROWS_AS(is_admissible(sequence_preset("custom:0,1,0,5"), 3), ZeroTerm);
    CHECK_FALSE(is_admissible(sequence_preset("lucas"), 4));
}

TEST_CASE("layer chains") {
    CHECK(layer_chain_count(make_layer(kNat, 2, 4)) == 24);
    CHECK(layer_chain_count(make_layer(kFib, 3, 4)) == 6);
    CHECK(layer_chain_count(make_layer(kFib, 5, 5)) == 5);
    const auto chains = enumerate_layer_chains(make_layer(kNat, 2, 4));
    REQUIRE(chains.has_value());
    CHECK(chains->size() == 24);
    CHECK_FALSE(enumerate_layer_chains(make_layer(kNat, 1, 9), 100).has_value());
    CHECK_THROWS_AS(make_layer(kNat, 3, 2), InvalidArgument);
}

TEST_CASE("counting identity") {
    const auto r = verify_counting_identity(kNat, 2, 4);
    CHECK(r.chains == 12);
    CHECK(r.binomial == 6);
    CHECK(r.kappa == 2);
    CHECK(r.holds);
    CHECK(verify_counting_identity(kNat, 3, 3).holds);
    const auto f = verify_counting_identity(kFib, 2, 5);
    CHECK(f.chains == 30);
    CHECK(f.binomial == 15);
    CHECK(f.holds);
    CHECK_THROWS_AS(verify_counting_identity(sequence_preset("custom:0,1,2,3,5"), 1, 4), NotAdmissible);
}

TEST_CASE("property: counting identity across sequences") {
    for (const auto& F : {kNat, kFib, sequence_preset("gauss:2")})
        for (std::size_t n = 0; n <= 6; ++n)
            for (std::size_t k = 0; k <= n; ++k) CHECK(verify_counting_identity(F, k, n).holds);
}

TEST_CASE("tiling search") {
    const auto nat = box_tiling_search(kNat, 2, 4);
    REQUIRE(nat.status == TilingStatus::Found);
    CHECK(nat.partition->blocks.size() == 6);
    CHECK(validate_partition(kNat, 2, 4, *nat.partition));

    const auto one = box_tiling_search(kNat, 1, 5);
    REQUIRE(one.status == TilingStatus::Found);
    CHECK(one.partition->blocks.size() == 5);

    const auto fib = box_tiling_search(kFib, 2, 4);
    REQUIRE(fib.status == TilingStatus::Found);
    CHECK(fib.partition->kappa == 1);
    CHECK(fib.partition->blocks.size() == 6);

    const auto empty = box_tiling_search(kNat, 0, 3);
    REQUIRE(empty.status == TilingStatus::Found);
    CHECK(empty.partition->blocks.size() == 1);

    const auto tiny = box_tiling_search(kNat, 3, 6, 3);
    CHECK(tiny.status == TilingStatus::Exhausted);
    CHECK_THROWS_AS(box_tiling_search(sequence_preset("custom:0,1,2,3,5"), 1, 4), NotAdmissible);
}

TEST_CASE("property: found partitions re-validate") {
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = m; n <= 6; ++n)
            for (bool intervals : {false, true}) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(intervals);
                const auto r = box_tiling_search(kNat, m, n, 1000000, intervals);
                if (!intervals) CHECK(r.status == TilingStatus::Found);
                if (r.partition) CHECK(validate_partition(kNat, m, n, *r.partition));
            }
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto r = box_tiling_search(kFib, 2, n);
        if (r.partition) CHECK(validate_partition(kFib, 2, n, *r.partition));
    }
    BoxPartition broken = *box_tiling_search(kNat, 2, 4).partition;
    broken.blocks.pop_back();
    CHECK_FALSE(validate_partition(kNat, 2, 4, broken));
}
