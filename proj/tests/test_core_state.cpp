#include <catch2/catch_amalgamated.hpp>

#include "phygital/core_state.hpp"
#include "phygital/rng.hpp"

using namespace phygital;

TEST_CASE("split_blocks partitions [p|d|s]", "[core_state]") {
    PhygitalState s(DimensionLayout(1), (Vec(3) << 1, 2, 3).finished());
    auto v = split_blocks(s);
    CHECK(v.physical[0] == 1.0);
    CHECK(v.digital[0] == 2.0);
    CHECK(v.social[0] == 3.0);

    PhygitalState z(DimensionLayout(2), Vec::Zero(6));
    auto vz = split_blocks(z);
    CHECK(vz.physical.isZero(0.0));
    CHECK(vz.digital.isZero(0.0));
    CHECK(vz.social.isZero(0.0));

    PhygitalState s2(DimensionLayout(2), (Vec(6) << 1, 2, 3, 4, 5, 6).finished());
    auto v2 = split_blocks(s2);
    CHECK(v2.physical == (Vec(2) << 1, 2).finished());
    CHECK(v2.digital == (Vec(2) << 3, 4).finished());
    CHECK(v2.social == (Vec(2) << 5, 6).finished());
}

TEST_CASE("split/concat round-trip is exact", "[core_state]") {
    RngStream rng(7, "core_state.roundtrip");
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 1 + int(rng.next_below(5));
        Vec coords(3 * k);
        for (int i = 0; i < coords.size(); ++i) coords[i] = rng.uniform(-10, 10);
        PhygitalState s(DimensionLayout(k), coords);
        auto v = split_blocks(s);
        Vec back(3 * k);
        back << v.physical, v.digital, v.social;
        REQUIRE(back == coords);  // bitwise
    }
}

TEST_CASE("malformed states are rejected", "[core_state]") {
    CHECK_THROWS_AS(DimensionLayout(0), StructuralError);
    CHECK_THROWS_AS(PhygitalState(DimensionLayout(2), Vec::Zero(5)), StructuralError);
    CHECK_THROWS_AS(split_blocks(Vec::Zero(4)), StructuralError);
    CHECK_THROWS_AS(split_blocks(Vec{}), StructuralError);

    Vec bad = Vec::Zero(3);
    bad[1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(PhygitalState(DimensionLayout(1), bad), NumericError);
}

TEST_CASE("synthetic entities require a degenerate physical block", "[core_state]") {
    Entity sa{"bot", PhygitalState(DimensionLayout(1), Vec::Zero(3)),
              synthetic_mass(1.0, 1.0, 0.5), EntityKind::synthetic};
    CHECK_NOTHROW(sa.validate());

    Entity bad{"bot2", PhygitalState(DimensionLayout(1), Vec::Zero(3)),
               MassTensor(Mat3::Identity()), EntityKind::synthetic};
    CHECK_THROWS_AS(bad.validate(), StructuralError);

    Entity person{"alice", PhygitalState(DimensionLayout(1), Vec::Zero(3)),
                  MassTensor(Mat3::Identity()), EntityKind::biological};
    CHECK_NOTHROW(person.validate());
    Entity anonymous{"", person.state, person.mass, person.kind};
    CHECK_THROWS_AS(anonymous.validate(), StructuralError);
}
