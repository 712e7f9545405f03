#include "doctest.h"
#include "vilab/scenario.hpp"

using namespace vilab;

TEST_CASE("input parsing for the command surface") {
    CHECK(parse_poly("x(1,1)^2 - 3*x(2,1)", 2) == parse_poly("x(1,1)^2 + x(2,1)", 2));

    RingCtx ctx = RingCtx::parse("2x4@p2");
    CHECK(ctx.n == 2);
    CHECK(ctx.d == 4);
    CHECK(ctx.p == 2);
    CHECK(RingCtx::parse("3x3@p0").p == 0);
    CHECK_THROWS_AS(RingCtx::parse("4x2@p2"), InputError);  // d < n
    CHECK_THROWS_AS(RingCtx::parse("2x4@p6"), InputError);  // not a prime
    CHECK_THROWS_AS(RingCtx::parse("nonsense"), InputError);

    CHECK_THROWS_AS(GroupSpec::from_json(nlohmann::json::parse(
                        R"({"variant":"diagonal","torsion":[{"modulus":1,"weights":[1]}]})")),
                    InputError);
}

TEST_CASE("scenario registry") {
    auto names = scenario_names();
    CHECK(names.size() == 8);
    CHECK_THROWS_AS(run_scenario("no-such-scenario"), InputError);
}

TEST_CASE("scenario reports are deterministic") {
    auto a = run_scenario("mu3-char2-n2").to_json().dump(2);
    auto b = run_scenario("mu3-char2-n2").to_json().dump(2);
    CHECK(a == b);
}

TEST_CASE("light scenarios pass") {
    for (const char* name : {"mu3-char2-n2", "classical-sl", "block-unipotent"}) {
        Report rep = run_scenario(name);
        INFO(rep.to_text());
        CHECK(rep.pass());
    }
}

TEST_CASE("default generator sources") {
    GroupSpec sl;
    sl.v = RootedSpec{RootedKind::SL, 2};
    RingCtx ctx(2, 3, 5);
    auto gens = default_generators(sl, ctx);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == delta(RingCtx(2, 2, 5)));

    auto pairs = coverage_pairs(sl, ctx);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].omega == GLWeight({1, 1, 0}));
}
