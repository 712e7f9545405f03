#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "vilab/span.hpp"

using namespace vilab;
using namespace vilab::testutil;

TEST_CASE("membership with coordinates over the inputs") {
    SpanBasis basis(0, /*track_inputs=*/true);
    basis.insert(P("x(1,1)", 0));
    basis.insert(P("x(1,2)", 0));
    auto yes = basis.member(P("x(1,1) + x(1,2)", 0));
    REQUIRE(yes.member);
    REQUIRE(yes.coordinates.size() == 2);
    CHECK(yes.coordinates[0] == std::pair<std::size_t, Scalar>{0, Scalar::one(0)});
    CHECK(yes.coordinates[1] == std::pair<std::size_t, Scalar>{1, Scalar::one(0)});

    SpanBasis single(0);
    single.insert(P("x(1,1)", 0));
    auto no = single.member(P("x(1,2)", 0));
    CHECK(!no.member);
    CHECK(no.residual == P("x(1,2)", 0));
}

TEST_CASE("coordinates reference the original inserted sequence") {
    SpanBasis basis(0, /*track_inputs=*/true);
    basis.insert(P("x(1,1) + x(1,2)", 0));
    basis.insert(P("x(1,2)", 0));
    auto res = basis.member(P("x(1,1)", 0));
    REQUIRE(res.member);
    REQUIRE(res.coordinates.size() == 2);
    CHECK(res.coordinates[0] == std::pair<std::size_t, Scalar>{0, Scalar::of(1, 0)});
    CHECK(res.coordinates[1] == std::pair<std::size_t, Scalar>{1, Scalar::of(-1, 0)});
}

TEST_CASE("member coordinates re-expand exactly") {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {0u, 2u, 5u}) {
        std::vector<Poly> inputs;
        SpanBasis basis(p, /*track_inputs=*/true);
        for (int k = 0; k < 12; ++k) {
            Poly f = random_poly(rng, p, 2, 3, 4, 3);
            inputs.push_back(f);
            basis.insert(f);
        }
        // random combinations of the inputs must come back with exact coordinates
        for (int trial = 0; trial < 10; ++trial) {
            Poly v(p);
            for (const auto& f : inputs)
                v += f * random_scalar(rng, p);
            auto res = basis.member(v);
            REQUIRE(res.member);
            Poly rebuilt(p);
            for (const auto& [idx, c] : res.coordinates) rebuilt += inputs[idx] * c;
            CHECK(rebuilt == v);
        }
    }
}

TEST_CASE("row reduction is deterministic and fully reduced") {
    std::mt19937_64 rng(17);
    std::vector<Poly> seq;
    for (int k = 0; k < 10; ++k) seq.push_back(random_poly(rng, 5, 2, 3, 4, 3));

    SpanBasis a(5), b(5);
    for (const auto& f : seq) {
        a.insert(f);
        b.insert(f);
    }
    CHECK(a.fingerprint() == b.fingerprint());

    // each pivot monomial appears in exactly one reduced row, with unit coefficient
    auto rows = a.row_polys();
    auto pivots = a.pivot_monomials();
    REQUIRE(rows.size() == pivots.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            bool present = false;
            Scalar coeff = Scalar::zero(5);
            for (const auto& [m, c] : rows[j].terms())
                if (m == pivots[i]) {
                    present = true;
                    coeff = c;
                }
            if (i == j) {
                CHECK(present);
                CHECK(coeff.is_one());
            } else {
                CHECK(!present);
            }
        }
    }
}

TEST_CASE("zero and duplicate insertions do not grow the span") {
    SpanBasis basis(5);
    CHECK(!basis.insert(Poly::zero(5)));
    CHECK(basis.insert(P("x(1,1) + x(1,2)", 5)));
    CHECK(!basis.insert(P("2*x(1,1) + 2*x(1,2)", 5)));
    CHECK(basis.dim() == 1);
    CHECK(basis.input_count() == 3);
}
