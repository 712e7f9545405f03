#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace vilab;
using namespace vilab::testutil;

TEST_CASE("embedding checks its support") {
    RingCtx ctx(2, 3, 0);
    CHECK(embed_j(P("x(1,1)", 0), ctx) == P("x(1,1)", 0));
    CHECK(embed_j(P("x(1,1)*x(2,2) - x(1,2)*x(2,1)", 0), ctx) ==
          P("x(1,1)*x(2,2) - x(1,2)*x(2,1)", 0));
    CHECK_THROWS_AS(embed_j(P("x(1,3)", 0), ctx), InputError);
}

TEST_CASE("column action basics") {
    RingCtx ctx(2, 2, 0);
    Poly f = P("x(1,1)", 0);
    CHECK(act_column(f, ScalarMatrix::identity(2, 0), ctx) == f);

    ScalarMatrix swap(2, 2, 0);
    swap.at(1, 2) = Scalar::one(0);
    swap.at(2, 1) = Scalar::one(0);
    CHECK(act_column(f, swap, ctx) == P("x(1,2)", 0));

    std::mt19937_64 rng(3);
    Poly D = delta(ctx);
    for (int k = 0; k < 10; ++k) {
        ScalarMatrix g = random_matrix(rng, 2, 2, 0);
        CHECK(act_column(D, g, ctx) == D * g.det());
    }
}

TEST_CASE("column action composes with the matrix product") {
    std::mt19937_64 rng(9);
    RingCtx ctx(2, 3, 5);
    for (int k = 0; k < 10; ++k) {
        Poly f = random_poly(rng, 5, 2, 3, 4, 3);
        ScalarMatrix g = random_matrix(rng, 3, 3, 5);
        ScalarMatrix h = random_matrix(rng, 3, 3, 5);
        CHECK(act_column(act_column(f, g, ctx), h, ctx) == act_column(f, h * g, ctx));
    }
}

TEST_CASE("minors") {
    RingCtx ctx(2, 3, 0);
    CHECK(minor(MinorSpec::parse("(1 | 2)"), ctx) == P("x(1,2)", 0));
    CHECK(minor(MinorSpec::parse("(1 2 | 1 2)"), ctx) == P("x(1,1)*x(2,2) - x(1,2)*x(2,1)", 0));
    CHECK(minor(MinorSpec::parse("(1 2 | 1 3)"), ctx) == P("x(1,1)*x(2,3) - x(1,3)*x(2,1)", 0));
    CHECK_THROWS_AS(minor(MinorSpec::parse("(2 1 | 1 2)"), ctx), InputError);
    CHECK_THROWS_AS(minor(MinorSpec::parse("(1 2 | 1 4)"), ctx), InputError);
}

TEST_CASE("minor expansion under a generic column move") {
    // exact expansion for the leading-rows minors, n = 2, d = 3
    RingCtx ctx(2, 3, 0);
    PolyMatrix g = generic_group_matrix(3, 0);
    for (const auto& J : increasing_subsets(3, 2)) {
        Poly lhs = act_column(minor({{1, 2}, J}, ctx), g, ctx);
        Poly rhs(0);
        for (const auto& I : increasing_subsets(3, 2)) rhs += minor({{1, 2}, I}, ctx) * minor_of(g, I, J);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("column reduction examples and property") {
    ScalarMatrix x(2, 3, 0);
    x.at(1, 1) = Scalar::one(0);
    x.at(2, 2) = Scalar::one(0);
    CHECK(column_reduce_u(x) == ScalarMatrix::identity(3, 0));

    ScalarMatrix y(2, 3, 0);
    y.at(1, 1) = Scalar::one(0);
    y.at(1, 3) = Scalar::one(0);
    y.at(2, 2) = Scalar::one(0);
    y.at(2, 3) = Scalar::one(0);
    ScalarMatrix u = column_reduce_u(y);
    CHECK(u.at(1, 3) == Scalar::of(-1, 0));
    CHECK(u.at(2, 3) == Scalar::of(-1, 0));
    CHECK(u.at(3, 3) == Scalar::one(0));
    ScalarMatrix cleared = y * u;
    for (std::size_t i = 1; i <= 2; ++i) CHECK(cleared.at(i, 3).is_zero());

    ScalarMatrix dep(2, 3, 0);
    dep.at(1, 1) = Scalar::one(0);
    dep.at(1, 2) = Scalar::one(0);
    CHECK_THROWS_AS(column_reduce_u(dep), InputError);

    std::mt19937_64 rng(21);
    for (int k = 0; k < 50; ++k) {
        std::uniform_int_distribution<int> nd(1, 4);
        int n = nd(rng);
        std::uniform_int_distribution<int> dd(n, 4);
        int d = dd(rng);
        ScalarMatrix m(n, d, 5);
        while (true) {
            m = random_matrix(rng, n, d, 5);
            ScalarMatrix lead(n, n, 5);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) lead.at(i, j) = m.at(i, j);
            if (!lead.det().is_zero()) break;
        }
        ScalarMatrix u = column_reduce_u(m);
        for (std::size_t i = 1; i <= u.rows(); ++i) {
            CHECK(u.at(i, i).is_one());
            for (std::size_t j = 1; j < i; ++j) CHECK(u.at(i, j).is_zero());
        }
        ScalarMatrix prod = m * u;
        for (int j = n + 1; j <= d; ++j)
            for (int i = 1; i <= n; ++i) CHECK(prod.at(i, j).is_zero());
    }
}

TEST_CASE("functional factorization examples") {
    // identity-pattern functional
    ScalarMatrix ell(2, 3, 0);
    ell.at(1, 1) = Scalar::one(0);
    ell.at(2, 2) = Scalar::one(0);
    auto fac = factor_functional(ell);
    CHECK(fac.g == ScalarMatrix::identity(3, 0));
    CHECK(fac.ellPrime == ScalarMatrix::identity(2, 0));

    // rank-deficient rows
    ScalarMatrix ell2(2, 3, 0);
    ell2.at(1, 1) = Scalar::one(0);
    ell2.at(2, 1) = Scalar::of(2, 0);
    auto fac2 = factor_functional(ell2);
    CHECK(fac2.ellPrime.at(1, 1) == Scalar::one(0));
    CHECK(fac2.ellPrime.at(2, 1) == Scalar::of(2, 0));
    CHECK(pad_functional(fac2.ellPrime, 3) * fac2.g == ell2);

    CHECK_THROWS_AS(factor_functional(ScalarMatrix(2, 3, 0)), InputError);
}

TEST_CASE("functional factorization reconstructs exactly") {
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {0u, 2u, 5u}) {
        for (int k = 0; k < 200; ++k) {
            std::uniform_int_distribution<int> nd(1, 3);
            int n = nd(rng);
            std::uniform_int_distribution<int> dd(n, 4);
            int d = dd(rng);
            ScalarMatrix ell = random_matrix(rng, n, d, p);
            bool zero = true;
            for (int i = 1; i <= n && zero; ++i)
                for (int j = 1; j <= d && zero; ++j)
                    if (!ell.at(i, j).is_zero()) zero = false;
            if (zero) continue;
            auto fac = factor_functional(ell);
            CHECK(!fac.g.det().is_zero());
            // the action of g^T on ellPrime gives back ell: C' * (g^T)^T = C' * g
            CHECK(functional_act(fac.g.transpose(), pad_functional(fac.ellPrime, d)) == ell);
        }
    }
}

TEST_CASE("column-initial minors generate the unitriangular invariants") {
    RingCtx ctx12(1, 2, 0);
    auto gens12 = u_invariant_generators(ctx12);
    REQUIRE(gens12.size() == 1);
    CHECK(gens12[0] == P("x(1,1)", 0));

    RingCtx ctx23(2, 3, 0);
    auto gens23 = u_invariant_generators(ctx23);
    REQUIRE(gens23.size() == 3);
    CHECK(gens23[0] == P("x(1,1)", 0));
    CHECK(gens23[1] == P("x(2,1)", 0));
    CHECK(gens23[2] == minor({{1, 2}, {1, 2}}, ctx23));

    RingCtx ctx22(2, 2, 0);
    CHECK(u_invariant_generators(ctx22).size() == 3);

    // fixed by a generic unitriangular column move
    for (int n = 1; n <= 3; ++n)
        for (int d = n; d <= 4; ++d) {
            RingCtx ctx(n, d, 5);
            PolyMatrix u = generic_unitriangular(d, 5);
            for (const auto& f : u_invariant_generators(ctx)) CHECK(act_column(f, u, ctx) == f);
        }
}

TEST_CASE("bitableau standardness and polynomials") {
    BiTableau a{{{1, 2}}, {{1, 3}}};
    CHECK(is_standard(a));

    BiTableau b{{{1, 2}, {1}}, {{1, 2}, {2}}};
    CHECK(is_standard(b));

    BiTableau c{{{1, 2}, {1}}, {{2, 3}, {1}}};
    CHECK(!is_standard(c));

    RingCtx ctx(2, 3, 0);
    CHECK(bitableau_poly(BiTableau{{{1, 2}}, {{1, 2}}}, ctx) == delta(ctx));
    CHECK(bitableau_poly(BiTableau{{{1}, {1}}, {{1}, {1}}}, ctx) == P("x(1,1)^2", 0));
    CHECK(bitableau_poly(BiTableau{{{1, 2}, {1}}, {{1, 2}, {3}}}, ctx) ==
          delta(ctx) * P("x(1,3)", 0));

    auto j = nlohmann::json::parse(R"({"D": [[1,2],[1]], "E": [[1,3],[2]]})");
    BiTableau parsed = BiTableau::from_json(j);
    CHECK(parsed.to_json() == j);
    CHECK_THROWS_AS(BiTableau::from_json(nlohmann::json::parse(R"({"D": [[1]], "E": [[1,2]]})")),
                    InputError);
}
