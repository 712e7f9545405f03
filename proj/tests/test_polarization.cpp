#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "vilab/groups.hpp"
#include "vilab/polarization.hpp"

using namespace vilab;
using namespace vilab::testutil;

TEST_CASE("orbit spans from the generic expansion") {
    RingCtx square(2, 2, 0);
    ModuleSpan d = module_span(delta(square), square);
    CHECK(d.basis.dim() == 1);
    CHECK(d.elements[0].monic() == delta(square).monic());

    RingCtx row(1, 2, 0);
    ModuleSpan x = module_span(P("x(1,1)", 0), row);
    CHECK(x.basis.dim() == 2);
    CHECK(x.basis.contains(P("x(1,1)", 0)));
    CHECK(x.basis.contains(P("x(1,2)", 0)));

    CHECK_THROWS_AS(module_span(P("x(1,1)^2 + x(1,2)", 0), row), InputError);
    CHECK_THROWS_AS(module_span(Poly::zero(0), row), InputError);
}

TEST_CASE("orbit spans are stable under numeric specializations") {
    std::mt19937_64 rng(19);
    RingCtx ctx(2, 4, 2);
    Poly gen = P("x(1,1)^4*x(2,1)", 2);
    ModuleSpan span = module_span(gen, ctx);
    CHECK(span.basis.dim() == 16);  // all x(1,s)^4 x(2,t)
    for (int k = 0; k < 50; ++k) {
        ScalarMatrix g = random_matrix(rng, 4, 4, 2);
        for (const auto& b : span.elements) CHECK(span.basis.contains(act_column(b, g, ctx)));
    }
}

TEST_CASE("generic expansion agrees with numeric orbit sampling over Q") {
    // independent oracle: over characteristic 0, translates by random integer
    // matrices span the same space as the generic-matrix expansion
    std::mt19937_64 rng(71);
    RingCtx ctx(2, 3, 0);
    std::uniform_int_distribution<long long> entry(-5, 5);
    auto random_int_matrix = [&]() {
        ScalarMatrix g(3, 3, 0);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) g.at(i, j) = Scalar::of(entry(rng), 0);
        return g;
    };
    for (const Poly& seed : {delta(ctx), P("x(1,1)*x(2,2)", 0), P("x(1,1)^2 + x(1,2)*x(2,1)", 0)}) {
        ModuleSpan span = module_span(seed, ctx);
        SpanBasis sampled(0);
        for (int k = 0; k < 25; ++k) sampled.insert(act_column(seed, random_int_matrix(), ctx));
        CHECK(sampled.dim() == span.basis.dim());
        for (const auto& b : span.elements) CHECK(sampled.contains(b));
        for (const auto& r : sampled.row_polys()) CHECK(span.basis.contains(r));
    }
}

TEST_CASE("graded components of the polarized algebra") {
    RingCtx square(2, 2, 0);
    SpanBasis c = polarized_component({delta(square)}, square, 2);
    CHECK(c.dim() == 1);

    RingCtx row(1, 2, 0);
    SpanBasis c2 = polarized_component({P("x(1,1)", 0)}, row, 2);
    CHECK(c2.dim() == 3);
    CHECK(c2.contains(P("x(1,1)^2", 0)));
    CHECK(c2.contains(P("x(1,1)*x(1,2)", 0)));
    CHECK(c2.contains(P("x(1,2)^2", 0)));

    SpanBasis c0 = polarized_component({P("x(1,1)", 0)}, row, 0);
    CHECK(c0.dim() == 1);
    CHECK(c0.contains(Poly::constant(7, 0)));
}

TEST_CASE("graded pieces multiply into graded pieces") {
    RingCtx row(1, 3, 5);
    std::vector<Poly> gens{P("x(1,1)", 5)};
    PolarizedAlgebra alg(gens, row, {});
    auto a = alg.component(1).row_polys();
    auto b = alg.component(2).row_polys();
    SpanBasis c = alg.component(3);
    for (const auto& f : a)
        for (const auto& g : b) CHECK(c.contains(f * g));
}

TEST_CASE("membership certificates for the torus counterexample") {
    RingCtx ctx(2, 4, 2);
    GroupSpec H;  // weights (-1, 4)
    DiagonalSpec d;
    d.freeWeights = {{-1}, {4}};
    H.v = d;

    std::vector<Poly> gens;
    for (const auto& m : minimal_monomial_generators(H, RingCtx(2, 2, 2), 8))
        gens.push_back(Poly::term(m, Scalar::one(2)));
    REQUIRE(gens.size() == 10);

    PolarizedAlgebra alg(gens, ctx, {});

    Poly F = P("x(1,1)*x(1,2)*x(1,3)*x(1,4)*x(2,4)", 2);
    auto cert = alg.member(F);
    CHECK(cert.verdict == MembershipCertificate::Verdict::nonmember);
    CHECK(cert.residual == F);
    CHECK(cert.to_json()["verdict"] == "nonmember");

    // a generator image is a member with an exact certificate
    auto yes = alg.member(gens[0]);
    REQUIRE(yes.is_member());
    CHECK(yes.expand(2) == gens[0]);

    // smallest p-power pushed inside: level 1
    auto root = alg.p_root_level(F, 4);
    REQUIRE(root.level.has_value());
    CHECK(*root.level == 1);
    CHECK(root.power == 2);
    CHECK(root.certificate.expand(2) == poly_pow(F, 2));

    // a member needs no power at all
    auto zero_level = alg.p_root_level(gens[0], 4);
    REQUIRE(zero_level.level.has_value());
    CHECK(*zero_level.level == 0);
}

TEST_CASE("membership for the scalar cube-root group") {
    RingCtx ctx(2, 3, 2);
    DiagonalSpec d;
    d.torsion.push_back({3, {1, 1}});
    GroupSpec H;
    H.v = d;

    std::vector<Poly> gens;
    for (const auto& m : minimal_monomial_generators(H, RingCtx(2, 2, 2), 3))
        gens.push_back(Poly::term(m, Scalar::one(2)));
    REQUIRE(gens.size() == 20);

    PolarizedAlgebra alg(gens, ctx, {});
    Poly f = P("x(1,1)*x(1,2)*x(1,3)", 2);
    CHECK(alg.member(f).verdict == MembershipCertificate::Verdict::nonmember);

    auto root = alg.p_root_level(f, 4);
    REQUIRE(root.level.has_value());
    CHECK(*root.level == 1);
    CHECK(root.certificate.expand(2) == poly_pow(f, 2));
}

TEST_CASE("determinant powers clear the classical minors immediately") {
    RingCtx ctx(2, 3, 5);
    RingCtx square(2, 2, 5);
    PolarizedAlgebra alg({delta(square)}, ctx, {});

    auto res0 = alg.delta_power_level(delta(square), 6);  // a member as-is
    REQUIRE(res0.exponent.has_value());
    CHECK(*res0.exponent == 0);

    for (const auto& J : increasing_subsets(3, 2)) {
        auto res = alg.delta_power_level(minor({{1, 2}, J}, ctx), 6);
        REQUIRE(res.exponent.has_value());
        CHECK(*res.exponent == 0);
    }
}

TEST_CASE("unitriangular-fixed elements that are invariant are members") {
    // special linear case: the leading minor
    RingCtx ctx(2, 3, 5);
    RingCtx square(2, 2, 5);
    PolarizedAlgebra alg({delta(square)}, ctx, {});
    GroupSpec sl;
    sl.v = RootedSpec{RootedKind::SL, 2};
    for (const auto& f : u_invariant_generators(ctx))
        if (is_invariant(f, sl, ctx).invariant) CHECK(alg.member(f).is_member());

    // block unipotent case
    BlockUnipotentSpec spec;
    spec.blocks = {2, 1};
    GroupSpec bu;
    bu.v = spec;
    RingCtx ctx3(3, 4, 2);
    std::vector<Poly> gens;
    for (const auto& I : invariant_row_sets(spec))
        for (const auto& J : increasing_subsets(3, static_cast<int>(I.size())))
            gens.push_back(minor({I, J}, RingCtx(3, 3, 2)));
    PolarizedAlgebra alg3(gens, ctx3, {});
    for (const auto& f : u_invariant_generators(ctx3))
        if (is_invariant(f, bu, ctx3).invariant) CHECK(alg3.member(f).is_member());
}

TEST_CASE("inhomogeneous queries split by degree") {
    RingCtx row(1, 2, 0);
    PolarizedAlgebra alg({P("x(1,1)", 0)}, row, {});
    Poly f = P("x(1,1) + x(1,2)^2 + 3", 0);
    auto cert = alg.member(f);
    REQUIRE(cert.is_member());
    CHECK(cert.expand(0) == f);
}

TEST_CASE("caps surface as indeterminate verdicts") {
    RingCtx ctx(2, 4, 2);
    DiagonalSpec d;
    d.freeWeights = {{-1}, {4}};
    GroupSpec H;
    H.v = d;
    std::vector<Poly> gens;
    for (const auto& m : minimal_monomial_generators(H, RingCtx(2, 2, 2), 8))
        gens.push_back(Poly::term(m, Scalar::one(2)));
    Caps tight;
    tight.maxProducts = 3;
    PolarizedAlgebra alg(gens, ctx, tight);
    auto cert = alg.member(P("x(1,1)*x(1,2)*x(1,3)*x(1,4)*x(2,4)", 2));
    CHECK(cert.verdict == MembershipCertificate::Verdict::indeterminate);
    CHECK(!cert.note.empty());
}
