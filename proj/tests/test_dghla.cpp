#include <doctest.h>

#include "hla/deriv.hpp"
#include "hla/dghla.hpp"
#include "hla/error.hpp"
#include "hla/fixtures.hpp"
#include "hla/selftest.hpp"

using namespace hla;

namespace {

GradedCochain random_cochain(std::size_t arity, std::size_t dim, fixtures::RationalStream& rs) {
    GradedCochain p(arity, dim, dim);
    for (const Tuple& t : increasing_tuples(dim, arity)) {
        Vec v(dim);
        for (auto& x : v) x = rs.next();
        p.set(t, v);
    }
    return p;
}

Matrix random_map(std::size_t dim, fixtures::RationalStream& rs) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rs.next();
    return m;
}

}  // namespace

TEST_CASE("circle product basics") {
    const DghlaContext ctx = DghlaContext::single(
        yau_twist(fixtures::sl2(), fixtures::sl2_diag_automorphism(Rational(3))));
    fixtures::RationalStream rs(41);

    SUBCASE("zero absorbs") {
        const GradedCochain z(2, 3, 3);
        const GradedCochain p = random_cochain(2, 3, rs);
        CHECK(circle(ctx, p, z).is_zero());
        CHECK(circle(ctx, z, p).is_zero());
    }
    SUBCASE("two arity-1 cochains compose through the twists") {
        const Matrix a = random_map(3, rs);
        const Matrix b = random_map(3, rs);
        const Matrix expected =
            ctx.ambient.phi() * a * ctx.phi_inv * b * ctx.phi_inv;  // phi A phi^-1 B phi^-1
        CHECK(matrix_from_cochain(circle(ctx, cochain_from_matrix(a), cochain_from_matrix(b))) ==
              expected);
    }
    SUBCASE("identity twist reduces composition to plain composition") {
        const DghlaContext flat = DghlaContext::single(fixtures::sl2());
        const Matrix a = random_map(3, rs);
        const Matrix b = random_map(3, rs);
        CHECK(matrix_from_cochain(circle(flat, cochain_from_matrix(a), cochain_from_matrix(b))) ==
              a * b);
    }
}

TEST_CASE("graded bracket specializations") {
    fixtures::RationalStream rs(42);
    for (const auto& [name, alg] : fixtures::corpus(6)) {
        CAPTURE(name);
        const DghlaContext ctx = DghlaContext::single(alg);
        const GlContext gl(alg.phi());
        const Matrix a = random_map(alg.dim(), rs);
        const Matrix b = random_map(alg.dim(), rs);
        CHECK(matrix_from_cochain(
                  graded_bracket(ctx, cochain_from_matrix(a), cochain_from_matrix(b))) ==
              gl_bracket(gl, a, b));
    }
}

TEST_CASE("odd-degree self bracket is twice the self circle product") {
    const DghlaContext ctx = DghlaContext::single(fixtures::sl2());
    fixtures::RationalStream rs(43);
    const GradedCochain p = random_cochain(2, 3, rs);  // arity 2 = degree 1
    CHECK(graded_bracket(ctx, p, p) == circle(ctx, p, p).scaled(Rational(2)));
}

TEST_CASE("graded antisymmetry on sampled cochains") {
    const DghlaContext ctx = DghlaContext::direct_sum(fixtures::abelian(1), fixtures::sl2());
    fixtures::RationalStream rs(44);
    for (std::size_t ap = 1; ap <= 3; ++ap)
        for (std::size_t aq = 1; aq <= 3; ++aq) {
            const GradedCochain p = random_cochain(ap, 4, rs);
            const GradedCochain q = random_cochain(aq, 4, rs);
            GradedCochain rhs = graded_bracket(ctx, q, p);
            if (((ap - 1) * (aq - 1)) % 2 == 0) rhs = rhs.scaled(Rational(-1));
            CHECK(graded_bracket(ctx, p, q) == rhs);
        }
}

TEST_CASE("Ad_phi on cochains") {
    const HomLieAlgebra tw =
        yau_twist(fixtures::sl2(), fixtures::sl2_diag_automorphism(Rational(2)));
    const DghlaContext ctx = DghlaContext::single(tw);
    // mu is a fixed point (multiplicativity restated)
    CHECK(ad_phi_cochain(ctx, ctx.mu) == ctx.mu);
    // arity 1 reduces to conjugation
    fixtures::RationalStream rs(45);
    const Matrix a = random_map(3, rs);
    CHECK(matrix_from_cochain(ad_phi_cochain(ctx, cochain_from_matrix(a))) ==
          ad_conjugate(GlContext(tw.phi()), a));
    // identity twist acts trivially
    const DghlaContext flat = DghlaContext::single(fixtures::sl2());
    const GradedCochain p = random_cochain(2, 3, rs);
    CHECK(ad_phi_cochain(flat, p) == p);
}

TEST_CASE("differential: flat bracket cochain and d^2 = 0") {
    fixtures::RationalStream rs(46);
    for (const auto& [name, alg] : fixtures::corpus(6)) {
        CAPTURE(name);
        const DghlaContext ctx = DghlaContext::single(alg);
        CHECK(differential(ctx, ctx.mu).is_zero());
        for (std::size_t arity = 1; arity <= 2; ++arity) {
            const GradedCochain p = random_cochain(arity, alg.dim(), rs);
            CHECK(differential(ctx, differential(ctx, p)).is_zero());
        }
        CHECK(differential(ctx, GradedCochain(2, alg.dim(), alg.dim())).is_zero());
    }
}

TEST_CASE("restriction") {
    const DghlaContext ctx = DghlaContext::direct_sum(fixtures::abelian(2), fixtures::sl2());
    const std::size_t N = 5;

    SUBCASE("a g-pair cochain valued in h is already restricted") {
        GradedCochain p(2, N, N);
        Vec v = zero_vec(N);
        v[3] = 1;  // h component
        p.set({0, 1}, v);
        CHECK(is_restricted(ctx, p));
        CHECK(restrict_gt(ctx, p) == p);
    }
    SUBCASE("mixed-valued cochains lose their g components") {
        GradedCochain p(2, N, N);
        Vec v = zero_vec(N);
        v[0] = 7;  // g component
        v[4] = 3;  // h component
        p.set({0, 2}, v);
        const GradedCochain r = restrict_gt(ctx, p);
        Vec expected = zero_vec(N);
        expected[4] = 3;
        CHECK(r.at({0, 2}) == expected);
        CHECK(is_restricted(ctx, r));
        CHECK_FALSE(is_restricted(ctx, p));
    }
    SUBCASE("the h-block bracket component dies") {
        GradedCochain mu_h(2, N, N);
        for (std::size_t a = 2; a < N; ++a)
            for (std::size_t b = a + 1; b < N; ++b)
                mu_h.set({a, b}, ctx.mu.at({a, b}));
        CHECK(restrict_gt(ctx, mu_h).is_zero());
    }
    SUBCASE("closure under the differential and the bracket") {
        fixtures::RationalStream rs(47);
        for (std::size_t arity = 1; arity <= 2; ++arity) {
            const GradedCochain p = restrict_gt(ctx, random_cochain(arity, N, rs));
            const GradedCochain q = restrict_gt(ctx, random_cochain(2, N, rs));
            CHECK(is_restricted(ctx, differential(ctx, p)));
            CHECK(is_restricted(ctx, graded_bracket(ctx, p, q)));
        }
    }
    SUBCASE("restriction needs a direct-sum context") {
        const DghlaContext single = DghlaContext::single(fixtures::sl2());
        CHECK_THROWS_AS(is_restricted(single, single.mu), Error);
        CHECK_THROWS_AS(restrict_gt(single, single.mu), Error);
    }
}

TEST_CASE("packing cocycles") {
    SUBCASE("zero cocycle packs to the zero cochain") {
        CocyclePair c;
        c.g = fixtures::abelian(2);
        c.h = fixtures::abelian(2);
        c.rho.assign(2, Matrix(2, 2));
        c.omega = Cochain(2, 2, 2);
        CHECK(pack_cocycle(c).is_zero());
    }
    SUBCASE("the affine-line cocycle has one mixed value") {
        CocyclePair c;
        c.g = fixtures::abelian(1);
        c.h = fixtures::abelian(1);
        c.rho.assign(1, Matrix::identity(1));
        c.omega = Cochain(2, 1, 1);
        const GradedCochain alpha = pack_cocycle(c);
        CHECK(alpha.values().size() == 1);
        CHECK(alpha.at({0, 1}) == Vec{Rational(0), Rational(1)});
        CHECK(unpack_cocycle(alpha, c.g, c.h) == c);
    }
    SUBCASE("pack/unpack is the identity on the corpus") {
        for (const auto& fix : selftest::cocycle_corpus()) {
            CAPTURE(fix.name);
            CHECK(unpack_cocycle(pack_cocycle(fix.c), fix.c.g, fix.c.h) == fix.c);
            const DghlaContext ctx = DghlaContext::direct_sum(fix.c.g, fix.c.h);
            CHECK(is_restricted(ctx, pack_cocycle(fix.c)));
        }
    }
}

TEST_CASE("Maurer-Cartan checks") {
    SUBCASE("zero is flat and invariant over a direct sum") {
        const DghlaContext ctx = DghlaContext::direct_sum(fixtures::sl2(), fixtures::heisenberg3());
        CHECK(mc_check(ctx, GradedCochain(2, 6, 6)).all_pass());
    }
    SUBCASE("valid corpus cocycles are Maurer-Cartan elements") {
        for (const auto& fix : selftest::cocycle_corpus()) {
            CAPTURE(fix.name);
            const DghlaContext ctx = DghlaContext::direct_sum(fix.c.g, fix.c.h);
            CHECK(mc_check(ctx, pack_cocycle(fix.c)).all_pass());
        }
    }
    SUBCASE("mutants fail mc_check, matching check_cocycle") {
        for (const auto& fix : selftest::cocycle_mutants()) {
            CAPTURE(fix.name);
            const DghlaContext ctx = DghlaContext::direct_sum(fix.c.g, fix.c.h);
            const CheckReport r = mc_check(ctx, pack_cocycle(fix.c));
            CHECK_FALSE(r.all_pass());
            if (fix.breaks == "p4-curvature" || fix.breaks == "p5-cocycle-identity")
                CHECK_FALSE(r.passed("mc-flatness"));
            if (fix.breaks == "p1-omega-equivariance" || fix.breaks == "p2-rho-equivariance")
                CHECK_FALSE(r.passed("mc-invariance"));
        }
    }
    SUBCASE("unrestricted cochains are rejected") {
        const DghlaContext ctx = DghlaContext::direct_sum(fixtures::abelian(1), fixtures::abelian(1));
        GradedCochain bad(2, 2, 2);
        Vec v = zero_vec(2);
        v[0] = 1;  // escapes the h block
        bad.set({0, 1}, v);
        CHECK_THROWS_AS(mc_check(ctx, bad), Error);
    }
}

TEST_CASE("the whole structure report passes on assorted pairs") {
    CHECK(dghla_structure_report(fixtures::sl2(), fixtures::heisenberg3()).all_pass());
    CHECK(dghla_structure_report(
              yau_twist(fixtures::heisenberg3(),
                                  fixtures::heisenberg_diag_automorphism(Rational(2), Rational(5))),
              fixtures::abelian(2))
              .all_pass());
}
