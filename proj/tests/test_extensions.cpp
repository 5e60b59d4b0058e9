#include <doctest.h>

#include "hla/error.hpp"
#include "hla/extensions.hpp"
#include "hla/fixtures.hpp"
#include "hla/selftest.hpp"

using namespace hla;

namespace {

CocyclePair zero_cocycle(const HomLieAlgebra& g, const HomLieAlgebra& h) {
    CocyclePair c;
    c.g = g;
    c.h = h;
    c.rho.assign(g.dim(), Matrix(h.dim(), h.dim()));
    c.omega = Cochain(2, g.dim(), h.dim());
    return c;
}

CocyclePair affine_line() {
    CocyclePair c = zero_cocycle(fixtures::abelian(1), fixtures::abelian(1));
    c.rho[0](0, 0) = 1;
    return c;
}

}  // namespace

TEST_CASE("cocycle checks on the easy fixtures") {
    CHECK(check_cocycle(zero_cocycle(fixtures::sl2(), fixtures::heisenberg3())).all_pass());
    CHECK(check_cocycle(affine_line()).all_pass());

    // abelian(1) acting on abelian(m): any rho commuting with phi_h
    CocyclePair c = zero_cocycle(fixtures::abelian(1),
                                 fixtures::abelian(2, Matrix::diagonal({Rational(1), Rational(2)})));
    c.rho[0] = Matrix::diagonal({Rational(3), Rational(5)});
    CHECK(check_cocycle(c).all_pass());
}

TEST_CASE("corrupting one omega entry of a valid cocycle breaks p4 or p5") {
    for (const auto& fix : selftest::cocycle_corpus()) {
        if (fix.name != "semidirect-sl2-plane") continue;
        CocyclePair c = fix.c;
        c.omega.set({0, 1}, {Rational(1), Rational(0)});
        const CheckReport r = check_cocycle(c);
        CHECK_FALSE(r.all_pass());
        CHECK((!r.passed("p4-curvature") || !r.passed("p5-cocycle-identity")));
    }
}

TEST_CASE("the five targeted mutants flip exactly their own entry") {
    for (const auto& fix : selftest::cocycle_mutants()) {
        CAPTURE(fix.name);
        const CheckReport r = check_cocycle(fix.c);
        for (const auto& e : r.entries()) {
            if (e.name == fix.breaks)
                CHECK_FALSE(e.pass);
            else
                CHECK(e.pass);
        }
    }
}

TEST_CASE("building extensions") {
    SUBCASE("direct sum") {
        const CocyclePair c = zero_cocycle(fixtures::sl2(), fixtures::abelian(2));
        const BuiltExtension ext = build_extension(c);
        CHECK(verify(ext.pres.ghat).all_pass());
        CHECK(check_presentation(ext.pres, c.g, c.h).all_pass());
    }
    SUBCASE("affine line: [x,u] = u") {
        const BuiltExtension ext = build_extension(affine_line());
        CHECK(verify(ext.pres.ghat).all_pass());
        CHECK(ext.pres.ghat.bracket_basis(0, 1) == Vec{Rational(0), Rational(1)});
    }
    SUBCASE("invalid cocycles are rejected") {
        for (const auto& fix : selftest::cocycle_mutants()) {
            CAPTURE(fix.name);
            CHECK_THROWS_AS(build_extension(fix.c), Error);
        }
    }
}

TEST_CASE("extension verifies iff the cocycle is valid (both directions)") {
    for (const auto& fix : selftest::cocycle_corpus()) {
        CAPTURE(fix.name);
        CHECK(check_cocycle(fix.c).all_pass());
        CHECK(verify(extension_algebra(fix.c)).all_pass());
    }
    for (const auto& fix : selftest::cocycle_mutants()) {
        CAPTURE(fix.name);
        CHECK_FALSE(check_cocycle(fix.c).all_pass());
        CHECK_FALSE(verify(extension_algebra(fix.c)).all_pass());
    }
}

TEST_CASE("extract is the exact inverse of build") {
    for (const auto& fix : selftest::cocycle_corpus()) {
        CAPTURE(fix.name);
        const BuiltExtension ext = build_extension(fix.c);
        CHECK(extract_cocycle(ext.pres, ext.section, fix.c.g, fix.c.h) == fix.c);
    }
}

TEST_CASE("sections") {
    const CocyclePair c = zero_cocycle(fixtures::sl2(), fixtures::abelian(1));
    const BuiltExtension ext = build_extension(c);

    SUBCASE("the canonical section is diagonal and is found again") {
        CHECK((ext.pres.p * ext.section.s).is_identity());
        CHECK(ext.pres.ghat.phi() * ext.section.s == ext.section.s * c.g.phi());
        const auto found = find_diagonal_section(ext.pres, c.g);
        REQUIRE(found.has_value());
        CHECK((ext.pres.p * found->s).is_identity());
        CHECK(ext.pres.ghat.phi() * found->s == found->s * c.g.phi());
    }
    SUBCASE("extract rejects non-sections and non-diagonal sections") {
        SectionData bad{Matrix(4, 3)};
        CHECK_THROWS_AS(extract_cocycle(ext.pres, bad, c.g, c.h), Error);
    }
}

TEST_CASE("presentation checks catch corrupted structure maps") {
    const CocyclePair c = zero_cocycle(fixtures::sl2(), fixtures::heisenberg3());
    const BuiltExtension ext = build_extension(c);
    CHECK(check_presentation(ext.pres, c.g, c.h).all_pass());

    SUBCASE("iota that is not a morphism") {
        ExtensionPresentation bad = ext.pres;
        bad.iota(3, 0) = 2;  // scales one h generator only
        const CheckReport r = check_presentation(bad, c.g, c.h);
        CHECK_FALSE(r.passed("iota-morphism"));
    }
    SUBCASE("p that misses the quotient bracket") {
        ExtensionPresentation bad = ext.pres;
        bad.p(0, 1) = 1;  // mixes two g coordinates
        CHECK_FALSE(check_presentation(bad, c.g, c.h).all_pass());
    }
    SUBCASE("rank defects are reported") {
        ExtensionPresentation bad = ext.pres;
        bad.iota = Matrix(6, 3);
        const CheckReport r = check_presentation(bad, c.g, c.h);
        CHECK_FALSE(r.passed("iota-injective"));
    }
}

TEST_CASE("the Jordan-block extension has no diagonal section") {
    Matrix jordan = Matrix::identity(2);
    jordan(0, 1) = 1;
    ExtensionPresentation pres;
    pres.ghat = fixtures::abelian(2, jordan);
    pres.iota = Matrix(2, 1);
    pres.iota(0, 0) = 1;
    pres.p = Matrix(1, 2);
    pres.p(0, 1) = 1;
    CHECK(check_presentation(pres, fixtures::abelian(1), fixtures::abelian(1)).all_pass());
    CHECK_FALSE(find_diagonal_section(pres, fixtures::abelian(1)).has_value());
}

TEST_CASE("a different diagonal section extracts an equivalent cocycle") {
    // central extension of the plane by a line (the heisenberg cocycle)
    CocyclePair c = zero_cocycle(fixtures::abelian(2), fixtures::abelian(1));
    c.omega.set({0, 1}, {Rational(1)});
    const BuiltExtension ext = build_extension(c);

    Matrix phitheta(1, 2);
    phitheta(0, 0) = Rational(2);
    phitheta(0, 1) = Rational(-3);
    // s' = s - iota . phitheta stays a diagonal section (phi's are identities)
    const Matrix s2 = ext.section.s - ext.pres.iota * phitheta;
    const CocyclePair c2 = extract_cocycle(ext.pres, SectionData{s2}, c.g, c.h);
    CHECK(check_cocycle(c2).all_pass());
    CHECK(check_iso_witness(IsoWitness{phitheta}, c, c2).all_pass());
}

TEST_CASE("cocycle/morphism translation") {
    SUBCASE("zero cocycle gives the zero morphism") {
        const CocyclePair c = zero_cocycle(fixtures::abelian(2), fixtures::sl2());
        const TwoAlgMorphism f = cocycle_to_morphism(c);
        CHECK(f.f0.is_zero());
        CHECK(f.f2.is_zero());
        CHECK(check_2alg_morphism(f, as_2algebra(c.g), build_der2(c.h)).all_pass());
    }
    SUBCASE("affine line gives a nonzero f0 with zero f2") {
        const TwoAlgMorphism f = cocycle_to_morphism(affine_line());
        CHECK_FALSE(f.f0.is_zero());
        CHECK(f.f2.is_zero());
    }
    SUBCASE("round trips on the corpus") {
        for (const auto& fix : selftest::cocycle_corpus()) {
            CAPTURE(fix.name);
            const TwoAlgMorphism f = cocycle_to_morphism(fix.c);
            CHECK(check_2alg_morphism(f, as_2algebra(fix.c.g), build_der2(fix.c.h)).all_pass());
            CHECK(morphism_to_cocycle(f, fix.c.g, fix.c.h) == fix.c);
        }
    }
    SUBCASE("synthetic morphism with nonzero f2 into DER(abelian(2))") {
        TwoAlgMorphism f;
        f.f0 = Matrix(4, 2);  // Der(abelian(2)) is all of gl2
        f.f1 = Matrix(2, 0);
        f.f2 = Cochain(2, 2, 2);
        f.f2.set({0, 1}, {Rational(1), Rational(-2)});
        const CocyclePair c = morphism_to_cocycle(f, fixtures::abelian(2), fixtures::abelian(2));
        CHECK(check_cocycle(c).all_pass());
        CHECK(c.omega.at({0, 1}) == Vec{Rational(-1), Rational(2)});
    }
}

TEST_CASE("iso witnesses") {
    SUBCASE("identical cocycles with the zero witness") {
        const CocyclePair c = zero_cocycle(fixtures::sl2(), fixtures::abelian(2));
        CHECK(check_iso_witness(IsoWitness{Matrix(2, 3)}, c, c).all_pass());
    }
    SUBCASE("different outer parts cannot be equivalent") {
        const CocyclePair c2 = zero_cocycle(fixtures::abelian(1), fixtures::abelian(2));
        CocyclePair c1 = c2;
        c1.rho[0](0, 1) = 1;  // not inner: h is abelian, ad = 0
        const CheckReport r = check_iso_witness(IsoWitness{Matrix(2, 1)}, c1, c2);
        CHECK_FALSE(r.passed("isom2-rho-defect"));
    }
    SUBCASE("generated pairs pass and the transported cocycle is valid") {
        for (const auto& pair : selftest::equivalent_pairs(6)) {
            CAPTURE(pair.name);
            CHECK(check_cocycle(pair.c1).all_pass());
            CHECK(check_iso_witness(pair.w, pair.c1, pair.c2).all_pass());
        }
    }
    SUBCASE("cocycles over different algebras are rejected") {
        const CocyclePair a = zero_cocycle(fixtures::sl2(), fixtures::abelian(1));
        const CocyclePair b = zero_cocycle(fixtures::heisenberg3(), fixtures::abelian(1));
        CHECK_THROWS_AS(check_iso_witness(IsoWitness{Matrix(1, 3)}, a, b), Error);
    }
}

TEST_CASE("witness/homotopy round trips and the direction convention") {
    for (const auto& pair : selftest::equivalent_pairs(6)) {
        CAPTURE(pair.name);
        const HomotopyData tau = iso_to_homotopy(pair.w, pair.c1, pair.c2);
        CHECK(tau.tau == pair.w.phitheta);
        CHECK(homotopy_to_iso(tau, pair.c1, pair.c2) == pair.w);
        // swapping the cocycles without adjusting the witness must fail as
        // soon as it changed anything (a witness between equal cocycles can
        // legitimately work both ways)
        if (!(pair.c1 == pair.c2)) {
            CHECK_FALSE(check_iso_witness(pair.w, pair.c2, pair.c1).all_pass());
            CHECK_THROWS_AS(iso_to_homotopy(pair.w, pair.c2, pair.c1), Error);
        }
    }

    // deterministic asymmetric instance: transporting the semidirect action
    // by phitheta(h) = u1 produces a genuinely different omega
    CocyclePair c2 = zero_cocycle(fixtures::sl2(), fixtures::abelian(2));
    c2.rho[0] = Matrix::diagonal({Rational(1), Rational(-1)});
    c2.rho[1](0, 1) = 1;
    c2.rho[2](1, 0) = 1;
    Matrix phitheta(2, 3);
    phitheta(1, 0) = 1;
    CocyclePair c1 = c2;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            Vec w = c2.omega.at({i, j});
            w = vec_add(w, c2.rho[i] * phitheta.col(j));
            w = vec_sub(w, c2.rho[j] * phitheta.col(i));
            w = vec_sub(w, phitheta * c2.g.bracket_basis(i, j));
            c1.omega.set({i, j}, std::move(w));
        }
    const IsoWitness w{phitheta};
    CHECK(check_iso_witness(w, c1, c2).all_pass());
    CHECK_FALSE(check_iso_witness(w, c2, c1).all_pass());
}

TEST_CASE("abelian-h equivalence solver") {
    SUBCASE("recovers a witness for generated abelian pairs") {
        // bases 2 (central) and 3 (affine) of the generator have abelian h
        for (const auto& pair : selftest::equivalent_pairs(8)) {
            bool abelian_h = true;
            for (std::size_t a = 0; a < pair.c1.h.dim(); ++a)
                for (std::size_t b = 0; b < pair.c1.h.dim(); ++b)
                    if (!is_zero(pair.c1.h.bracket_basis(a, b))) abelian_h = false;
            if (!abelian_h) continue;
            CAPTURE(pair.name);
            const auto found = solve_iso_witness_abelian_h(pair.c1, pair.c2);
            REQUIRE(found.has_value());
            CHECK(check_iso_witness(*found, pair.c1, pair.c2).all_pass());
        }
    }
    SUBCASE("the central extension is not equivalent to the direct sum") {
        const CocyclePair split = zero_cocycle(fixtures::abelian(2), fixtures::abelian(1));
        CocyclePair central = split;
        central.omega.set({0, 1}, {Rational(1)});
        CHECK_FALSE(solve_iso_witness_abelian_h(central, split).has_value());
    }
    SUBCASE("rejects non-abelian h") {
        const CocyclePair c = zero_cocycle(fixtures::abelian(1), fixtures::sl2());
        CHECK_THROWS_AS(solve_iso_witness_abelian_h(c, c), Error);
    }
}

TEST_CASE("theta commutes with the structure maps") {
    for (const auto& pair : selftest::equivalent_pairs(4)) {
        CAPTURE(pair.name);
        const BuiltExtension e1 = build_extension(pair.c1);
        const BuiltExtension e2 = build_extension(pair.c2);
        const Matrix theta = induced_theta(pair.w, pair.c1.g.dim(), pair.c1.h.dim());
        CHECK(check_morphism(theta, e2.pres.ghat, e1.pres.ghat).all_pass());
        CHECK(theta * e2.pres.iota == e1.pres.iota);
        CHECK(e1.pres.p * theta == e2.pres.p);
    }
}
