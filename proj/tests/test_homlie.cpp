#include <doctest.h>

#include "hla/error.hpp"
#include "hla/fixtures.hpp"
#include "hla/homlie.hpp"

using namespace hla;

TEST_CASE("sl2 fixture satisfies the axioms and bracket table") {
    const HomLieAlgebra sl2 = fixtures::sl2();
    CHECK(verify(sl2).all_pass());
    // [e,f] = h
    const Vec e = {Rational(0), Rational(1), Rational(0)};
    const Vec f = {Rational(0), Rational(0), Rational(1)};
    CHECK(sl2.bracket(e, f) == Vec{Rational(1), Rational(0), Rational(0)});
    CHECK(is_zero(sl2.bracket(e, e)));
}

TEST_CASE("abelian algebras have zero bracket and full center") {
    const HomLieAlgebra ab = fixtures::abelian(3);
    CHECK(verify(ab).all_pass());
    fixtures::RationalStream rs(3);
    Vec x(3), y(3);
    for (auto& v : x) v = rs.next();
    for (auto& v : y) v = rs.next();
    CHECK(is_zero(ab.bracket(x, y)));
    CHECK(center(ab) == Subspace::full(3));
}

TEST_CASE("verify catches each mutation class with a counterexample") {
    const HomLieAlgebra sl2 = fixtures::sl2();

    SUBCASE("broken antisymmetry") {
        std::vector<Vec> table;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) table.push_back(sl2.bracket_basis(i, j));
        table[1 * 3 + 0] = table[0 * 3 + 1];
        const auto bad = HomLieAlgebra::from_tensor(3, sl2.labels(), table, Matrix::identity(3));
        const CheckReport r = verify(bad);
        CHECK_FALSE(r.passed("antisymmetry"));
        REQUIRE(r.find("antisymmetry")->cex.has_value());
    }
    SUBCASE("broken multiplicativity, localized at (e,f)") {
        std::map<std::pair<std::size_t, std::size_t>, Vec> upper;
        upper[{0, 1}] = {Rational(0), Rational(2), Rational(0)};
        upper[{0, 2}] = {Rational(0), Rational(0), Rational(-2)};
        upper[{1, 2}] = {Rational(1), Rational(0), Rational(0)};
        const auto bad = HomLieAlgebra::from_upper(
            3, {"h", "e", "f"}, upper, Matrix::diagonal({Rational(1), Rational(2), Rational(3)}));
        const CheckReport r = verify(bad);
        CHECK(r.passed("antisymmetry"));
        CHECK_FALSE(r.passed("multiplicativity"));
        const auto& cex = *r.find("multiplicativity")->cex;
        CHECK(cex.indices == std::vector<std::size_t>{1, 2});
        CHECK(cex.at == "(e,f)");
        // phi[e,f] = h but [phi e, phi f] = 6h
        CHECK(cex.lhs == "(1,0,0)");
        CHECK(cex.rhs == "(6,0,0)");
    }
    SUBCASE("broken hom-jacobi") {
        std::map<std::pair<std::size_t, std::size_t>, Vec> upper;
        upper[{0, 1}] = {Rational(0), Rational(2), Rational(0)};
        upper[{0, 2}] = {Rational(0), Rational(0), Rational(-2)};
        upper[{1, 2}] = {Rational(0), Rational(1), Rational(0)};  // [e,f] := e
        const auto bad = HomLieAlgebra::from_upper(3, {"h", "e", "f"}, upper, Matrix::identity(3));
        const CheckReport r = verify(bad);
        CHECK(r.passed("multiplicativity"));
        CHECK_FALSE(r.passed("hom-jacobi"));
    }
    SUBCASE("singular phi") {
        const auto bad = fixtures::abelian(2, Matrix(2, 2));
        CHECK_FALSE(verify(bad).passed("phi-invertible"));
    }
}

TEST_CASE("morphism checks") {
    const HomLieAlgebra sl2 = fixtures::sl2();
    const HomLieAlgebra heis = fixtures::heisenberg3();
    CHECK(check_morphism(Matrix::identity(3), sl2, sl2).all_pass());
    CHECK(check_morphism(Matrix(3, 3), sl2, heis).all_pass());
    // phi_g is a morphism g -> g for every corpus algebra
    for (const auto& [name, alg] : fixtures::corpus(6)) {
        CAPTURE(name);
        CHECK(check_morphism(alg.phi(), alg, alg).all_pass());
    }
    // a non-morphism fails
    CHECK_FALSE(check_morphism(Matrix::diagonal({Rational(1), Rational(2), Rational(3)}), sl2, sl2)
                    .all_pass());
    CHECK_THROWS_AS(check_morphism(Matrix(2, 2), sl2, sl2), Error);
}

TEST_CASE("center of sl2 is zero; of a direct sum it is the abelian line") {
    CHECK(center(fixtures::sl2()).dim() == 0);
    const HomLieAlgebra sum = fixtures::direct_sum(fixtures::sl2(), fixtures::abelian(1));
    const Subspace c = center(sum);
    CHECK(c.dim() == 1);
    CHECK(c.contains({Rational(0), Rational(0), Rational(0), Rational(1)}));
    // heisenberg center is the z line
    const Subspace hc = center(fixtures::heisenberg3());
    CHECK(hc.dim() == 1);
    CHECK(hc.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("center is contained in the kernel of every ad matrix") {
    for (const auto& [name, alg] : fixtures::corpus(6)) {
        CAPTURE(name);
        const Subspace c = center(alg);
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            // [x, e_i] = -ad_{e_i}(x), so the center sits inside each kernel
            CHECK(nullspace(alg.ad_matrix(i)).contains(c));
        }
    }
}

TEST_CASE("yau twist examples") {
    const HomLieAlgebra sl2 = fixtures::sl2();
    CHECK(yau_twist(sl2, Matrix::identity(3)) == sl2);

    const HomLieAlgebra tw = yau_twist(sl2, fixtures::sl2_diag_automorphism(Rational(2)));
    // psi = diag(1,2,1/2): [h,e]' = 4e, [h,f]' = -f, [e,f]' = h
    CHECK(tw.bracket_basis(0, 1) == Vec{Rational(0), Rational(4), Rational(0)});
    CHECK(tw.bracket_basis(0, 2) == Vec{Rational(0), Rational(0), Rational(-1)});
    CHECK(tw.bracket_basis(1, 2) == Vec{Rational(1), Rational(0), Rational(0)});
    CHECK(verify(tw).all_pass());

    // abelian: any invertible psi
    const Matrix psi = Matrix::of({{1, 1}, {0, 1}});
    const HomLieAlgebra abt = yau_twist(fixtures::abelian(2), psi);
    CHECK(abt.phi() == psi);
    CHECK(verify(abt).all_pass());
}

TEST_CASE("yau twist rejects bad inputs") {
    const HomLieAlgebra sl2 = fixtures::sl2();
    CHECK_THROWS_AS(yau_twist(sl2, Matrix(3, 3)), Error);  // singular
    CHECK_THROWS_AS(yau_twist(sl2, Matrix::diagonal({Rational(1), Rational(2), Rational(3)})),
                    Error);  // not bracket-preserving
    const HomLieAlgebra twisted = yau_twist(sl2, fixtures::sl2_diag_automorphism(Rational(2)));
    CHECK_THROWS_AS(yau_twist(twisted, Matrix::identity(3)), Error);  // phi != identity
}

TEST_CASE("every corpus algebra passes verify") {
    for (const auto& [name, alg] : fixtures::corpus()) {
        CAPTURE(name);
        CHECK(verify(alg).all_pass());
    }
}
