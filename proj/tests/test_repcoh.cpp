#include <doctest.h>

#include "hla/error.hpp"
#include "hla/fixtures.hpp"
#include "hla/rep.hpp"

using namespace hla;

namespace {

// Independent oracle for d on 1-cochains, written directly from the two
// displayed sums: (df)(x1,x2) = rho(x1) f(phi^-1 x2) - rho(x2) f(phi^-1 x1)
//                              - beta f([phi^-2 x1, phi^-2 x2]).
Vec d1_oracle(const Representation& rep, const Matrix& f, std::size_t i, std::size_t j) {
    const Matrix phi_inv = inverse(rep.alg.phi());
    const Matrix phi_inv2 = phi_inv * phi_inv;
    Vec out = rep.rho[i] * (f * phi_inv.col(j));
    out = vec_sub(out, rep.rho[j] * (f * phi_inv.col(i)));
    out = vec_sub(out, rep.beta * (f * rep.alg.bracket(phi_inv2.col(i), phi_inv2.col(j))));
    return out;
}

Cochain cochain_of_map(const Matrix& f) {
    Cochain c(1, f.cols(), f.rows());
    for (std::size_t i = 0; i < f.cols(); ++i) c.set({i}, f.col(i));
    return c;
}

}  // namespace

TEST_CASE("cochain storage: signed access, evaluation, coordinates") {
    Cochain c(2, 3, 2);
    c.set({0, 1}, {Rational(1), Rational(2)});
    CHECK(c.at({1, 0}) == Vec{Rational(-1), Rational(-2)});
    CHECK(c.at({0, 0}) == zero_vec(2));
    CHECK(c.at({0, 2}) == zero_vec(2));

    // multilinear evaluation agrees with the signed table
    const Vec e0 = {Rational(1), Rational(0), Rational(0)};
    const Vec e1 = {Rational(0), Rational(1), Rational(0)};
    CHECK(c.eval({e1, e0}) == Vec{Rational(-1), Rational(-2)});
    CHECK(c.eval({e0, e0}) == zero_vec(2));
    // bilinearity spot check: c(e0+e1, e1) = c(e0,e1)
    CHECK(c.eval({vec_add(e0, e1), e1}) == Vec{Rational(1), Rational(2)});

    const Vec coords = c.coords();
    CHECK(coords.size() == Cochain::space_dim(2, 3, 2));
    CHECK(Cochain::from_coords(2, 3, 2, coords) == c);

    CHECK_THROWS_AS(c.set({1, 0}, zero_vec(2)), Error);
    CHECK_THROWS_AS(c.at({0}), Error);
}

TEST_CASE("degree-0 cochains store a single vector") {
    Cochain c(0, 3, 3);
    c.set({}, {Rational(1), Rational(2), Rational(3)});
    CHECK(c.at({}) == Vec{Rational(1), Rational(2), Rational(3)});
    CHECK(c.eval({}) == Vec{Rational(1), Rational(2), Rational(3)});
    CHECK(c.coords() == Vec{Rational(1), Rational(2), Rational(3)});
}

TEST_CASE("representation checks") {
    const HomLieAlgebra sl2 = fixtures::sl2();

    SUBCASE("zero rho with any invertible beta") {
        Representation rep;
        rep.alg = sl2;
        rep.module_dim = 2;
        rep.rho.assign(3, Matrix(2, 2));
        rep.beta = Matrix::of({{1, 1}, {0, 1}});
        CHECK(check_representation(rep).all_pass());
    }
    SUBCASE("the adjoint representation passes") {
        CHECK(check_representation(adjoint(sl2)).all_pass());
        for (const auto& [name, alg] : fixtures::corpus(6)) {
            CAPTURE(name);
            CHECK(check_representation(adjoint(alg)).all_pass());
        }
    }
    SUBCASE("adjoint matrices with a wrong beta fail the first equality") {
        Representation rep = adjoint(sl2);
        rep.beta = Matrix::diagonal({Rational(1), Rational(2), Rational(3)});
        const CheckReport r = check_representation(rep);
        CHECK_FALSE(r.passed("rho-beta-intertwine"));
    }
}

TEST_CASE("adjoint matrices of the fixtures") {
    const Representation ad = adjoint(fixtures::sl2());
    CHECK(ad.rho[0] == Matrix::diagonal({Rational(0), Rational(2), Rational(-2)}));
    CHECK(ad.beta == Matrix::identity(3));
    const Representation ab = adjoint(fixtures::abelian(2));
    CHECK(ab.rho[0].is_zero());
    CHECK(ab.rho[1].is_zero());
}

TEST_CASE("coboundary on 0-cochains is (dx)(y) = [y,x]") {
    for (const auto& [name, alg] : fixtures::corpus(6)) {
        CAPTURE(name);
        const Representation ad = adjoint(alg);
        for (std::size_t xi = 0; xi < alg.dim(); ++xi) {
            Cochain x(0, alg.dim(), alg.dim());
            Vec xv = zero_vec(alg.dim());
            xv[xi] = 1;
            x.set({}, xv);
            const Cochain dx = coboundary(ad, x);
            for (std::size_t y = 0; y < alg.dim(); ++y)
                CHECK(dx.at({y}) == alg.bracket_basis(y, xi));
        }
    }
}

TEST_CASE("coboundary of the identity 1-cochain on sl2 evaluates to 2e at (h,e)") {
    const Representation ad = adjoint(fixtures::sl2());
    const Cochain d_id = coboundary(ad, cochain_of_map(Matrix::identity(3)));
    CHECK(d_id.at({0, 1}) == Vec{Rational(0), Rational(2), Rational(0)});
}

TEST_CASE("coboundary at degree 1 agrees with the independent oracle") {
    fixtures::RationalStream rs(21);
    for (const auto& [name, alg] : fixtures::corpus(8)) {
        CAPTURE(name);
        const Representation ad = adjoint(alg);
        Matrix f(alg.dim(), alg.dim());
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) f(i, j) = rs.next();
        const Cochain df = coboundary(ad, cochain_of_map(f));
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = i + 1; j < alg.dim(); ++j)
                CHECK(df.at({i, j}) == d1_oracle(ad, f, i, j));
    }
}

TEST_CASE("d squared vanishes in low degrees on the whole corpus") {
    for (const auto& [name, alg] : fixtures::corpus()) {
        CAPTURE(name);
        const Representation ad = adjoint(alg);
        for (std::size_t k = 0; k <= 2; ++k) {
            const Matrix dd = coboundary_matrix(ad, k + 1) * coboundary_matrix(ad, k);
            CHECK(dd.is_zero());
        }
    }
}

TEST_CASE("coboundary output is antisymmetric and linear") {
    const Representation ad = adjoint(fixtures::heisenberg3());
    fixtures::RationalStream rs(22);

    Cochain f(1, 3, 3), g(1, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Vec vf(3), vg(3);
        for (std::size_t k = 0; k < 3; ++k) {
            vf[k] = rs.next();
            vg[k] = rs.next();
        }
        f.set({i}, vf);
        g.set({i}, vg);
    }
    const Rational a = rs.next(true);
    CHECK(coboundary(ad, f.scaled(a) + g) == coboundary(ad, f).scaled(a) + coboundary(ad, g));

    const Cochain df = coboundary(ad, f);
    const Vec e0 = {Rational(1), Rational(0), Rational(0)};
    CHECK(is_zero(df.eval({e0, e0})));
    CHECK(coboundary(ad, Cochain(1, 3, 3)).is_zero());
}

TEST_CASE("cocycle and coboundary spaces on the named examples") {
    // k=0 adjoint: coordinates of the center
    for (const auto& [name, alg] : fixtures::corpus(6)) {
        CAPTURE(name);
        CHECK(subspace_equal(cocycle_space(adjoint(alg), 0), center(alg)));
    }
    // k=1 on abelian(2) with identity twist: everything is a cocycle
    CHECK(cocycle_space(adjoint(fixtures::abelian(2)), 1) == Subspace::full(4));
    CHECK(coboundary_space(adjoint(fixtures::abelian(2)), 1).dim() == 0);
    // sl2: Z^1 and B^1 are both three-dimensional
    CHECK(cocycle_space(adjoint(fixtures::sl2()), 1).dim() == 3);
    CHECK(coboundary_space(adjoint(fixtures::sl2()), 1).dim() == 3);
    CHECK_THROWS_AS(coboundary_space(adjoint(fixtures::sl2()), 0), Error);
}

TEST_CASE("cohomology dimension matches the rank-nullity count") {
    for (const auto& [name, alg] : fixtures::corpus(8)) {
        CAPTURE(name);
        const Representation ad = adjoint(alg);
        for (std::size_t k = 0; k <= 2; ++k) {
            const std::size_t ck = Cochain::space_dim(k, alg.dim(), alg.dim());
            const std::size_t expected =
                ck - rank(coboundary_matrix(ad, k)) -
                (k == 0 ? 0 : rank(coboundary_matrix(ad, k - 1)));
            CHECK(cohomology(ad, k).dim == expected);
        }
    }
}

TEST_CASE("coboundaries are cocycles in degrees 1 and 2") {
    for (const auto& [name, alg] : fixtures::corpus(8)) {
        CAPTURE(name);
        const Representation ad = adjoint(alg);
        for (std::size_t k = 1; k <= 2; ++k)
            CHECK(cocycle_space(ad, k).contains(coboundary_space(ad, k)));
    }
}

TEST_CASE("cohomology dimensions of the named examples") {
    CHECK(cohomology(adjoint(fixtures::sl2()), 0).dim == 0);
    CHECK(cohomology(adjoint(fixtures::sl2()), 1).dim == 0);
    const CohomologyData h1 = cohomology(adjoint(fixtures::abelian(2)), 1);
    CHECK(h1.dim == 4);
    CHECK(h1.representatives.size() == 4);
    // representatives are cocycles
    const Representation ad = adjoint(fixtures::abelian(2));
    for (const auto& rep_cochain : h1.representatives)
        CHECK(coboundary(ad, rep_cochain).is_zero());
}
