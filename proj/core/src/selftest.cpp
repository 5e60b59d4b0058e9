#include "hla/selftest.hpp"

#include <chrono>
#include <functional>

#include "hla/deriv.hpp"
#include "hla/dghla.hpp"
#include "hla/error.hpp"
#include "hla/fixtures.hpp"
#include "hla/homlie2.hpp"
#include "hla/rep.hpp"

namespace hla::selftest {

namespace {

using fixtures::RationalStream;

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

CocyclePair semidirect_sl2_plane() {
    CocyclePair c = zero_cocycle(fixtures::sl2(), fixtures::abelian(2));
    c.rho[0] = Matrix::diagonal({Rational(1), Rational(-1)});  // rho(h)
    c.rho[1](0, 1) = 1;                                        // rho(e)
    c.rho[2](1, 0) = 1;                                        // rho(f)
    return c;
}

CocyclePair central_plane_line(bool twisted) {
    HomLieAlgebra g = twisted ? fixtures::abelian(2, Matrix::diagonal({Rational(2), Rational(3)}))
                              : fixtures::abelian(2);
    HomLieAlgebra h = twisted ? fixtures::abelian(1, Matrix::diagonal({Rational(6)}))
                              : fixtures::abelian(1);
    CocyclePair c = zero_cocycle(g, h);
    c.omega.set({0, 1}, {Rational(1)});
    return c;
}

/// c1 defined from (c2, phitheta) through isom2/isom3; the pair is
/// equivalent by construction.
CocyclePair transport_cocycle(const CocyclePair& c2, const Matrix& phitheta) {
    const std::size_t n = c2.g.dim();
    CocyclePair c1 = c2;
    for (std::size_t i = 0; i < n; ++i)
        c1.rho[i] = c2.rho[i] + c2.h.ad_matrix(phitheta.col(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec w = c2.omega.at({i, j});
            w = vec_add(w, c2.rho[i] * phitheta.col(j));
            w = vec_sub(w, c2.rho[j] * phitheta.col(i));
            w = vec_add(w, c2.h.bracket(phitheta.col(i), phitheta.col(j)));
            w = vec_sub(w, phitheta * c2.g.bracket_basis(i, j));
            c1.omega.set({i, j}, std::move(w));
        }
    return c1;
}

/// A random solution of isom1 (phi_h . X = X . phi_g) drawn from the
/// nullspace of the intertwining system.
Matrix random_intertwiner(const HomLieAlgebra& g, const HomLieAlgebra& h, RationalStream& rs) {
    const std::size_t n = g.dim(), m = h.dim();
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n; ++i) {
            Vec row = zero_vec(m * n);  // X(a,i) at a*n+i
            for (std::size_t b = 0; b < m; ++b) row[b * n + i] += h.phi()(a, b);
            for (std::size_t k = 0; k < n; ++k) row[a * n + k] -= g.phi()(k, i);
            rows.push_back(std::move(row));
        }
    const Subspace sols = nullspace(Matrix::from_rows(rows));
    Vec coords = zero_vec(m * n);
    for (std::size_t b = 0; b < sols.dim(); ++b) {
        const Rational coeff = rs.next();
        if (coeff == 0) continue;
        coords = vec_add(coords, vec_scaled(sols.basis_vector(b), coeff));
    }
    Matrix x(m, n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n; ++i) x(a, i) = coords[a * n + i];
    return x;
}

std::vector<CocyclePair> equivalence_bases() {
    std::vector<CocyclePair> bases;
    bases.push_back(zero_cocycle(fixtures::sl2(), fixtures::heisenberg3()));
    bases.push_back(semidirect_sl2_plane());
    bases.push_back(central_plane_line(false));
    bases.push_back(affine_line());
    bases.push_back(zero_cocycle(yau_twist(fixtures::sl2(),
                                                     fixtures::sl2_diag_automorphism(Rational(2))),
                                 fixtures::abelian(2)));
    bases.push_back(zero_cocycle(
        fixtures::abelian(2),
        yau_twist(fixtures::heisenberg3(),
                            fixtures::heisenberg_diag_automorphism(Rational(2), Rational(1, 3)))));
    return bases;
}

}  // namespace

std::vector<EquivalentPair> equivalent_pairs(std::size_t count, std::uint64_t seed) {
    RationalStream rs(seed);
    const auto bases = equivalence_bases();
    std::vector<EquivalentPair> out;
    std::size_t b = 0;
    while (out.size() < count) {
        const CocyclePair& c2 = bases[b % bases.size()];
        ++b;
        const Matrix phitheta = random_intertwiner(c2.g, c2.h, rs);
        EquivalentPair pair;
        pair.name = "pair" + std::to_string(out.size());
        pair.c2 = c2;
        pair.c1 = transport_cocycle(c2, phitheta);
        pair.w = IsoWitness{phitheta};
        out.push_back(std::move(pair));
    }
    return out;
}

std::vector<CocycleFixture> cocycle_corpus() {
    std::vector<CocycleFixture> out;
    out.push_back({"dsum-sl2-heis", zero_cocycle(fixtures::sl2(), fixtures::heisenberg3())});
    out.push_back({"dsum-ab2-ab1", zero_cocycle(fixtures::abelian(2), fixtures::abelian(1))});
    out.push_back(
        {"dsum-sl2twist-ab2",
         zero_cocycle(yau_twist(fixtures::sl2(), fixtures::sl2_diag_automorphism(Rational(2))),
                      fixtures::abelian(2))});
    out.push_back({"affine-line", affine_line()});
    out.push_back({"semidirect-sl2-plane", semidirect_sl2_plane()});
    out.push_back({"central-plane-line", central_plane_line(false)});
    out.push_back({"central-plane-line-twisted", central_plane_line(true)});
    for (const auto& pair : equivalent_pairs(12)) {
        out.push_back({pair.name + "-c1", pair.c1});
        out.push_back({pair.name + "-c2", pair.c2});
    }
    return out;
}

std::vector<CocycleFixture> cocycle_mutants() {
    std::vector<CocycleFixture> out;

    // p1: omega entry incompatible with the twists
    {
        CocyclePair c = zero_cocycle(
            fixtures::abelian(3, Matrix::diagonal({Rational(2), Rational(3), Rational(5)})),
            fixtures::abelian(1, Matrix::diagonal({Rational(6)})));
        c.omega.set({0, 1}, {Rational(1)});  // compatible: 6 = 2*3
        c.omega.set({0, 2}, {Rational(1)});  // incompatible: 6 != 2*5
        out.push_back({"mutant-p1", c, false, "p1-omega-equivariance"});
    }
    // p2: rho not intertwining phi_h
    {
        CocyclePair c = zero_cocycle(fixtures::abelian(1),
                                     fixtures::abelian(2, Matrix::diagonal({Rational(1), Rational(2)})));
        c.rho[0](0, 1) = 1;
        out.push_back({"mutant-p2", c, false, "p2-rho-equivariance"});
    }
    // p3: rho_x not a derivation of a non-abelian h
    {
        CocyclePair c = zero_cocycle(fixtures::abelian(1), fixtures::heisenberg3());
        c.rho[0](0, 2) = 1;  // z -> x
        out.push_back({"mutant-p3", c, false, "p3-rho-derivation"});
    }
    // p4: commuting representation images with nonzero bracket defect
    {
        CocyclePair c = zero_cocycle(fixtures::abelian(2), fixtures::abelian(2));
        c.rho[0](0, 1) = 1;  // E01
        c.rho[1](1, 0) = 1;  // E10; [E01,E10] != 0 but [e0,e1]_g = 0, h abelian
        out.push_back({"mutant-p4", c, false, "p4-curvature"});
    }
    // p5: omega paired against a nonzero rho on an abelian triple
    {
        CocyclePair c = zero_cocycle(fixtures::abelian(3), fixtures::abelian(1));
        c.rho[0](0, 0) = 1;
        c.omega.set({1, 2}, {Rational(1)});
        out.push_back({"mutant-p5", c, false, "p5-cocycle-identity"});
    }
    return out;
}

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::string modules;
    std::function<bool(std::string&)> run;  // fills detail, returns pass
};

bool entry_fails(const CheckReport& r, const std::string& name) {
    const CheckEntry* e = r.find(name);
    return e != nullptr && !e->pass && e->cex.has_value();
}

bool only_entry_fails(const CheckReport& r, const std::string& name, std::string& detail) {
    for (const auto& e : r.entries()) {
        if (e.name == name && e.pass) {
            detail = "expected " + name + " to fail";
            return false;
        }
        if (e.name != name && !e.pass) {
            detail = "unexpected failure of " + e.name;
            return false;
        }
    }
    return r.find(name) != nullptr;
}

std::vector<Criterion> make_criteria() {
    std::vector<Criterion> cs;

    cs.push_back({"1", "axiom soundness over the corpus plus three mutation classes",
                  "homlie", [](std::string& detail) {
        const auto corpus = fixtures::corpus();
        long worst_us = 0;
        for (const auto& [name, alg] : corpus) {
            const auto t0 = std::chrono::steady_clock::now();
            const CheckReport r = verify(alg);
            const auto t1 = std::chrono::steady_clock::now();
            const long us =
                std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            worst_us = std::max(worst_us, us);
            if (!r.all_pass()) {
                detail = name + " failed verify";
                return false;
            }
        }
        if (worst_us >= 50000) {
            detail = "verify took " + std::to_string(worst_us) + "us (limit 50ms)";
            return false;
        }

        // broken antisymmetry
        {
            HomLieAlgebra sl2 = fixtures::sl2();
            std::vector<Vec> table;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) table.push_back(sl2.bracket_basis(i, j));
            table[1 * 3 + 0] = table[0 * 3 + 1];  // [e,h] := +[h,e]
            const HomLieAlgebra bad =
                HomLieAlgebra::from_tensor(3, sl2.labels(), table, Matrix::identity(3));
            if (!entry_fails(verify(bad), "antisymmetry")) {
                detail = "antisymmetry mutant not caught";
                return false;
            }
        }
        // broken multiplicativity
        {
            std::map<std::pair<std::size_t, std::size_t>, Vec> upper;
            upper[{0, 1}] = {Rational(0), Rational(2), Rational(0)};
            upper[{0, 2}] = {Rational(0), Rational(0), Rational(-2)};
            upper[{1, 2}] = {Rational(1), Rational(0), Rational(0)};
            const HomLieAlgebra bad = HomLieAlgebra::from_upper(
                3, {"h", "e", "f"}, upper,
                Matrix::diagonal({Rational(1), Rational(2), Rational(3)}));
            const CheckReport r = verify(bad);
            if (!entry_fails(r, "multiplicativity")) {
                detail = "multiplicativity mutant not caught";
                return false;
            }
            const auto& cex = *r.find("multiplicativity")->cex;
            if (cex.indices != std::vector<std::size_t>{1, 2}) {
                detail = "multiplicativity counterexample not localized at (e,f)";
                return false;
            }
        }
        // broken hom-jacobi
        {
            std::map<std::pair<std::size_t, std::size_t>, Vec> upper;
            upper[{0, 1}] = {Rational(0), Rational(2), Rational(0)};
            upper[{0, 2}] = {Rational(0), Rational(0), Rational(-2)};
            upper[{1, 2}] = {Rational(0), Rational(1), Rational(0)};  // [e,f] := e
            const HomLieAlgebra bad =
                HomLieAlgebra::from_upper(3, {"h", "e", "f"}, upper, Matrix::identity(3));
            if (!entry_fails(verify(bad), "hom-jacobi")) {
                detail = "hom-jacobi mutant not caught";
                return false;
            }
        }
        detail = std::to_string(corpus.size()) + " algebras, worst verify " +
                 std::to_string(worst_us) + "us";
        return true;
    }});

    cs.push_back({"2", "d^2 = 0 for the adjoint complex in degrees <= 2",
                  "repcoh", [](std::string& detail) {
        for (const auto& [name, alg] : fixtures::corpus()) {
            const Representation ad = adjoint(alg);
            for (std::size_t k = 0; k <= 2; ++k) {
                const Matrix dd = coboundary_matrix(ad, k + 1) * coboundary_matrix(ad, k);
                if (!dd.is_zero()) {
                    detail = name + ": d^2 != 0 at degree " + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    }});

    cs.push_back({"3", "Der = Z^1, Inn = B^1 and H^0 = Cen over the corpus",
                  "repcoh deriv", [](std::string& detail) {
        for (const auto& [name, alg] : fixtures::corpus()) {
            const Representation ad = adjoint(alg);
            if (!subspace_equal(derivation_space(alg).space, cocycle_space(ad, 1))) {
                detail = name + ": Der != Z^1";
                return false;
            }
            if (!subspace_equal(inner_space(alg), coboundary_space(ad, 1))) {
                detail = name + ": Inn != B^1";
                return false;
            }
            if (!subspace_equal(center(alg), cocycle_space(ad, 0))) {
                detail = name + ": Cen != Z^0";
                return false;
            }
            if (cohomology(ad, 0).dim != center(alg).dim()) {
                detail = name + ": dim H^0 != dim Cen";
                return false;
            }
        }
        return true;
    }});

    cs.push_back({"4", "closure of Der under the twisted bracket and the ideal identities",
                  "deriv", [](std::string& detail) {
        for (const auto& [name, alg] : fixtures::corpus()) {
            const DerivationSpace der = derivation_space(alg);
            const auto basis = derivation_basis(der);
            const GlContext ctx(alg.phi());
            for (std::size_t p = 0; p < basis.size(); ++p) {
                if (!der.space.contains(map_coords(ad_conjugate(ctx, basis[p])))) {
                    detail = name + ": Ad_phi D escapes Der";
                    return false;
                }
                for (std::size_t q = 0; q < basis.size(); ++q)
                    if (!der.space.contains(map_coords(gl_bracket(ctx, basis[p], basis[q])))) {
                        detail = name + ": [D,D'] escapes Der";
                        return false;
                    }
            }
            for (std::size_t i = 0; i < alg.dim(); ++i) {
                if (ad_conjugate(ctx, alg.ad_matrix(i)) != alg.ad_matrix(alg.phi().col(i))) {
                    detail = name + ": Ad_phi ad_x != ad_{phi x}";
                    return false;
                }
                for (const auto& d : basis)
                    if (gl_bracket(ctx, d, alg.ad_matrix(i)) != alg.ad_matrix(d.col(i))) {
                        detail = name + ": [D, ad_x] != ad_{D x}";
                        return false;
                    }
            }
        }
        return true;
    }});

    cs.push_back({"5", "DER(h) is a strict Hom-Lie 2-algebra; targeted mutations fail",
                  "homlie2 deriv", [](std::string& detail) {
        for (const auto& [name, alg] : fixtures::corpus()) {
            if (!check_homlie2(build_der2(alg)).all_pass()) {
                detail = "DER(" + name + ") failed check_homlie2";
                return false;
            }
        }

        const HomLieAlgebra sl2 = fixtures::sl2();
        struct Mutation {
            std::string target;
            std::function<void(HomLie2Algebra&)> apply;
            HomLieAlgebra base;
        };
        std::vector<Mutation> mutations;
        mutations.push_back({"a-antisymmetry",
                             [](HomLie2Algebra& v) {
                                 Vec w = v.l2_00[0 * v.dim0 + 1];
                                 w[0] += 1;
                                 v.l2_00[0 * v.dim0 + 1] = w;  // one side only
                             },
                             sl2});
        mutations.push_back({"b-d-l2-compat",
                             [](HomLie2Algebra& v) { v.l2_01[0] = -v.l2_01[0]; }, sl2});
        mutations.push_back({"c-phi-equivariance",
                             [](HomLie2Algebra& v) { v.phi0 = v.phi0.scaled(Rational(2)); }, sl2});
        mutations.push_back({"d-jacobiator",
                             [](HomLie2Algebra& v) {
                                 Vec w = zero_vec(v.dim0);
                                 w[0] = 1;
                                 v.l2_00[1 * v.dim0 + 2] = w;
                                 v.l2_00[2 * v.dim0 + 1] = vec_scaled(w, Rational(-1));
                             },
                             sl2});
        mutations.push_back({"e-l3-dm",
                             [](HomLie2Algebra& v) {
                                 for (auto& m : v.l2_01) m = m.scaled(Rational(2));
                             },
                             sl2});
        mutations.push_back({"f-coherence",
                             [](HomLie2Algebra& v) {
                                 Vec w = zero_vec(v.dim1);
                                 w[1] = 1;
                                 v.l3.set({0, 1, 2}, w);
                             },
                             fixtures::abelian(2)});

        for (const auto& m : mutations) {
            HomLie2Algebra v = build_der2(m.base);
            m.apply(v);
            const CheckReport r = check_homlie2(v);
            if (!entry_fails(r, m.target)) {
                detail = "mutation for " + m.target + " did not fail that condition";
                return false;
            }
        }
        return true;
    }});

    cs.push_back({"6", "extension verifies iff the cocycle identities hold; p-mutants localized",
                  "extensions", [](std::string& detail) {
        for (const auto& fix : cocycle_corpus()) {
            if (!check_cocycle(fix.c).all_pass()) {
                detail = fix.name + ": corpus cocycle unexpectedly invalid";
                return false;
            }
            if (!verify(extension_algebra(fix.c)).all_pass()) {
                detail = fix.name + ": extension of a valid cocycle fails verify";
                return false;
            }
            const BuiltExtension ext = build_extension(fix.c);
            if (extract_cocycle(ext.pres, ext.section, fix.c.g, fix.c.h) != fix.c) {
                detail = fix.name + ": extract(build) round trip broke";
                return false;
            }
        }
        for (const auto& fix : cocycle_mutants()) {
            std::string why;
            if (!only_entry_fails(check_cocycle(fix.c), fix.breaks, why)) {
                detail = fix.name + ": " + why;
                return false;
            }
            if (verify(extension_algebra(fix.c)).all_pass()) {
                detail = fix.name + ": broken cocycle still builds a verified algebra";
                return false;
            }
        }
        return true;
    }});

    cs.push_back({"7", "cocycles give 2-algebra morphisms into DER(h), and back",
                  "extensions homlie2", [](std::string& detail) {
        for (const auto& fix : cocycle_corpus()) {
            const TwoAlgMorphism f = cocycle_to_morphism(fix.c);
            const HomLie2Algebra src = as_2algebra(fix.c.g);
            const HomLie2Algebra dst = build_der2(fix.c.h);
            if (!check_2alg_morphism(f, src, dst).all_pass()) {
                detail = fix.name + ": induced morphism failed";
                return false;
            }
            if (morphism_to_cocycle(f, fix.c.g, fix.c.h) != fix.c) {
                detail = fix.name + ": morphism/cocycle round trip broke";
                return false;
            }
        }
        return true;
    }});

    cs.push_back({"8", "equivalent pairs: witness, homotopy, and morphism round trips",
                  "extensions homlie2", [](std::string& detail) {
        const auto pairs = equivalent_pairs(12);
        for (const auto& pair : pairs) {
            if (!check_iso_witness(pair.w, pair.c1, pair.c2).all_pass()) {
                detail = pair.name + ": witness check failed";
                return false;
            }
            const HomotopyData tau = iso_to_homotopy(pair.w, pair.c1, pair.c2);
            const TwoAlgMorphism f = cocycle_to_morphism(pair.c2);
            const TwoAlgMorphism g = cocycle_to_morphism(pair.c1);
            const HomLie2Algebra src = as_2algebra(pair.c1.g);
            const HomLie2Algebra dst = build_der2(pair.c1.h);
            if (!check_homotopy(tau, f, g, src, dst).all_pass()) {
                detail = pair.name + ": homotopy check failed";
                return false;
            }
            if (homotopy_to_iso(tau, pair.c1, pair.c2) != pair.w) {
                detail = pair.name + ": homotopy/witness round trip broke";
                return false;
            }
            const BuiltExtension e1 = build_extension(pair.c1);
            const BuiltExtension e2 = build_extension(pair.c2);
            const Matrix theta = induced_theta(pair.w, pair.c1.g.dim(), pair.c1.h.dim());
            if (!check_morphism(theta, e2.pres.ghat, e1.pres.ghat).all_pass()) {
                detail = pair.name + ": induced theta is not a morphism";
                return false;
            }
            if (theta * e2.pres.iota != e1.pres.iota || e1.pres.p * theta != e2.pres.p) {
                detail = pair.name + ": theta does not commute with iota/p";
                return false;
            }
        }
        detail = std::to_string(pairs.size()) + " generated pairs";
        return true;
    }});

    cs.push_back({"9", "Maurer-Cartan verdicts agree with the cocycle identities everywhere",
                  "dghla extensions", [](std::string& detail) {
        auto fixtures_all = cocycle_corpus();
        for (auto& m : cocycle_mutants()) fixtures_all.push_back(std::move(m));
        for (const auto& fix : fixtures_all) {
            const DghlaContext ctx = DghlaContext::direct_sum(fix.c.g, fix.c.h);
            const bool mc = mc_check(ctx, pack_cocycle(fix.c)).all_pass();
            const bool cocycle = check_cocycle(fix.c).all_pass();
            if (mc != cocycle) {
                detail = fix.name + ": mc_check disagrees with check_cocycle";
                return false;
            }
            if (unpack_cocycle(pack_cocycle(fix.c), fix.c.g, fix.c.h) != fix.c) {
                detail = fix.name + ": pack/unpack round trip broke";
                return false;
            }
        }
        detail = std::to_string(fixtures_all.size()) + " verdicts compared";
        return true;
    }});

    cs.push_back({"10", "graded bracket, differential and restriction structure",
                  "dghla", [](std::string& detail) {
        const std::vector<std::pair<HomLieAlgebra, HomLieAlgebra>> pairs = {
            {fixtures::sl2(), fixtures::heisenberg3()},
            {yau_twist(fixtures::sl2(), fixtures::sl2_diag_automorphism(Rational(1, 2))),
             fixtures::abelian(2)},
            {fixtures::abelian(1), fixtures::abelian(1)},
        };
        for (const auto& [g, h] : pairs) {
            const CheckReport r = dghla_structure_report(g, h);
            if (!r.all_pass()) {
                for (const auto& e : r.entries())
                    if (!e.pass) detail = "structure check failed: " + e.name;
                return false;
            }
        }
        return true;
    }});

    cs.push_back({"11", "the Jordan-block extension has no diagonal section",
                  "extensions", [](std::string& detail) {
        Matrix jordan = Matrix::identity(2);
        jordan(0, 1) = 1;
        ExtensionPresentation pres;
        pres.ghat = fixtures::abelian(2, jordan);
        pres.iota = Matrix(2, 1);
        pres.iota(0, 0) = 1;  // h = the invariant line
        pres.p = Matrix(1, 2);
        pres.p(0, 1) = 1;  // g = the quotient line
        const HomLieAlgebra g = fixtures::abelian(1);
        const HomLieAlgebra h = fixtures::abelian(1);
        if (!check_presentation(pres, g, h).all_pass()) {
            detail = "Jordan fixture is not a valid presentation";
            return false;
        }
        if (find_diagonal_section(pres, g).has_value()) {
            detail = "a diagonal section was found for the Jordan block";
            return false;
        }
        // a plain (non-diagonal) section does exist
        ExtensionPresentation split = pres;
        split.ghat = fixtures::abelian(2);
        if (!find_diagonal_section(split, g).has_value()) {
            detail = "the split fixture lost its diagonal section";
            return false;
        }
        return true;
    }});

    return cs;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const std::string& filter) {
    std::vector<CriterionResult> results;
    for (const auto& c : make_criteria()) {
        if (!filter.empty() && c.id != filter &&
            c.modules.find(filter) == std::string::npos)
            continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        r.modules = c.modules;
        try {
            r.pass = c.run(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace hla::selftest
