#include "hla/deriv.hpp"

#include "hla/error.hpp"
#include "hla/rep.hpp"

namespace hla {

GlContext::GlContext(Matrix b) : space_dim(b.rows()), beta(std::move(b)) {
    if (beta.rows() != beta.cols()) throw Error("beta must be square");
    beta_inv = inverse(beta);
}

Matrix gl_bracket(const GlContext& ctx, const Matrix& a, const Matrix& b) {
    if (a.rows() != ctx.space_dim || a.cols() != ctx.space_dim || b.rows() != ctx.space_dim ||
        b.cols() != ctx.space_dim)
        throw Error("gl_bracket operands have wrong shape");
    return ctx.beta * a * ctx.beta_inv * b * ctx.beta_inv -
           ctx.beta * b * ctx.beta_inv * a * ctx.beta_inv;
}

Matrix ad_conjugate(const GlContext& ctx, const Matrix& a) {
    if (a.rows() != ctx.space_dim || a.cols() != ctx.space_dim)
        throw Error("ad_conjugate operand has wrong shape");
    return ctx.beta * a * ctx.beta_inv;
}

CheckReport check_gl_homlie(const GlContext& ctx) {
    const std::size_t m = ctx.space_dim;
    if (m > 4) throw Error("check_gl_homlie limited to dimension <= 4");
    // elementary matrices E_{ab}
    std::vector<Matrix> basis;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Matrix e(m, m);
            e(a, b) = 1;
            basis.push_back(std::move(e));
        }
    const std::size_t nb = basis.size();
    auto name = [m](std::size_t i) {
        return "E" + std::to_string(i / m) + std::to_string(i % m);
    };

    CheckReport report;
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < nb && ok; ++i)
            for (std::size_t j = 0; j < nb && ok; ++j) {
                const Matrix lhs = gl_bracket(ctx, basis[i], basis[j]);
                const Matrix rhs = -gl_bracket(ctx, basis[j], basis[i]);
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, "(" + name(i) + "," + name(j) + ")", lhs.str(), rhs.str()};
                }
            }
        ok ? report.add_pass("antisymmetry") : report.add_fail("antisymmetry", cex);
    }
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < nb && ok; ++i)
            for (std::size_t j = 0; j < nb && ok; ++j) {
                const Matrix lhs = ad_conjugate(ctx, gl_bracket(ctx, basis[i], basis[j]));
                const Matrix rhs =
                    gl_bracket(ctx, ad_conjugate(ctx, basis[i]), ad_conjugate(ctx, basis[j]));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, "(" + name(i) + "," + name(j) + ")", lhs.str(), rhs.str()};
                }
            }
        ok ? report.add_pass("multiplicativity") : report.add_fail("multiplicativity", cex);
    }
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < nb && ok; ++i)
            for (std::size_t j = 0; j < nb && ok; ++j)
                for (std::size_t k = 0; k < nb && ok; ++k) {
                    Matrix sum =
                        gl_bracket(ctx, ad_conjugate(ctx, basis[i]), gl_bracket(ctx, basis[j], basis[k]));
                    sum = sum + gl_bracket(ctx, ad_conjugate(ctx, basis[j]),
                                           gl_bracket(ctx, basis[k], basis[i]));
                    sum = sum + gl_bracket(ctx, ad_conjugate(ctx, basis[k]),
                                           gl_bracket(ctx, basis[i], basis[j]));
                    if (!sum.is_zero()) {
                        ok = false;
                        cex = {{i, j, k}, "(" + name(i) + "," + name(j) + "," + name(k) + ")",
                               sum.str(), Matrix(m, m).str()};
                    }
                }
        ok ? report.add_pass("hom-jacobi") : report.add_fail("hom-jacobi", cex);
    }
    return report;
}

Vec map_coords(const Matrix& d) {
    if (d.rows() != d.cols()) throw Error("map_coords expects a square matrix");
    const std::size_t n = d.rows();
    Vec v(n * n);
    for (std::size_t in = 0; in < n; ++in)
        for (std::size_t out = 0; out < n; ++out) v[in * n + out] = d(out, in);
    return v;
}

Matrix map_from_coords(std::size_t n, const Vec& coords) {
    if (coords.size() != n * n) throw Error("map coordinate vector has wrong length");
    Matrix d(n, n);
    for (std::size_t in = 0; in < n; ++in)
        for (std::size_t out = 0; out < n; ++out) d(out, in) = coords[in * n + out];
    return d;
}

namespace {

// Left side minus right side of the derivation identity, evaluated on the
// basis pair (i,j) for a single candidate map.
Vec derivation_defect(const HomLieAlgebra& alg, const Matrix& phi_inv, const Matrix& d,
                      std::size_t i, std::size_t j) {
    const Matrix conj = phi_inv * d * alg.phi();  // Ad_{phi^-1} D
    Vec lhs = d * alg.bracket_basis(i, j);
    Vec rhs = alg.bracket(alg.phi().col(i), conj.col(j));
    rhs = vec_add(rhs, alg.bracket(conj.col(i), alg.phi().col(j)));
    return vec_sub(lhs, rhs);
}

}  // namespace

DerivationSpace derivation_space(const HomLieAlgebra& alg) {
    if (!verify(alg).all_pass()) throw Error("derivation_space requires a verified algebra");
    const std::size_t n = alg.dim();
    const Matrix phi_inv = inverse(alg.phi());

    // one n-row block per pair i<j, n^2 unknowns in map coordinates
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Vec> defects;  // per unknown, the defect vector
            for (std::size_t c = 0; c < n * n; ++c) {
                Vec unit = zero_vec(n * n);
                unit[c] = 1;
                defects.push_back(derivation_defect(alg, phi_inv, map_from_coords(n, unit), i, j));
            }
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(n * n);
                for (std::size_t c = 0; c < n * n; ++c) row[c] = defects[c][k];
                rows.push_back(std::move(row));
            }
        }
    if (rows.empty()) return {alg, Subspace::full(n * n)};
    return {alg, nullspace(Matrix::from_rows(rows))};
}

std::vector<Matrix> derivation_basis(const DerivationSpace& der) {
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < der.space.dim(); ++i)
        basis.push_back(map_from_coords(der.alg.dim(), der.space.basis_vector(i)));
    return basis;
}

Subspace inner_space(const HomLieAlgebra& alg) {
    if (!verify(alg).all_pass()) throw Error("inner_space requires a verified algebra");
    std::vector<Vec> spanning;
    for (std::size_t i = 0; i < alg.dim(); ++i) spanning.push_back(map_coords(alg.ad_matrix(i)));
    return Subspace::span(alg.dim() * alg.dim(), spanning);
}

OuterData outer_data(const HomLieAlgebra& alg) {
    const DerivationSpace der = derivation_space(alg);
    const Subspace inn = inner_space(alg);
    if (!der.space.contains(inn)) throw Error("inner derivations escape Der(g)");

    const Representation ad = adjoint(alg);
    if (!subspace_equal(der.space, cocycle_space(ad, 1)))
        throw Error("Der(g) differs from Z^1(g,ad); implementation bug");
    if (!subspace_equal(inn, coboundary_space(ad, 1)))
        throw Error("Inn(g) differs from B^1(g,ad); implementation bug");

    OuterData out;
    out.dim = der.space.dim() - inn.dim();
    for (const Vec& v : extend_basis(inn, der.space))
        out.representatives.push_back(map_from_coords(alg.dim(), v));
    return out;
}

HomLieAlgebra der_algebra(const HomLieAlgebra& alg) {
    const DerivationSpace der = derivation_space(alg);
    const std::vector<Matrix> basis = derivation_basis(der);
    const std::size_t d = basis.size();
    const GlContext ctx(alg.phi());

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back("D" + std::to_string(i));

    std::vector<Vec> table(d * d, zero_vec(d));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            const Matrix br = gl_bracket(ctx, basis[p], basis[q]);
            const auto coords = der.space.coordinates(map_coords(br));
            if (!coords) throw Error("derivation bracket escapes Der(g); closure failure");
            table[p * d + q] = *coords;
        }

    Matrix twist(d, d);
    for (std::size_t p = 0; p < d; ++p) {
        const auto coords = der.space.coordinates(map_coords(ad_conjugate(ctx, basis[p])));
        if (!coords) throw Error("Ad_phi image escapes Der(g); closure failure");
        for (std::size_t q = 0; q < d; ++q) twist(q, p) = (*coords)[q];
    }

    return HomLieAlgebra::from_tensor(d, labels, std::move(table), std::move(twist));
}

bool commutes_with_twist(const HomLieAlgebra& alg, const Matrix& d) {
    return d * alg.phi() == alg.phi() * d;
}

}  // namespace hla
