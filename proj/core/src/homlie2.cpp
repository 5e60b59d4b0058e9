#include "hla/homlie2.hpp"

#include "hla/deriv.hpp"
#include "hla/error.hpp"

namespace hla {

namespace {

std::string idx_label(std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    s += ')';
    return s;
}

}  // namespace

Vec HomLie2Algebra::l2_v0(const Vec& x, const Vec& y) const {
    if (x.size() != dim0 || y.size() != dim0) throw Error("l2_v0 argument has wrong length");
    Vec r = zero_vec(dim0);
    for (std::size_t i = 0; i < dim0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim0; ++j) {
            if (y[j] == 0) continue;
            const Rational c = x[i] * y[j];
            const Vec& v = l2_00[i * dim0 + j];
            for (std::size_t k = 0; k < dim0; ++k)
                if (v[k] != 0) r[k] += c * v[k];
        }
    }
    return r;
}

Vec HomLie2Algebra::l2_mixed(const Vec& x, const Vec& m) const {
    if (x.size() != dim0 || m.size() != dim1) throw Error("l2_mixed argument has wrong length");
    Vec r = zero_vec(dim1);
    for (std::size_t i = 0; i < dim0; ++i) {
        if (x[i] == 0) continue;
        const Vec t = l2_01[i] * m;
        for (std::size_t k = 0; k < dim1; ++k)
            if (t[k] != 0) r[k] += x[i] * t[k];
    }
    return r;
}

Vec HomLie2Algebra::l3_eval(const Vec& x, const Vec& y, const Vec& z) const {
    return l3.eval({x, y, z});
}

HomLie2Algebra as_2algebra(const HomLieAlgebra& g) {
    HomLie2Algebra v;
    v.dim1 = 0;
    v.dim0 = g.dim();
    v.d = Matrix(g.dim(), 0);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) v.l2_00.push_back(g.bracket_basis(i, j));
    v.l2_01.assign(g.dim(), Matrix(0, 0));
    v.l3 = Cochain(3, g.dim(), 0);
    v.phi0 = g.phi();
    v.phi1 = Matrix(0, 0);
    return v;
}

CheckReport check_homlie2(const HomLie2Algebra& v) {
    if (v.l2_00.size() != v.dim0 * v.dim0) throw Error("l2_00 table has wrong size");
    if (v.l2_01.size() != v.dim0) throw Error("l2_01 table has wrong size");
    CheckReport report;
    const std::size_t n0 = v.dim0, n1 = v.dim1;
    const Matrix id0 = Matrix::identity(n0);
    const Matrix id1 = Matrix::identity(n1);

    // standing: phi0 . d = d . phi1
    {
        const Matrix lhs = v.phi0 * v.d;
        const Matrix rhs = v.d * v.phi1;
        lhs == rhs ? report.add_pass("phi-d-chain")
                   : report.add_fail("phi-d-chain", {{}, "d", lhs.str(), rhs.str()});
    }

    // standing: l3 . phi0^x3 = phi1 . l3
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j)
                for (std::size_t k = 0; k < n0 && ok; ++k) {
                    const Vec lhs = v.l3_eval(v.phi0.col(i), v.phi0.col(j), v.phi0.col(k));
                    const Vec rhs = v.phi1 * v.l3.at({i, j, k});
                    if (lhs != rhs) {
                        ok = false;
                        cex = {{i, j, k}, idx_label({i, j, k}), vec_str(lhs), vec_str(rhs)};
                    }
                }
        ok ? report.add_pass("l3-equivariance") : report.add_fail("l3-equivariance", cex);
    }

    // (a) antisymmetry of the V0 x V0 table (V0 x V1 is antisymmetric by
    // construction, the data holds only the l2(x,m) side)
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = i; j < n0 && ok; ++j) {
                const Vec lhs = v.l2_00[i * n0 + j];
                const Vec rhs = vec_scaled(v.l2_00[j * n0 + i], Rational(-1));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, idx_label({i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("a-antisymmetry") : report.add_fail("a-antisymmetry", cex);
    }

    // (b) d l2(x,m) = l2(x, dm) and l2(dm, n) = l2(m, dn)
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t a = 0; a < n1 && ok; ++a) {
                const Vec lhs = v.d * (v.l2_01[i] * id1.col(a));
                const Vec rhs = v.l2_v0(id0.col(i), v.d.col(a));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, a}, idx_label({i, a}), vec_str(lhs), vec_str(rhs)};
                }
            }
        for (std::size_t a = 0; a < n1 && ok; ++a)
            for (std::size_t b = 0; b < n1 && ok; ++b) {
                const Vec lhs = v.l2_mixed(v.d.col(a), id1.col(b));
                const Vec rhs = vec_scaled(v.l2_mixed(v.d.col(b), id1.col(a)), Rational(-1));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{a, b}, idx_label({a, b}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("b-d-l2-compat") : report.add_fail("b-d-l2-compat", cex);
    }

    // (c) phi0 l2(x,y) = l2(phi0 x, phi0 y) and phi1 l2(x,m) = l2(phi0 x, phi1 m)
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j) {
                const Vec lhs = v.phi0 * v.l2_00[i * n0 + j];
                const Vec rhs = v.l2_v0(v.phi0.col(i), v.phi0.col(j));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, idx_label({i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t a = 0; a < n1 && ok; ++a) {
                const Vec lhs = v.phi1 * (v.l2_01[i] * id1.col(a));
                const Vec rhs = v.l2_mixed(v.phi0.col(i), v.phi1.col(a));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, a}, idx_label({i, a}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("c-phi-equivariance") : report.add_fail("c-phi-equivariance", cex);
    }

    // (d) d l3(x,y,z) = l2(phi0 x, l2(y,z)) + cyclic
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j)
                for (std::size_t k = 0; k < n0 && ok; ++k) {
                    const Vec lhs = v.d * v.l3.at({i, j, k});
                    Vec rhs = v.l2_v0(v.phi0.col(i), v.l2_00[j * n0 + k]);
                    rhs = vec_add(rhs, v.l2_v0(v.phi0.col(j), v.l2_00[k * n0 + i]));
                    rhs = vec_add(rhs, v.l2_v0(v.phi0.col(k), v.l2_00[i * n0 + j]));
                    if (lhs != rhs) {
                        ok = false;
                        cex = {{i, j, k}, idx_label({i, j, k}), vec_str(lhs), vec_str(rhs)};
                    }
                }
        ok ? report.add_pass("d-jacobiator") : report.add_fail("d-jacobiator", cex);
    }

    // (e) l3(x,y,dm) = l2(phi0 x, l2(y,m)) + l2(phi0 y, l2(m,x)) + l2(phi1 m, l2(x,y))
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j)
                for (std::size_t a = 0; a < n1 && ok; ++a) {
                    const Vec lhs = v.l3_eval(id0.col(i), id0.col(j), v.d.col(a));
                    Vec rhs = v.l2_mixed(v.phi0.col(i), v.l2_mixed(id0.col(j), id1.col(a)));
                    rhs = vec_sub(rhs, v.l2_mixed(v.phi0.col(j), v.l2_mixed(id0.col(i), id1.col(a))));
                    rhs = vec_sub(rhs, v.l2_mixed(v.l2_00[i * n0 + j], v.phi1.col(a)));
                    if (lhs != rhs) {
                        ok = false;
                        cex = {{i, j, a}, idx_label({i, j, a}), vec_str(lhs), vec_str(rhs)};
                    }
                }
        ok ? report.add_pass("e-l3-dm") : report.add_fail("e-l3-dm", cex);
    }

    // (f) coherence law over quadruples
    {
        bool ok = true;
        Counterexample cex;
        const Matrix phi0_sq = v.phi0 * v.phi0;
        for (std::size_t w = 0; w < n0 && ok; ++w)
            for (std::size_t x = 0; x < n0 && ok; ++x)
                for (std::size_t y = 0; y < n0 && ok; ++y)
                    for (std::size_t z = 0; z < n0 && ok; ++z) {
                        const Vec pw = v.phi0.col(w), px = v.phi0.col(x), py = v.phi0.col(y),
                                  pz = v.phi0.col(z);
                        Vec lhs = v.l3_eval(v.l2_00[w * n0 + x], py, pz);
                        lhs = vec_sub(lhs, v.l2_mixed(phi0_sq.col(y), v.l3.at({w, x, z})));
                        lhs = vec_add(lhs, v.l3_eval(pw, v.l2_00[x * n0 + z], py));
                        lhs = vec_add(lhs, v.l3_eval(v.l2_00[w * n0 + z], px, py));
                        Vec rhs = vec_scaled(v.l2_mixed(phi0_sq.col(z), v.l3.at({w, x, y})),
                                             Rational(-1));
                        rhs = vec_add(rhs, v.l3_eval(v.l2_00[w * n0 + y], px, pz));
                        rhs = vec_add(rhs, v.l3_eval(pw, v.l2_00[x * n0 + y], pz));
                        rhs = vec_add(rhs, v.l2_mixed(phi0_sq.col(w), v.l3.at({x, y, z})));
                        rhs = vec_sub(rhs, v.l2_mixed(phi0_sq.col(x), v.l3.at({w, y, z})));
                        rhs = vec_add(rhs, v.l3_eval(pw, v.l2_00[y * n0 + z], px));
                        if (lhs != rhs) {
                            ok = false;
                            cex = {{w, x, y, z}, idx_label({w, x, y, z}), vec_str(lhs),
                                   vec_str(rhs)};
                        }
                    }
        ok ? report.add_pass("f-coherence") : report.add_fail("f-coherence", cex);
    }

    return report;
}

HomLie2Algebra build_der2(const HomLieAlgebra& h) {
    const DerivationSpace der = derivation_space(h);
    const std::vector<Matrix> basis = derivation_basis(der);
    const std::size_t d0 = basis.size();
    const std::size_t m = h.dim();
    const GlContext ctx(h.phi());

    HomLie2Algebra v;
    v.dim1 = m;
    v.dim0 = d0;

    // d = ad in derivation coordinates
    v.d = Matrix(d0, m);
    for (std::size_t a = 0; a < m; ++a) {
        const auto coords = der.space.coordinates(map_coords(h.ad_matrix(a)));
        if (!coords) throw Error("ad matrix escapes Der(h)");
        for (std::size_t p = 0; p < d0; ++p) v.d(p, a) = (*coords)[p];
    }

    v.l2_00.assign(d0 * d0, zero_vec(d0));
    for (std::size_t p = 0; p < d0; ++p)
        for (std::size_t q = 0; q < d0; ++q) {
            const auto coords =
                der.space.coordinates(map_coords(gl_bracket(ctx, basis[p], basis[q])));
            if (!coords) throw Error("derivation bracket escapes Der(h)");
            v.l2_00[p * d0 + q] = *coords;
        }

    v.l2_01 = basis;  // l2(D, u) = D(u)
    v.l3 = Cochain(3, d0, m);

    v.phi0 = Matrix(d0, d0);
    for (std::size_t p = 0; p < d0; ++p) {
        const auto coords = der.space.coordinates(map_coords(ad_conjugate(ctx, basis[p])));
        if (!coords) throw Error("Ad_phi image escapes Der(h)");
        for (std::size_t q = 0; q < d0; ++q) v.phi0(q, p) = (*coords)[q];
    }
    v.phi1 = h.phi();
    return v;
}

CheckReport check_2alg_morphism(const TwoAlgMorphism& f, const HomLie2Algebra& src,
                                const HomLie2Algebra& dst) {
    if (f.f0.rows() != dst.dim0 || f.f0.cols() != src.dim0)
        throw Error("f0 must be dst.dim0 x src.dim0");
    if (f.f1.rows() != dst.dim1 || f.f1.cols() != src.dim1)
        throw Error("f1 must be dst.dim1 x src.dim1");
    if (f.f2.degree() != 2 || f.f2.alg_dim() != src.dim0 || f.f2.module_dim() != dst.dim1)
        throw Error("f2 must map src V0 pairs into dst V1");

    CheckReport report;
    const std::size_t n0 = src.dim0, n1 = src.dim1;
    const Matrix id0 = Matrix::identity(n0);
    const Matrix id1 = Matrix::identity(n1);

    {
        const Matrix lhs = f.f0 * src.d;
        const Matrix rhs = dst.d * f.f1;
        lhs == rhs ? report.add_pass("chain-map")
                   : report.add_fail("chain-map", {{}, "d", lhs.str(), rhs.str()});
    }
    {
        const Matrix lhs = f.f0 * src.phi0;
        const Matrix rhs = dst.phi0 * f.f0;
        lhs == rhs ? report.add_pass("f0-phi0")
                   : report.add_fail("f0-phi0", {{}, "phi0", lhs.str(), rhs.str()});
    }
    {
        const Matrix lhs = f.f1 * src.phi1;
        const Matrix rhs = dst.phi1 * f.f1;
        lhs == rhs ? report.add_pass("f1-phi1")
                   : report.add_fail("f1-phi1", {{}, "phi1", lhs.str(), rhs.str()});
    }
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j) {
                const Vec lhs = f.f2.eval({src.phi0.col(i), src.phi0.col(j)});
                const Vec rhs = dst.phi1 * f.f2.at({i, j});
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, idx_label({i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("f2-equivariance") : report.add_fail("f2-equivariance", cex);
    }
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j) {
                const Vec lhs = dst.d * f.f2.at({i, j});
                const Vec rhs = vec_sub(f.f0 * src.l2_00[i * n0 + j],
                                        dst.l2_v0(f.f0.col(i), f.f0.col(j)));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, idx_label({i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("d-f2-defect") : report.add_fail("d-f2-defect", cex);
    }
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t a = 0; a < n1 && ok; ++a) {
                const Vec lhs = f.f2.eval({id0.col(i), src.d.col(a)});
                const Vec rhs = vec_sub(f.f1 * src.l2_mixed(id0.col(i), id1.col(a)),
                                        dst.l2_mixed(f.f0.col(i), f.f1.col(a)));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, a}, idx_label({i, a}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("f2-dm-defect") : report.add_fail("f2-dm-defect", cex);
    }
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j)
                for (std::size_t k = 0; k < n0 && ok; ++k) {
                    Vec lhs = dst.l2_mixed(f.f0 * src.phi0.col(i), f.f2.at({j, k}));
                    lhs = vec_add(lhs, dst.l2_mixed(f.f0 * src.phi0.col(j), f.f2.at({k, i})));
                    lhs = vec_add(lhs, dst.l2_mixed(f.f0 * src.phi0.col(k), f.f2.at({i, j})));
                    lhs = vec_add(lhs, dst.l3_eval(f.f0.col(i), f.f0.col(j), f.f0.col(k)));
                    Vec rhs = f.f2.eval({src.l2_00[i * n0 + j], src.phi0.col(k)});
                    rhs = vec_add(rhs, f.f2.eval({src.l2_00[j * n0 + k], src.phi0.col(i)}));
                    rhs = vec_add(rhs, f.f2.eval({src.l2_00[k * n0 + i], src.phi0.col(j)}));
                    rhs = vec_add(rhs, f.f1 * src.l3.at({i, j, k}));
                    if (lhs != rhs) {
                        ok = false;
                        cex = {{i, j, k}, idx_label({i, j, k}), vec_str(lhs), vec_str(rhs)};
                    }
                }
        ok ? report.add_pass("l3-coherence") : report.add_fail("l3-coherence", cex);
    }

    return report;
}

CheckReport check_homotopy(const HomotopyData& tau, const TwoAlgMorphism& f,
                           const TwoAlgMorphism& g, const HomLie2Algebra& src,
                           const HomLie2Algebra& dst) {
    if (tau.tau.rows() != dst.dim1 || tau.tau.cols() != src.dim0)
        throw Error("tau must be dst.dim1 x src.dim0");
    CheckReport report;
    const std::size_t n0 = src.dim0;

    {
        const Matrix lhs = dst.phi1 * tau.tau;
        const Matrix rhs = tau.tau * src.phi0;
        lhs == rhs ? report.add_pass("tau-equivariance")
                   : report.add_fail("tau-equivariance", {{}, "tau", lhs.str(), rhs.str()});
    }
    {
        const Matrix lhs = g.f0 - f.f0;
        const Matrix rhs = dst.d * tau.tau;
        lhs == rhs ? report.add_pass("chain-homotopy-v0")
                   : report.add_fail("chain-homotopy-v0", {{}, "g0-f0", lhs.str(), rhs.str()});
    }
    {
        const Matrix lhs = g.f1 - f.f1;
        const Matrix rhs = tau.tau * src.d;
        lhs == rhs ? report.add_pass("chain-homotopy-v1")
                   : report.add_fail("chain-homotopy-v1", {{}, "g1-f1", lhs.str(), rhs.str()});
    }
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n0 && ok; ++i)
            for (std::size_t j = 0; j < n0 && ok; ++j) {
                const Vec lhs = vec_sub(f.f2.at({i, j}), g.f2.at({i, j}));
                // l2'(tau x, f0 y) = -l2'(f0 y, tau x)
                Vec rhs = vec_scaled(dst.l2_mixed(f.f0.col(j), tau.tau.col(i)), Rational(-1));
                rhs = vec_add(rhs, dst.l2_mixed(g.f0.col(i), tau.tau.col(j)));
                rhs = vec_sub(rhs, tau.tau * src.l2_00[i * n0 + j]);
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, idx_label({i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("f2-g2-defect") : report.add_fail("f2-g2-defect", cex);
    }

    return report;
}

}  // namespace hla
