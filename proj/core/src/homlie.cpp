#include "hla/homlie.hpp"

#include "hla/error.hpp"

namespace hla {

namespace {

std::vector<std::string> default_labels(std::size_t dim, std::vector<std::string> labels) {
    if (labels.empty()) {
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    }
    if (labels.size() != dim) throw Error("label count does not match dimension");
    return labels;
}

std::string tuple_label(const HomLieAlgebra& alg, std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first) s += ',';
        s += alg.label(i);
        first = false;
    }
    s += ')';
    return s;
}

}  // namespace

HomLieAlgebra HomLieAlgebra::from_upper(
    std::size_t dim, std::vector<std::string> labels,
    const std::map<std::pair<std::size_t, std::size_t>, Vec>& upper, Matrix phi) {
    HomLieAlgebra a;
    a.dim_ = dim;
    a.labels_ = default_labels(dim, std::move(labels));
    a.table_.assign(dim * dim, zero_vec(dim));
    for (const auto& [ij, v] : upper) {
        const auto [i, j] = ij;
        if (i >= j || j >= dim) throw Error("bracket pair indices must satisfy i < j < dim");
        if (v.size() != dim) throw Error("bracket value has wrong length");
        a.table_[i * dim + j] = v;
        a.table_[j * dim + i] = vec_scaled(v, Rational(-1));
    }
    if (phi.rows() != dim || phi.cols() != dim) throw Error("phi has wrong shape");
    a.phi_ = std::move(phi);
    return a;
}

HomLieAlgebra HomLieAlgebra::from_tensor(std::size_t dim, std::vector<std::string> labels,
                                         std::vector<Vec> table, Matrix phi) {
    HomLieAlgebra a;
    a.dim_ = dim;
    a.labels_ = default_labels(dim, std::move(labels));
    if (table.size() != dim * dim) throw Error("tensor table has wrong size");
    for (const auto& v : table)
        if (v.size() != dim) throw Error("tensor entry has wrong length");
    a.table_ = std::move(table);
    if (phi.rows() != dim || phi.cols() != dim) throw Error("phi has wrong shape");
    a.phi_ = std::move(phi);
    return a;
}

Vec HomLieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error("bracket argument has wrong length");
    Vec r = zero_vec(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Rational c = x[i] * y[j];
            const Vec& b = bracket_basis(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                if (b[k] != 0) r[k] += c * b[k];
        }
    }
    return r;
}

Matrix HomLieAlgebra::ad_matrix(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec& b = bracket_basis(i, j);
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = b[k];
    }
    return m;
}

Matrix HomLieAlgebra::ad_matrix(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (x[i] != 0) m = m + ad_matrix(i).scaled(x[i]);
    return m;
}

CheckReport verify(const HomLieAlgebra& alg) {
    CheckReport report;
    const std::size_t n = alg.dim();

    // antisymmetry: [e_i,e_j] + [e_j,e_i] = 0 for all pairs
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i; j < n && ok; ++j) {
                const Vec lhs = alg.bracket_basis(i, j);
                const Vec rhs = vec_scaled(alg.bracket_basis(j, i), Rational(-1));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, tuple_label(alg, {i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("antisymmetry") : report.add_fail("antisymmetry", cex);
    }

    // phi invertible (standing regularity assumption)
    const bool regular = rank(alg.phi()) == n;
    if (regular) {
        report.add_pass("phi-invertible");
    } else {
        report.add_fail("phi-invertible",
                        {{}, "phi", "rank=" + std::to_string(rank(alg.phi())), "rank=" + std::to_string(n)});
    }

    // multiplicativity: phi[e_i,e_j] = [phi e_i, phi e_j]
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const Vec lhs = alg.phi() * alg.bracket_basis(i, j);
                const Vec rhs = alg.bracket(alg.phi().col(i), alg.phi().col(j));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, tuple_label(alg, {i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("multiplicativity") : report.add_fail("multiplicativity", cex);
    }

    // hom-jacobi: [phi(e_i),[e_j,e_k]] + [phi(e_j),[e_k,e_i]] + [phi(e_k),[e_i,e_j]] = 0
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k) {
                    Vec sum = alg.bracket(alg.phi().col(i), alg.bracket_basis(j, k));
                    sum = vec_add(sum, alg.bracket(alg.phi().col(j), alg.bracket_basis(k, i)));
                    sum = vec_add(sum, alg.bracket(alg.phi().col(k), alg.bracket_basis(i, j)));
                    if (!is_zero(sum)) {
                        ok = false;
                        cex = {{i, j, k}, tuple_label(alg, {i, j, k}), vec_str(sum),
                               vec_str(zero_vec(n))};
                    }
                }
        ok ? report.add_pass("hom-jacobi") : report.add_fail("hom-jacobi", cex);
    }

    return report;
}

CheckReport check_morphism(const Matrix& f, const HomLieAlgebra& src, const HomLieAlgebra& dst) {
    if (f.rows() != dst.dim() || f.cols() != src.dim())
        throw Error("morphism matrix must be dst.dim x src.dim");
    CheckReport report;

    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < src.dim() && ok; ++i)
            for (std::size_t j = 0; j < src.dim() && ok; ++j) {
                const Vec lhs = f * src.bracket_basis(i, j);
                const Vec rhs = dst.bracket(f.col(i), f.col(j));
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, tuple_label(src, {i, j}), vec_str(lhs), vec_str(rhs)};
                }
            }
        ok ? report.add_pass("bracket-preserved") : report.add_fail("bracket-preserved", cex);
    }

    {
        const Matrix lhs = f * src.phi();
        const Matrix rhs = dst.phi() * f;
        if (lhs == rhs) {
            report.add_pass("twist-intertwined");
        } else {
            report.add_fail("twist-intertwined", {{}, "f", lhs.str(), rhs.str()});
        }
    }

    return report;
}

Subspace center(const HomLieAlgebra& alg) {
    const std::size_t n = alg.dim();
    // Rows: for each j and output component k, the map x -> [x, e_j]_k.
    Matrix system(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const Vec& b = alg.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) system(j * n + k, i) = b[k];
        }
    return nullspace(system);
}

HomLieAlgebra yau_twist(const HomLieAlgebra& lie, const Matrix& psi) {
    if (!lie.phi().is_identity()) throw Error("yau_twist expects an algebra with identity twist");
    if (!verify(lie).all_pass()) throw Error("yau_twist input is not a Lie algebra");
    const std::size_t n = lie.dim();
    if (psi.rows() != n || psi.cols() != n) throw Error("psi has wrong shape");
    if (rank(psi) != n) throw Error("psi is not invertible");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (psi * lie.bracket_basis(i, j) != lie.bracket(psi.col(i), psi.col(j)))
                throw Error("psi is not an automorphism of the bracket");

    std::vector<Vec> table(n * n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = psi * lie.bracket_basis(i, j);
    return HomLieAlgebra::from_tensor(n, lie.labels(), std::move(table), psi);
}

}  // namespace hla
