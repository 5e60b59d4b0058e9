#include "hla/subspace.hpp"

#include "hla/error.hpp"

namespace hla {

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw Error("spanning vector has wrong length");
    if (vectors.empty()) return Subspace(ambient_dim, Matrix(0, ambient_dim));
    Matrix r = rref(Matrix::from_rows(vectors));
    std::vector<Vec> kept;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Vec row = r.row(i);
        if (!is_zero(row)) kept.push_back(std::move(row));
    }
    if (kept.empty()) return Subspace(ambient_dim, Matrix(0, ambient_dim));
    return Subspace(ambient_dim, Matrix::from_rows(kept));
}

Subspace Subspace::span(const Matrix& rows_as_vectors) {
    std::vector<Vec> rows;
    rows.reserve(rows_as_vectors.rows());
    for (std::size_t i = 0; i < rows_as_vectors.rows(); ++i) rows.push_back(rows_as_vectors.row(i));
    return span(rows_as_vectors.cols(), rows);
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw Error("vector length does not match ambient dimension");
    // Reduce v against the rref basis; membership iff the residual is zero.
    Vec r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && basis_(i, pivot) == 0) ++pivot;
        if (pivot == ambient_) continue;
        const Rational f = r[pivot];
        if (f == 0) continue;
        for (std::size_t j = pivot; j < ambient_; ++j) r[j] -= f * basis_(i, j);
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error("ambient dimension mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw Error("vector length does not match ambient dimension");
    // Pivot columns of the rref basis read the coordinates off directly.
    Vec coeffs(basis_.rows(), Rational(0));
    Vec residual = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && basis_(i, pivot) == 0) ++pivot;
        if (pivot == ambient_) continue;
        coeffs[i] = residual[pivot];
        if (coeffs[i] == 0) continue;
        for (std::size_t j = pivot; j < ambient_; ++j) residual[j] -= coeffs[i] * basis_(i, j);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeffs;
}

bool subspace_equal(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) throw Error("ambient dimension mismatch");
    return s1 == s2;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error("ambient dimension mismatch");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return Subspace::span(a.ambient_dim(), rows);
}

Subspace nullspace(const Matrix& m) {
    const std::size_t n = m.cols();
    Matrix r = rref(m);
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (c < n && r(i, c) == 0) ++c;
        if (c < n) {
            pivot_cols.push_back(c);
            is_pivot[c] = true;
        }
    }
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace column_space(const Matrix& m) { return Subspace::span(m.transposed()); }

std::vector<Vec> extend_basis(const Subspace& inner, const Subspace& outer) {
    if (!outer.contains(inner)) throw Error("extend_basis: inner subspace not contained in outer");
    std::vector<Vec> reps;
    Subspace current = inner;
    for (std::size_t i = 0; i < outer.dim(); ++i) {
        Vec v = outer.basis_vector(i);
        if (current.contains(v)) continue;
        reps.push_back(v);
        std::vector<Vec> rows;
        for (std::size_t j = 0; j < current.dim(); ++j) rows.push_back(current.basis_vector(j));
        rows.push_back(v);
        current = Subspace::span(outer.ambient_dim(), rows);
    }
    return reps;
}

}  // namespace hla
