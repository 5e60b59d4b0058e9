#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hla/matrix.hpp"

namespace hla {

/// Linear subspace of Q^n, stored as a canonical basis: the reduced
/// row-echelon form of any spanning set, zero rows dropped. Two subspaces
/// are equal iff their basis matrices are identical.
class Subspace {
public:
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace span(const Matrix& rows_as_vectors);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the canonical basis, or nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    bool operator==(const Subspace&) const = default;

private:
    Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_ = 0;
    Matrix basis_;  // dim() x ambient_, canonical rref, full row rank
};

/// Structural equality of canonical bases. Throws Error when the ambient
/// dimensions differ.
bool subspace_equal(const Subspace& s1, const Subspace& s2);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Kernel of m as a subspace of Q^cols; dim = cols - rank(m).
Subspace nullspace(const Matrix& m);

/// Column space of m as a subspace of Q^rows.
Subspace column_space(const Matrix& m);

/// Basis vectors of `outer` completing `inner` to `outer`, chosen
/// deterministically from outer's canonical basis. Throws Error unless
/// inner is contained in outer.
std::vector<Vec> extend_basis(const Subspace& inner, const Subspace& outer);

}  // namespace hla
