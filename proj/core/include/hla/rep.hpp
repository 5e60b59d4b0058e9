#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hla/homlie.hpp"
#include "hla/tuples.hpp"

namespace hla {

/// A representation (rho, V, beta) of a Hom-Lie algebra: one module matrix
/// per basis element plus the invertible intertwiner beta. Construction does
/// not validate; check_representation() is the gate.
struct Representation {
    HomLieAlgebra alg;
    std::size_t module_dim = 0;
    std::vector<Matrix> rho;  // alg.dim() matrices, module_dim x module_dim
    Matrix beta;

    /// Linear extension rho(x) = sum_i x_i rho[i].
    Matrix rho_of(const Vec& x) const;
};

CheckReport check_representation(const Representation& rep);

/// rho[i] = ad_{e_i}, beta = phi. Requires a verified algebra.
Representation adjoint(const HomLieAlgebra& alg);

/// Antisymmetric k-cochain with values in a module: a table from strictly
/// increasing index tuples to module vectors. Access through a permuted
/// tuple picks up the permutation sign; repeated indices give zero.
/// Degree 0 stores a single vector under the empty tuple.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t degree, std::size_t alg_dim, std::size_t module_dim)
        : degree_(degree), alg_dim_(alg_dim), module_dim_(module_dim) {}

    std::size_t degree() const { return degree_; }
    std::size_t alg_dim() const { return alg_dim_; }
    std::size_t module_dim() const { return module_dim_; }

    /// Stores a value; the tuple must be strictly increasing. Zero values
    /// erase the entry so that equal cochains compare equal structurally.
    void set(const Tuple& tuple, Vec value);

    /// Signed access for an arbitrary tuple.
    Vec at(const Tuple& tuple) const;

    /// Multilinear antisymmetric evaluation on arbitrary vectors.
    Vec eval(const std::vector<Vec>& args) const;

    bool is_zero() const;
    bool operator==(const Cochain&) const = default;

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Rational& c) const;

    /// Coordinates in the elementary-cochain basis ordered by
    /// (increasing tuple, module index), tuples lexicographic.
    static std::size_t space_dim(std::size_t degree, std::size_t alg_dim, std::size_t module_dim);
    Vec coords() const;
    static Cochain from_coords(std::size_t degree, std::size_t alg_dim, std::size_t module_dim,
                               const Vec& coords);

    const std::map<Tuple, Vec>& values() const { return values_; }

private:
    std::size_t degree_ = 0, alg_dim_ = 0, module_dim_ = 0;
    std::map<Tuple, Vec> values_;
};

/// The twisted coboundary operator: both displayed sums, with the phi^-1 /
/// phi^-2 insertions and the beta factor on the bracket term. Requires an
/// invertible phi.
Cochain coboundary(const Representation& rep, const Cochain& f);

/// Matrix of d restricted to degree k in the elementary-cochain coordinates.
Matrix coboundary_matrix(const Representation& rep, std::size_t degree);

/// Kernel of d at degree k.
Subspace cocycle_space(const Representation& rep, std::size_t k);

/// Image of d from degree k-1. Throws Error for k = 0.
Subspace coboundary_space(const Representation& rep, std::size_t k);

struct CohomologyData {
    std::size_t dim = 0;
    std::vector<Cochain> representatives;  // cocycles completing B^k to Z^k
};

/// dim H^k = dim Z^k - dim B^k, with B^0 = 0. Asserts B^k inside Z^k and
/// throws Error if that inclusion ever fails.
CohomologyData cohomology(const Representation& rep, std::size_t k);

}  // namespace hla
