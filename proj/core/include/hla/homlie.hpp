#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hla/matrix.hpp"
#include "hla/report.hpp"
#include "hla/subspace.hpp"

namespace hla {

/// A finite-dimensional algebra (g, [.,.], phi) given by structure constants
/// c[i][j][k] (coefficient of e_k in [e_i, e_j]) and a twist matrix phi.
/// Construction does not validate; verify() is the gate that checks
/// antisymmetry, invertibility of phi, multiplicativity and the Hom-Jacobi
/// identity.
class HomLieAlgebra {
public:
    HomLieAlgebra() = default;

    /// Builds from the entries with i < j; [e_j,e_i] = -[e_i,e_j] and
    /// [e_i,e_i] = 0 are derived, so antisymmetry holds by construction.
    static HomLieAlgebra from_upper(std::size_t dim, std::vector<std::string> labels,
                                    const std::map<std::pair<std::size_t, std::size_t>, Vec>& upper,
                                    Matrix phi);

    /// Raw constructor taking the full tensor table[i*dim+j] = [e_i,e_j];
    /// nothing is derived or checked. Used to represent broken inputs.
    static HomLieAlgebra from_tensor(std::size_t dim, std::vector<std::string> labels,
                                     std::vector<Vec> table, Matrix phi);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Matrix& phi() const { return phi_; }

    const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vec bracket(const Vec& x, const Vec& y) const;

    /// Matrix of ad_{e_i} : y -> [e_i, y].
    Matrix ad_matrix(std::size_t i) const;
    Matrix ad_matrix(const Vec& x) const;

    bool operator==(const HomLieAlgebra&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Vec> table_;  // table_[i*dim+j] = [e_i, e_j] as an n-vector
    Matrix phi_;
};

/// Checks, in order: antisymmetry, phi-invertible, multiplicativity,
/// hom-jacobi. Failures are report entries with the first counterexample,
/// never exceptions.
CheckReport verify(const HomLieAlgebra& alg);

/// f must be dst.dim x src.dim. Checks f[x,y] = [fx,fy] on basis pairs and
/// f.phi_src = phi_dst.f.
CheckReport check_morphism(const Matrix& f, const HomLieAlgebra& src, const HomLieAlgebra& dst);

/// { x : [x, e_j] = 0 for all j }, computed as one stacked nullspace.
Subspace center(const HomLieAlgebra& alg);

/// Twists a Lie algebra (phi = identity) by an automorphism psi into the
/// algebra with bracket psi([.,.]) and twist psi. Throws Error when lie does
/// not verify with identity twist, or psi is singular or not
/// bracket-preserving.
HomLieAlgebra yau_twist(const HomLieAlgebra& lie, const Matrix& psi);

}  // namespace hla
