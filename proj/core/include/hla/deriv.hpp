#pragma once

#include <cstddef>
#include <vector>

#include "hla/homlie.hpp"
#include "hla/subspace.hpp"

namespace hla {

/// gl(V) with the twisted bracket [A,B]_beta and the conjugation Ad_beta.
struct GlContext {
    std::size_t space_dim = 0;
    Matrix beta;
    Matrix beta_inv;

    explicit GlContext(Matrix b);  // throws Error when b is singular
};

/// beta A beta^-1 B beta^-1 - beta B beta^-1 A beta^-1.
Matrix gl_bracket(const GlContext& ctx, const Matrix& a, const Matrix& b);

/// beta A beta^-1.
Matrix ad_conjugate(const GlContext& ctx, const Matrix& a);

/// Verifies that (gl(V), [.,.]_beta, Ad_beta) is a regular Hom-Lie algebra
/// over the elementary-matrix basis. Throws Error for space_dim > 4 (the
/// triple check is O(dim^6)).
CheckReport check_gl_homlie(const GlContext& ctx);

/// Coordinates of a linear map g -> g in the n^2-dimensional map space.
/// Index = input * n + output, which is exactly the 1-cochain coordinate
/// (tuple-major, then module index); kept identical so the derivation /
/// cocycle subspace comparisons are structural.
Vec map_coords(const Matrix& d);
Matrix map_from_coords(std::size_t n, const Vec& coords);

struct DerivationSpace {
    HomLieAlgebra alg;
    Subspace space;  // subspace of the n^2 map coordinates
};

/// Solution space of D[x,y] = [phi(x), (Ad_{phi^-1}D)(y)] + [(Ad_{phi^-1}D)(x), phi(y)]
/// over all basis pairs. Requires a verified algebra.
DerivationSpace derivation_space(const HomLieAlgebra& alg);

/// Canonical derivation basis: the rref rows of derivation_space, as maps.
std::vector<Matrix> derivation_basis(const DerivationSpace& der);

/// Span of the ad matrices inside the map space.
Subspace inner_space(const HomLieAlgebra& alg);

struct OuterData {
    std::size_t dim = 0;
    std::vector<Matrix> representatives;  // derivations completing Inn to Der
};

/// dim Der - dim Inn with representatives; also asserts the cohomological
/// identifications Der = Z^1(g,ad) and Inn = B^1(g,ad) in shared
/// coordinates, throwing Error if either equality fails.
OuterData outer_data(const HomLieAlgebra& alg);

/// The Hom-Lie algebra (Der(g), [.,.]_phi, Ad_phi) in the canonical
/// derivation basis. Throws Error if a bracket or conjugate escapes the
/// derivation subspace.
HomLieAlgebra der_algebra(const HomLieAlgebra& alg);

/// True when d . phi = phi . d; reported per basis derivation by the CLI to
/// compare against the restricted derivation notion found elsewhere.
bool commutes_with_twist(const HomLieAlgebra& alg, const Matrix& d);

}  // namespace hla
