#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "hla/extensions.hpp"
#include "hla/homlie.hpp"
#include "hla/rep.hpp"

namespace hla {

/// Graded cochains C^k(a, a) reuse the antisymmetric Cochain storage with
/// module = ambient space; arity k means DGHLA degree k-1.
using GradedCochain = Cochain;

/// Ambient algebra with its bracket packaged as the arity-2 cochain mu.
/// For the extension complex the ambient is the direct sum g + h with the
/// componentwise bracket, and the block split is recorded.
struct DghlaContext {
    HomLieAlgebra ambient;
    GradedCochain mu;
    Matrix phi_inv;
    std::optional<std::pair<std::size_t, std::size_t>> split;  // (dim g, dim h)

    static DghlaContext single(const HomLieAlgebra& alg);
    static DghlaContext direct_sum(const HomLieAlgebra& g, const HomLieAlgebra& h);
};

GradedCochain cochain_from_matrix(const Matrix& a);  // arity 1
Matrix matrix_from_cochain(const GradedCochain& p);

/// The circle product: sum over (q+1,p)-unshuffles of
/// sign(sigma) . phi P(phi^-1 Q(phi^-1 x_...), phi^-1 x_...).
GradedCochain circle(const DghlaContext& ctx, const GradedCochain& p, const GradedCochain& q);

/// [P,Q]_phi = P.Q - (-1)^{pq} Q.P with p,q the DGHLA degrees (arity - 1).
GradedCochain graded_bracket(const DghlaContext& ctx, const GradedCochain& p,
                             const GradedCochain& q);

/// (Ad_phi P)(x_1..x_k) = phi(P(phi^-1 x_1, ..., phi^-1 x_k)).
GradedCochain ad_phi_cochain(const DghlaContext& ctx, const GradedCochain& p);

/// dP = (-1)^{k+1} [mu, P]_phi for P of arity k.
GradedCochain differential(const DghlaContext& ctx, const GradedCochain& p);

/// Membership in C_>: values land in the h block and vanish whenever every
/// argument lies in the h block. Requires a direct-sum context.
bool is_restricted(const DghlaContext& ctx, const GradedCochain& p);

/// Projection onto C_>: target projected to the h block, the component
/// supported entirely on the h block dropped.
GradedCochain restrict_gt(const DghlaContext& ctx, const GradedCochain& p);

/// alpha(x+u, y+v) = omega(x,y) + rho_x(v) - rho_y(u), an arity-2 element
/// of C_> over g + h. Packing does not require a valid cocycle.
GradedCochain pack_cocycle(const CocyclePair& c);

/// Reads (rho, omega) back off a packed cochain.
CocyclePair unpack_cocycle(const GradedCochain& alpha, const HomLieAlgebra& g,
                           const HomLieAlgebra& h);

/// Maurer-Cartan report: flatness dA + 1/2 [A,A]_phi = 0 and invariance
/// Ad_phi A = A. Throws Error when alpha is not restricted or the context
/// has no block split.
CheckReport mc_check(const DghlaContext& ctx, const GradedCochain& alpha);

/// Structure suite over one algebra pair: graded antisymmetry, d^2 = 0,
/// flatness of mu, closure of the restriction, and the arity-1 bracket
/// matching the twisted gl bracket. Deterministic sampled cochains.
CheckReport dghla_structure_report(const HomLieAlgebra& g, const HomLieAlgebra& h);

}  // namespace hla
