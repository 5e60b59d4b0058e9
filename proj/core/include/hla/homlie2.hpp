#pragma once

#include <cstddef>
#include <vector>

#include "hla/homlie.hpp"
#include "hla/rep.hpp"

namespace hla {

/// Two-term data (V1 -d-> V0, l2, l3, phi0, phi1). l2 is stored on the
/// degree pairs the grading allows: a full V0 x V0 table and one V1
/// endomorphism per V0 basis element; l2(m,x) for m in V1 is always
/// -l2(x,m). l3 is an antisymmetric triple map into V1.
struct HomLie2Algebra {
    std::size_t dim1 = 0, dim0 = 0;
    Matrix d;                    // dim0 x dim1
    std::vector<Vec> l2_00;      // [i*dim0+j] -> Vec(dim0)
    std::vector<Matrix> l2_01;   // per V0 index: dim1 x dim1, m -> l2(e_i, m)
    Cochain l3;                  // degree 3, alg_dim = dim0, module = dim1
    Matrix phi0, phi1;

    Vec l2_v0(const Vec& x, const Vec& y) const;       // V0 x V0 -> V0
    Vec l2_mixed(const Vec& x, const Vec& m) const;    // V0 x V1 -> V1
    Vec l3_eval(const Vec& x, const Vec& y, const Vec& z) const;
};

/// A Hom-Lie algebra viewed as a 2-algebra with V1 = 0.
HomLie2Algebra as_2algebra(const HomLieAlgebra& g);

/// One report entry per Definition condition: the two standing equations
/// (phi0 d = d phi1, l3 equivariance) followed by (a)-(f), each evaluated
/// over all basis tuples.
CheckReport check_homlie2(const HomLie2Algebra& v);

/// The strict 2-algebra h -ad-> Der(h): l2 on derivations is the twisted
/// commutator, l2(D,u) = D(u), phi0 = Ad_phi, phi1 = phi. Requires a
/// verified algebra.
HomLie2Algebra build_der2(const HomLieAlgebra& h);

struct TwoAlgMorphism {
    Matrix f0;   // dim0' x dim0
    Matrix f1;   // dim1' x dim1
    Cochain f2;  // degree 2, alg_dim = dim0, module = dim1'

    bool operator==(const TwoAlgMorphism&) const = default;
};

CheckReport check_2alg_morphism(const TwoAlgMorphism& f, const HomLie2Algebra& src,
                                const HomLie2Algebra& dst);

struct HomotopyData {
    Matrix tau;  // dim1' x dim0

    bool operator==(const HomotopyData&) const = default;
};

/// Chain-homotopy conditions for a two-term complex (g0 - f0 = d' tau,
/// g1 - f1 = tau d) plus the two displayed 2-morphism equations.
CheckReport check_homotopy(const HomotopyData& tau, const TwoAlgMorphism& f,
                           const TwoAlgMorphism& g, const HomLie2Algebra& src,
                           const HomLie2Algebra& dst);

}  // namespace hla
