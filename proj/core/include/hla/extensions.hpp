#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hla/homlie.hpp"
#include "hla/homlie2.hpp"
#include "hla/rep.hpp"

namespace hla {

/// Non-abelian cocycle data (rho, omega) for an extension of g by h.
/// Construction does not validate; check_cocycle is the gate.
struct CocyclePair {
    HomLieAlgebra g;
    HomLieAlgebra h;
    std::vector<Matrix> rho;  // g.dim() matrices of size h.dim() x h.dim()
    Cochain omega;            // degree 2, alg_dim = g.dim(), module = h.dim()

    Matrix rho_of(const Vec& x) const;

    bool operator==(const CocyclePair&) const = default;
};

/// A short exact sequence h -iota-> ghat -p-> g presented by matrices.
struct ExtensionPresentation {
    HomLieAlgebra ghat;
    Matrix iota;  // (n+m) x m
    Matrix p;     // n x (n+m)
};

struct SectionData {
    Matrix s;  // (n+m) x n, with p.s = identity

    bool operator==(const SectionData&) const = default;
};

struct IsoWitness {
    Matrix phitheta;  // m x n, the h-component correction of theta

    bool operator==(const IsoWitness&) const = default;
};

/// The five cocycle identities, one report entry each (p1..p5), evaluated
/// over all basis tuples.
CheckReport check_cocycle(const CocyclePair& c);

/// The algebra on g + h with the transferred bracket and block twist;
/// no validation. Useful for testing invalid data too.
HomLieAlgebra extension_algebra(const CocyclePair& c);

struct BuiltExtension {
    ExtensionPresentation pres;
    SectionData section;  // the canonical first-block section, diagonal
};

/// Validates the cocycle (throws Error when check_cocycle fails), then
/// assembles the extension with the canonical embedding/projection/section.
BuiltExtension build_extension(const CocyclePair& c);

/// Structural invariants of a presentation: p.iota = 0, iota injective,
/// p surjective, iota and p are morphisms, image(iota) an ideal.
CheckReport check_presentation(const ExtensionPresentation& e, const HomLieAlgebra& g,
                               const HomLieAlgebra& h);

/// Solves p.s = id and phi_ghat.s = s.phi_g exactly; nullopt means the
/// extension is not diagonal.
std::optional<SectionData> find_diagonal_section(const ExtensionPresentation& e,
                                                 const HomLieAlgebra& g);

/// Reads (rho, omega) off a diagonal section. Throws Error when s is not a
/// diagonal section or when a bracket value escapes image(iota).
CocyclePair extract_cocycle(const ExtensionPresentation& e, const SectionData& s,
                            const HomLieAlgebra& g, const HomLieAlgebra& h);

/// f0 = derivation coordinates of rho, f1 = 0, f2 = -omega; a morphism from
/// g (as a 2-algebra) into build_der2(h). Throws Error when the cocycle is
/// invalid or some rho is not a derivation of h.
TwoAlgMorphism cocycle_to_morphism(const CocyclePair& c);

/// Inverse translation. Runs check_2alg_morphism first and throws Error on
/// failure.
CocyclePair morphism_to_cocycle(const TwoAlgMorphism& f, const HomLieAlgebra& g,
                                const HomLieAlgebra& h);

/// The three equivalence identities isom1..isom3 for two cocycles over the
/// same (g,h); when they all hold, additionally checks that
/// theta(x+u) = x - phitheta(x) + u is a morphism from extension 2 to
/// extension 1 (entry "induced-morphism").
CheckReport check_iso_witness(const IsoWitness& w, const CocyclePair& c1, const CocyclePair& c2);

/// theta as a matrix in the block basis of g + h.
Matrix induced_theta(const IsoWitness& w, std::size_t n, std::size_t m);

/// tau = phitheta, a homotopy from cocycle_to_morphism(c2) to
/// cocycle_to_morphism(c1). Throws Error when the witness is invalid.
HomotopyData iso_to_homotopy(const IsoWitness& w, const CocyclePair& c1, const CocyclePair& c2);

/// phitheta = tau. Throws Error when tau fails check_homotopy between the
/// two induced morphisms.
IsoWitness homotopy_to_iso(const HomotopyData& tau, const CocyclePair& c1,
                           const CocyclePair& c2);

/// Complete equivalence solver for the special case of abelian h, where
/// isom2/isom3 are linear in phitheta: returns a witness or nullopt.
std::optional<IsoWitness> solve_iso_witness_abelian_h(const CocyclePair& c1,
                                                      const CocyclePair& c2);

}  // namespace hla
