#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hla/homlie.hpp"

namespace hla::fixtures {

/// Trivial bracket, identity twist, labels a0..a(n-1).
HomLieAlgebra abelian(std::size_t n);
/// Trivial bracket with an arbitrary invertible twist.
HomLieAlgebra abelian(std::size_t n, Matrix phi);

/// Basis (h,e,f): [h,e]=2e, [h,f]=-2f, [e,f]=h; identity twist.
HomLieAlgebra sl2();

/// Basis (x,y,z): [x,y]=z; identity twist.
HomLieAlgebra heisenberg3();

/// Block direct sum: brackets componentwise, twist block-diagonal.
HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b);

/// diag(1,q,1/q) on (h,e,f); an automorphism of sl2 for every q != 0.
Matrix sl2_diag_automorphism(const Rational& q);
/// h -> -h, e <-> f; the flip automorphism of sl2.
Matrix sl2_swap_automorphism();
/// diag(a,b,ab) on (x,y,z); an automorphism of heisenberg3 for a,b != 0.
Matrix heisenberg_diag_automorphism(const Rational& a, const Rational& b);
/// x <-> y, z -> -z.
Matrix heisenberg_swap_automorphism();

struct NamedAlgebra {
    std::string name;
    HomLieAlgebra alg;
};

/// The desk-scale corpus: abelian(1..3), sl2, heisenberg3, and Yau twists
/// of sl2/heisenberg3 by `twists` seeded random diagonal and permutation
/// automorphisms. Deterministic for a fixed seed.
std::vector<NamedAlgebra> corpus(std::size_t twists = 20, std::uint64_t seed = 0x9e3779b9u);

/// Small deterministic rational stream for fixture generation: values with
/// numerator in [-3,3] and denominator in {1,2,3}; never returns zero when
/// nonzero==true.
class RationalStream {
public:
    explicit RationalStream(std::uint64_t seed) : state_(seed ? seed : 1) {}
    Rational next(bool nonzero = false);

private:
    std::uint64_t state_;
};

}  // namespace hla::fixtures
