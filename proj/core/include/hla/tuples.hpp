#pragma once

#include <cstddef>
#include <vector>

namespace hla {

using Tuple = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// All strictly increasing k-tuples over {0..n-1}, lexicographic order.
std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t k);

/// Position of an increasing tuple in the lexicographic enumeration.
std::size_t tuple_index(std::size_t n, const Tuple& t);

/// Sorts t in place; returns the permutation sign (+1/-1), or 0 when an
/// index repeats.
int sort_with_sign(Tuple& t);

struct Unshuffle {
    Tuple perm;  // images (sigma(1),...,sigma(total)), 0-based positions
    int sign;    // permutation parity
};

/// All (a,b)-unshuffles of {0..a+b-1}: permutations increasing on the first
/// a slots and on the last b slots, enumerated by the lexicographic choice
/// of the first block.
std::vector<Unshuffle> unshuffles(std::size_t a, std::size_t b);

}  // namespace hla
