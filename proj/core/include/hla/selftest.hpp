#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hla/extensions.hpp"

namespace hla::selftest {

/// A cocycle fixture; `breaks` names the check_cocycle entry a targeted
/// mutant is expected to flip (empty for valid fixtures).
struct CocycleFixture {
    std::string name;
    CocyclePair c;
    bool valid = true;
    std::string breaks;
};

/// Valid cocycles: direct sums, the affine line, semidirect and
/// central-extension fixtures, plus forward-generated ones.
std::vector<CocycleFixture> cocycle_corpus();

/// Five targeted mutants, one per equation p1..p5, each flipping exactly
/// that report entry.
std::vector<CocycleFixture> cocycle_mutants();

struct EquivalentPair {
    std::string name;
    CocyclePair c1, c2;
    IsoWitness w;
};

/// Forward-generated equivalent cocycle pairs: a valid c2, a phitheta
/// solving isom1, and c1 defined through isom2/isom3.
std::vector<EquivalentPair> equivalent_pairs(std::size_t count, std::uint64_t seed = 0xabcdu);

struct CriterionResult {
    std::string id;       // "1".."11"
    std::string title;
    std::string modules;  // space-separated module tags for --filter
    bool pass = false;
    std::string detail;   // failure description or brief stats
};

/// Runs every acceptance criterion whose id or module tags contain
/// `filter` (all of them when empty).
std::vector<CriterionResult> run_criteria(const std::string& filter = "");

}  // namespace hla::selftest
