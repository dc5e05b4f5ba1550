#pragma once

#include "vtypes/classification.hpp"
#include "vtypes/prefix_map.hpp"
#include "vtypes/type_system.hpp"

#include <utility>
#include <vector>

namespace vtypes {

/// Checks the normal-form pairs only; sound because the system is reduced.
bool in_fix(const TypeSystem& t, const PrefixMap& g);

/// Slow path: also compares types on every extension of each domain cone
/// up to `extra_depth` further symbols.
bool in_fix_deep(const TypeSystem& t, const PrefixMap& g, std::size_t extra_depth = 3);

struct LabelPairRelation {
    std::vector<std::pair<int, int>> pairs;  // sorted
    bool functional = false;
    bool injective = false;
};

struct StabVerdict {
    bool member = false;
    LabelPairRelation relation;
};

StabVerdict in_stab(const TypeSystem& t, const PrefixMap& g);

/// image[l] for every label with an infinite class, -1 elsewhere.
std::vector<int> induced_class_permutation(const TypeSystem& t, const PrefixMap& g);  // throws NotInStab

struct MatchedDecomposition {
    std::vector<std::pair<Address, Address>> pairs;
    int carets = 0;
};

constexpr int kDefaultBudget = 24;

/// Searches for subdivisions of the two cone families with equal leaf-type
/// multisets, using at most `budget` carets in total.
MatchedDecomposition matched_decomposition(const TypeSystem& t, const std::vector<Address>& u,
                                           const std::vector<Address>& v, int budget = kDefaultBudget);

PrefixMap witness_conjugator(const TypeSystem& t, const Classification& c, const Address& alpha,
                             const Address& alpha2, const Address& beta, const Address& beta2,
                             int budget = kDefaultBudget);

std::vector<PrefixMap> fix_transpositions_at_depth(const TypeSystem& t, std::size_t depth);

}  // namespace vtypes
