#pragma once

#include "vtypes/classification.hpp"
#include "vtypes/type_system.hpp"

#include <string>
#include <vector>

namespace vtypes {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& m);  // exact, fraction-free

/// left * m * right == diag(diagonal), with diagonal[i] | diagonal[i+1] and
/// all entries non-negative. Zero entries come last.
struct SNFResult {
    std::vector<BigInt> diagonal;
    IntMatrix left;
    IntMatrix right;
};

SNFResult smith_normal_form(const IntMatrix& m);

IntMatrix adjacency_matrix(const TypeGraph& g);

/// Invariants of one nucleus group, computed from I - A on its graph.
struct SemigroupInfo {
    std::vector<int> nucleus;
    std::vector<BigInt> invariant_factors;  // the entries > 1
    int free_rank = 0;
    int h1_rank = 0;
    BigInt det_i_minus_a = 0;
    int abelianization_z2 = 0;  // copies of Z2 in (H0 (x) Z2) + H1
    int abelianization_free = 0;
    bool fix_simple = false;
    bool fix_virtually_simple = false;

    std::string h0_string() const;             // e.g. "Z3 + Z3"
    std::string abelianization_string() const;  // e.g. "Z2 + Z"
};

/// One entry for a nuclear system, one per nucleus for a multinuclear one.
/// Throws NotApplicable for the remaining kinds.
std::vector<SemigroupInfo> semigroup_info(const TypeSystem& t, const Classification& c);

/// Canonical coset representative of a clopen set's characteristic vector.
struct SType {
    std::vector<BigInt> coords;
    friend bool operator==(const SType&, const SType&) = default;
};

SType stype_of(const TypeSystem& t, const Classification& c, const std::vector<Address>& cones);
bool stype_equal(const SType& x, const SType& y);

/// Label count vector of a set of disjoint cones, each refined to depth >= c.t.
std::vector<BigInt> nucleus_counts(const TypeSystem& t, const Classification& c, const std::vector<Address>& cones);

}  // namespace vtypes
