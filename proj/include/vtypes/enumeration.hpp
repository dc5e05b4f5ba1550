#pragma once

#include "vtypes/classification.hpp"
#include "vtypes/type_system.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vtypes {

/// Worker count from VTYPES_THREADS, else the hardware concurrency.
unsigned worker_count();

/// Every reachable, reduced rooted diagram with exactly `labels` labels, one
/// per isomorphism class, in BFS-canonical labelling and sorted by canonical form.
std::vector<TypeSystem> enumerate_exact(int labels, unsigned threads = 0);

/// All sizes 1..max_labels concatenated.
std::vector<TypeSystem> enumerate_diagrams(int max_labels, unsigned threads = 0);

struct CensusRow {
    std::string canonical_form;
    int labels = 0;
    std::optional<bool> simple;  // empty for the one-label system
    Kind kind = Kind::Unclassified;
    std::vector<std::size_t> nuclei_sizes;
    std::vector<std::string> invariant_factors;  // per nucleus, e.g. "3;3"
    std::vector<int> free_rank;
    std::vector<std::string> det;
    std::size_t stable_subsets = 0;
    bool stable_configuration_ok = false;
};

struct Census {
    int max_labels = 0;
    std::vector<CensusRow> rows;
};

CensusRow census_row(const TypeSystem& t);
Census build_census(int max_labels, bool simple_only = false, unsigned threads = 0);
std::string census_csv(const Census& census);

/// True when the stable child-closed subsets have one of the shapes allowed
/// for a simple system: a single set, a chain of two, or two disjoint sets
/// together with their union.
bool stable_configuration_ok(const std::vector<std::vector<int>>& subsets);

/// Whether a verdict is one allowed for a simple system.
bool allowed_simple_verdict(const CensusRow& row);

struct VerificationReport {
    std::map<std::string, std::size_t> counts;  // category -> number of simple systems
    std::vector<std::string> violations;        // canonical forms
    std::size_t simple_systems = 0;
};

VerificationReport verify_classification(const Census& census);
VerificationReport verify_stable_subset_counts(const Census& census);

}  // namespace vtypes
