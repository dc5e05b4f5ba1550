#pragma once

#include "vtypes/address.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vtypes {

using BigInt = boost::multiprecision::cpp_int;

/// Labels are dense indices 0..size()-1; names are kept for I/O only.
struct LabelDiagram {
    std::vector<std::string> names;
    std::vector<std::array<int, 2>> children;
    int root = 0;

    std::size_t size() const noexcept { return names.size(); }
    int child(int label, int x) const { return children[label][x]; }
    int index_of(std::string_view name) const;  // throws UnknownLabel

    /// Drops labels not reachable from the root, renumbering the rest in
    /// their original order. Dropped names are appended to `pruned`.
    LabelDiagram pruned(std::vector<std::string>* pruned_names = nullptr) const;
};

/// Parses the .lts format. Unreachable labels are pruned and reported
/// through `warnings` when it is given.
LabelDiagram parse_diagram(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// A diagram whose child-pair map is injective.
class TypeSystem {
public:
    static TypeSystem validate(LabelDiagram d);  // throws ReducednessViolation

    const LabelDiagram& diagram() const noexcept { return d_; }
    std::size_t size() const noexcept { return d_.size(); }
    int root() const noexcept { return d_.root; }
    int child(int label, int x) const { return d_.children[label][x]; }
    const std::string& name(int label) const { return d_.names[label]; }
    int index_of(std::string_view name) const { return d_.index_of(name); }

    int type_of(const Address& a) const;

private:
    explicit TypeSystem(LabelDiagram d) : d_(std::move(d)) {}

    LabelDiagram d_;
};

/// The universal system: one label with both children equal to itself.
TypeSystem universal_system();

/// Serializes with labels in canonical BFS order.
std::string format_diagram(const LabelDiagram& d);

struct LabelPartition {
    std::vector<int> block_of;  // label -> block index, blocks numbered by least member
    int block_count = 0;

    static LabelPartition from_assignment(const std::vector<int>& raw);
    std::vector<std::vector<int>> blocks() const;
    bool is_identity() const { return block_count == static_cast<int>(block_of.size()); }
};

struct Quotient {
    TypeSystem system;
    LabelPartition partition;
};

/// Builds the diagram obtained by merging the blocks of a congruence.
LabelDiagram quotient_diagram(const LabelDiagram& d, const LabelPartition& p);

bool is_congruence(const LabelDiagram& d, const LabelPartition& p);

/// The canonical reduced quotient: P and Q merge iff no off-diagonal cycle
/// is reachable from (P,Q) in the pair graph.
Quotient reduce(const LabelDiagram& d);

/// Smallest type-system quotient identifying p and q.
Quotient quotient_by_pair(const TypeSystem& t, int p, int q);

struct Simplicity {
    bool simple = false;
    std::optional<Quotient> witness;  // a proper nontrivial quotient when not simple
};

Simplicity is_simple(const TypeSystem& t);  // throws TooFewLabels

struct ClassSize {
    bool infinite = false;
    BigInt count = 0;  // meaningful only when finite
};

std::vector<ClassSize> class_finiteness(const TypeSystem& t);

/// Labels lying on a directed cycle of the type graph.
std::vector<bool> cyclic_labels(const LabelDiagram& d);

/// Each automorphism as the image vector sigma[label].
std::vector<std::vector<int>> diagram_automorphisms(const TypeSystem& t);

/// BFS order from the root, child0 before child1.
std::vector<int> bfs_order(const LabelDiagram& d);

/// Relabels in BFS order; names are kept.
LabelDiagram canonicalize(const LabelDiagram& d);

/// Name-free code such as "1.1/0.0"; equal iff the rooted diagrams are isomorphic.
std::string canonical_form(const LabelDiagram& d);

}  // namespace vtypes
