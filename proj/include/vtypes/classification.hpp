#pragma once

#include "vtypes/type_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vtypes {

/// Vertices with their 0- and 1-edges; edge targets index into `names`.
struct TypeGraph {
    std::vector<std::string> names;
    std::vector<std::array<int, 2>> edges;
    std::vector<int> labels;  // vertex -> label of the owning system
};

TypeGraph type_graph(const TypeSystem& t);
std::string export_dot(const TypeGraph& g);

enum class Kind { Nuclear, Multinuclear, QuasinuclearAtomic, Unclassified };

std::string kind_name(Kind k);

/// The eventually periodic word preperiod . period period ...
struct RationalPoint {
    Address preperiod;
    Address period;

    std::string to_string() const;  // e.g. "0(10)"
    friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

/// Shortest preperiod; the period is rotated accordingly.
RationalPoint canonical_point(const Address& preperiod, const Address& period);

bool is_primitive_word(const Address& w);

struct Classification {
    Kind kind = Kind::Unclassified;
    std::vector<std::vector<int>> nuclei;
    std::vector<int> eventual;
    int t = 0;
    std::optional<int> stable_depth;

    // Quasinuclear data (empty otherwise).
    std::vector<int> q;
    std::vector<int> r;
    std::vector<int> q_dagger;
    bool branching = false;

    // Non-branching atomic quasinuclear data.
    std::optional<Address> cycle_word;
    std::vector<RationalPoint> tail_points;
    std::optional<std::string> tail_error;
};

struct EventualSet {
    std::vector<int> labels;
    int t = 0;
};

EventualSet eventual_label_set(const TypeSystem& t);

/// Strongly connected components of the subgraph induced on `subset`, each
/// sorted, ordered by least member.
std::vector<std::vector<int>> strongly_connected_components(const LabelDiagram& d, const std::vector<int>& subset);

bool is_child_closed(const LabelDiagram& d, const std::vector<int>& subset);
bool is_strongly_connected(const LabelDiagram& d, const std::vector<int>& subset);

/// Labels reachable from `start`, including `start`, sorted.
std::vector<int> closure(const LabelDiagram& d, int start);

std::vector<std::vector<int>> stable_child_closed_subsets(const TypeSystem& t);

Classification classify(const TypeSystem& t);

int stable_depth(const Classification& c, const TypeSystem& t);  // throws NotApplicable
std::vector<RationalPoint> tail_points(const Classification& c, const TypeSystem& t);
TypeGraph nucleus_graph(const Classification& c, const TypeSystem& t);

}  // namespace vtypes
