#pragma once

// Deliberately naive reference implementations, written independently of the
// library algorithms they are compared against.

#include "vtypes/prefix_map.hpp"
#include "vtypes/type_system.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vtypes::oracle {

/// Image of an address under a (not necessarily normalized) element, or
/// nothing when the address sits strictly above the domain cones.
inline std::optional<std::string> image(const PrefixMap& g, const std::string& word) {
    for (const auto& p : g.pairs()) {
        const std::string& d = p.domain.bits();
        if (word.size() >= d.size() && word.compare(0, d.size(), d) == 0) {
            return p.range.bits() + word.substr(d.size());
        }
    }
    return std::nullopt;
}

/// Pointwise action on every word of length `len`, as a sorted table.
inline std::map<std::string, std::string> action_table(const PrefixMap& g, std::size_t len) {
    std::map<std::string, std::string> out;
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
        std::string w(len, '0');
        for (std::size_t i = 0; i < len; ++i) {
            w[i] = (code >> (len - 1 - i) & 1U) ? '1' : '0';
        }
        out[w] = *image(g, w);
    }
    return out;
}

/// Rebuilds the minimal prefix map from a pointwise table over all words of
/// one length by repeatedly merging sibling rows whose images are siblings.
inline std::map<std::string, std::string> minimal_map_from_table(std::map<std::string, std::string> table) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = table.begin(); it != table.end(); ++it) {
            const std::string d = it->first;
            const std::string r = it->second;
            if (d.empty() || r.empty() || d.back() != '0' || r.back() != '0') {
                continue;
            }
            std::string d1 = d;
            d1.back() = '1';
            std::string r1 = r;
            r1.back() = '1';
            auto sib = table.find(d1);
            if (sib != table.end() && sib->second == r1) {
                table.erase(sib);
                table.erase(d);
                table[d.substr(0, d.size() - 1)] = r.substr(0, r.size() - 1);
                changed = true;
                break;
            }
        }
    }
    return table;
}

inline std::map<std::string, std::string> as_table(const PrefixMap& g) {
    std::map<std::string, std::string> out;
    for (const auto& p : g.pairs()) {
        out[p.domain.bits()] = p.range.bits();
    }
    return out;
}

/// Composite g then h evaluated pointwise at a depth where both act as
/// plain prefix replacements.
inline std::map<std::string, std::string> compose_by_points(const PrefixMap& g, const PrefixMap& h) {
    std::size_t depth = 0;
    for (const auto& p : g.pairs()) {
        depth = std::max(depth, p.domain.length());
    }
    std::size_t range_depth = 0;
    for (const auto& p : g.pairs()) {
        range_depth = std::max(range_depth, p.range.length());
    }
    for (const auto& p : h.pairs()) {
        depth = std::max(depth, p.domain.length());
    }
    depth += range_depth + 1;
    std::map<std::string, std::string> table;
    for (const auto& [w, gw] : action_table(g, depth)) {
        table[w] = *image(h, gw);
    }
    return minimal_map_from_table(table);
}

/// Every set partition of {0..n-1} as a restricted growth string.
inline std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            cur[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    if (n > 0) {
        cur[0] = 0;
        rec(rec, 1, 1);
    }
    return out;
}

/// Congruence whose quotient has an injective child-pair map.
inline bool congruent_and_reduced(const LabelDiagram& d, const std::vector<int>& block) {
    std::map<int, std::pair<int, int>> kids;
    for (std::size_t l = 0; l < d.size(); ++l) {
        std::pair<int, int> k{block[d.children[l][0]], block[d.children[l][1]]};
        auto [it, fresh] = kids.emplace(block[l], k);
        if (!fresh && it->second != k) {
            return false;
        }
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [b, k] : kids) {
        if (!seen.insert(k).second) {
            return false;
        }
    }
    return true;
}

inline std::vector<std::vector<int>> quotient_partitions(const LabelDiagram& d) {
    std::vector<std::vector<int>> out;
    for (auto& p : set_partitions(static_cast<int>(d.size()))) {
        if (congruent_and_reduced(d, p)) {
            out.push_back(p);
        }
    }
    return out;
}

inline int block_count(const std::vector<int>& p) { return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1; }

inline bool simple_by_partitions(const LabelDiagram& d) {
    for (const auto& p : quotient_partitions(d)) {
        const int b = block_count(p);
        if (b != 1 && b != static_cast<int>(d.size())) {
            return false;
        }
    }
    return true;
}

/// p is coarser than or equal to q: labels together in q are together in p.
inline bool coarser_or_equal(const std::vector<int>& p, const std::vector<int>& q) {
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (q[i] == q[j] && p[i] != p[j]) {
                return false;
            }
        }
    }
    return true;
}

/// All rooted diagrams with k labels (root 0), reachable and reduced,
/// deduplicated by canonical form. Exponential; for k <= 4 only.
inline std::set<std::string> brute_force_diagrams(int k) {
    std::set<std::string> out;
    const int choices = k * k;
    std::vector<int> code(k, 0);
    for (;;) {
        LabelDiagram d;
        for (int i = 0; i < k; ++i) {
            d.names.push_back("L" + std::to_string(i));
            d.children.push_back({code[i] / k, code[i] % k});
        }
        std::set<int> pairs(code.begin(), code.end());
        if (static_cast<int>(pairs.size()) == k && d.pruned().size() == static_cast<std::size_t>(k)) {
            out.insert(canonical_form(d));
        }
        int i = 0;
        while (i < k && ++code[i] == choices) {
            code[i++] = 0;
        }
        if (i == k) {
            break;
        }
    }
    return out;
}

/// Merges labels with identical children until none remain.
inline int iterated_merge_size(LabelDiagram d) {
    for (;;) {
        std::map<std::array<int, 2>, int> seen;
        int a = -1;
        int b = -1;
        for (std::size_t l = 0; l < d.size() && a < 0; ++l) {
            auto [it, fresh] = seen.emplace(d.children[l], static_cast<int>(l));
            if (!fresh) {
                a = it->second;
                b = static_cast<int>(l);
            }
        }
        if (a < 0) {
            return static_cast<int>(d.size());
        }
        LabelDiagram next;
        std::vector<int> renum(d.size());
        for (std::size_t l = 0; l < d.size(); ++l) {
            if (static_cast<int>(l) == b) {
                continue;
            }
            renum[l] = static_cast<int>(next.names.size());
            next.names.push_back(d.names[l]);
        }
        renum[b] = renum[a];
        for (std::size_t l = 0; l < d.size(); ++l) {
            if (static_cast<int>(l) != b) {
                next.children.push_back({renum[d.children[l][0]], renum[d.children[l][1]]});
            }
        }
        next.root = renum[d.root];
        d = next.pruned();
    }
}

/// Number of addresses of each type among words of length <= depth.
inline std::vector<long long> type_counts(const TypeSystem& t, std::size_t depth) {
    std::vector<long long> out(t.size(), 0);
    std::vector<int> layer{t.root()};
    for (std::size_t k = 0; k <= depth; ++k) {
        std::vector<int> next;
        for (int l : layer) {
            ++out[l];
            next.push_back(t.child(l, 0));
            next.push_back(t.child(l, 1));
        }
        layer = std::move(next);
    }
    return out;
}

/// Checks in_fix by pointwise comparison on every address extending a
/// domain cone by at most `extra` symbols beyond the deepest domain cone.
inline bool fix_by_points(const TypeSystem& t, const PrefixMap& g, std::size_t extra = 3) {
    std::size_t deepest = 0;
    for (const auto& p : g.pairs()) {
        deepest = std::max(deepest, p.domain.length());
    }
    const std::size_t limit = deepest + extra;
    for (const auto& p : g.pairs()) {
        std::vector<std::string> frontier{p.domain.bits()};
        while (!frontier.empty()) {
            std::string w = frontier.back();
            frontier.pop_back();
            const std::string img = *image(g, w);
            if (t.type_of(Address::parse(w)) != t.type_of(Address::parse(img))) {
                return false;
            }
            if (w.size() < limit) {
                frontier.push_back(w + "0");
                frontier.push_back(w + "1");
            }
        }
    }
    return true;
}

}  // namespace vtypes::oracle
