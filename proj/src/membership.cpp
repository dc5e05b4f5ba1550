#include "vtypes/membership.hpp"

#include "vtypes/error.hpp"
#include "vtypes/semigroup.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace vtypes {

namespace {

constexpr std::size_t kNodeCap = 400000;

struct Move {
    int side = 0;  // 0 subdivides a leaf of u, 1 a leaf of v
    int label = 0;
};

int lower_bound_carets(const std::vector<int>& state, std::size_t n) {
    int diff = 0;
    for (std::size_t l = 0; l < n; ++l) {
        diff += std::abs(state[l] - state[n + l]);
    }
    return (diff + 2) / 3;
}

std::vector<std::pair<Address, Address>> pair_by_type(const TypeSystem& t, std::vector<Address> left,
                                                      std::vector<Address> right) {
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::map<int, std::vector<Address>> pending;
    for (auto& b : right) {
        pending[t.type_of(b)].push_back(b);
    }
    std::map<int, std::size_t> used;
    std::vector<std::pair<Address, Address>> out;
    for (auto& a : left) {
        const int ty = t.type_of(a);
        out.emplace_back(a, pending.at(ty).at(used[ty]++));
    }
    return out;
}

}  // namespace

bool in_fix(const TypeSystem& t, const PrefixMap& g) {
    const PrefixMap n = normalize(g);
    for (const auto& p : n.pairs()) {
        if (t.type_of(p.domain) != t.type_of(p.range)) {
            return false;
        }
    }
    return true;
}

bool in_fix_deep(const TypeSystem& t, const PrefixMap& g, std::size_t extra_depth) {
    const PrefixMap n = normalize(g);
    for (const auto& p : n.pairs()) {
        for (std::size_t k = 0; k <= extra_depth; ++k) {
            for (const auto& eta : all_addresses(k)) {
                if (t.type_of(p.domain.concat(eta)) != t.type_of(p.range.concat(eta))) {
                    return false;
                }
            }
        }
    }
    return true;
}

StabVerdict in_stab(const TypeSystem& t, const PrefixMap& g) {
    std::set<std::pair<int, int>> rel;
    std::vector<std::pair<int, int>> work;
    const PrefixMap n = normalize(g);
    for (const auto& p : n.pairs()) {
        work.emplace_back(t.type_of(p.domain), t.type_of(p.range));
    }
    while (!work.empty()) {
        auto pr = work.back();
        work.pop_back();
        if (rel.insert(pr).second) {
            work.emplace_back(t.child(pr.first, 0), t.child(pr.second, 0));
            work.emplace_back(t.child(pr.first, 1), t.child(pr.second, 1));
        }
    }
    StabVerdict out;
    out.relation.pairs.assign(rel.begin(), rel.end());
    std::map<int, int> forward;
    std::map<int, int> backward;
    out.relation.functional = true;
    out.relation.injective = true;
    for (auto [a, b] : rel) {
        if (!forward.emplace(a, b).second) {
            out.relation.functional = false;
        }
        if (!backward.emplace(b, a).second) {
            out.relation.injective = false;
        }
    }
    out.member = out.relation.functional && out.relation.injective;
    return out;
}

std::vector<int> induced_class_permutation(const TypeSystem& t, const PrefixMap& g) {
    const StabVerdict v = in_stab(t, g);
    if (!v.member) {
        throw Error(ErrorCode::NotInStab, "element does not stabilize the type system");
    }
    const auto sizes = class_finiteness(t);
    std::vector<int> image(t.size(), -1);
    for (auto [a, b] : v.relation.pairs) {
        if (sizes[a].infinite) {
            image[a] = b;
        }
    }
    return image;
}

MatchedDecomposition matched_decomposition(const TypeSystem& t, const std::vector<Address>& u,
                                           const std::vector<Address>& v, int budget) {
    if (!is_antichain(u) || !is_antichain(v)) {
        throw Error(ErrorCode::NotIncomparable, "cone families must consist of disjoint cones");
    }
    const Classification c = classify(t);
    if (c.kind == Kind::Nuclear && !stype_equal(stype_of(t, c, u), stype_of(t, c, v))) {
        throw Error(ErrorCode::TypeMismatch, "the two clopen sets have different s-types");
    }
    const std::size_t n = t.size();
    std::vector<int> start(2 * n, 0);
    for (const auto& a : u) {
        ++start[t.type_of(a)];
    }
    for (const auto& b : v) {
        ++start[n + t.type_of(b)];
    }

    // A* over leaf-type histograms; each caret moves the imbalance by at most 3.
    using Entry = std::tuple<int, int, std::vector<int>>;  // f, g, state
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::map<std::vector<int>, int> best;
    std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
    open.emplace(lower_bound_carets(start, n), 0, start);
    best[start] = 0;
    std::optional<std::vector<int>> goal;
    std::size_t expanded = 0;
    while (!open.empty()) {
        auto [f, cost, state] = open.top();
        open.pop();
        if (best.at(state) < cost) {
            continue;
        }
        if (std::equal(state.begin(), state.begin() + n, state.begin() + n)) {
            goal = state;
            break;
        }
        if (++expanded > kNodeCap) {
            break;
        }
        if (cost >= budget) {
            continue;
        }
        for (int side = 0; side < 2; ++side) {
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t off = side * n;
                if (state[off + l] == 0) {
                    continue;
                }
                std::vector<int> next = state;
                --next[off + l];
                ++next[off + t.child(static_cast<int>(l), 0)];
                ++next[off + t.child(static_cast<int>(l), 1)];
                const int h = lower_bound_carets(next, n);
                if (cost + 1 + h > budget) {
                    continue;
                }
                auto it = best.find(next);
                if (it != best.end() && it->second <= cost + 1) {
                    continue;
                }
                best[next] = cost + 1;
                parent[next] = {state, Move{side, static_cast<int>(l)}};
                open.emplace(cost + 1 + h, cost + 1, std::move(next));
            }
        }
    }
    if (!goal) {
        throw Error(ErrorCode::SearchExhausted,
                    "no matched decomposition within " + std::to_string(budget) + " carets");
    }
    std::vector<Move> moves;
    for (auto s = *goal; s != start;) {
        const auto& [prev, mv] = parent.at(s);
        moves.push_back(mv);
        s = prev;
    }
    std::reverse(moves.begin(), moves.end());

    std::array<std::vector<Address>, 2> leaves{u, v};
    for (auto& side : leaves) {
        std::sort(side.begin(), side.end());
    }
    for (const auto& mv : moves) {
        auto& side = leaves[mv.side];
        auto it = std::find_if(side.begin(), side.end(), [&](const Address& a) { return t.type_of(a) == mv.label; });
        Address a = *it;
        side.erase(it);
        side.push_back(a.child(0));
        side.push_back(a.child(1));
        std::sort(side.begin(), side.end());
    }
    MatchedDecomposition out;
    out.carets = static_cast<int>(moves.size());
    out.pairs = pair_by_type(t, leaves[0], leaves[1]);
    return out;
}

PrefixMap witness_conjugator(const TypeSystem& t, const Classification& c, const Address& alpha,
                             const Address& alpha2, const Address& beta, const Address& beta2, int budget) {
    const bool kind_ok = c.kind == Kind::Nuclear || c.kind == Kind::Multinuclear ||
                         (c.kind == Kind::QuasinuclearAtomic && c.branching);
    if (!kind_ok || !c.stable_depth) {
        throw Error(ErrorCode::PreconditionViolated, "system kind has no conjugator construction");
    }
    const std::size_t depth = static_cast<std::size_t>(*c.stable_depth);
    if (t.type_of(alpha) != t.type_of(alpha2) || t.type_of(beta) != t.type_of(beta2)) {
        throw Error(ErrorCode::PreconditionViolated, "prescribed images must preserve types");
    }
    if (!incomparable(alpha, beta) || !incomparable(alpha2, beta2)) {
        throw Error(ErrorCode::PreconditionViolated, "prescribed addresses must be incomparable");
    }
    for (const auto* a : {&alpha, &alpha2, &beta, &beta2}) {
        if (a->length() < depth) {
            throw Error(ErrorCode::PreconditionViolated, "address " + a->to_string() + " is above the stable depth");
        }
    }
    const std::vector<Address> src{alpha, beta};
    const std::vector<Address> dst{alpha2, beta2};
    const auto rest = matched_decomposition(t, complete_antichain(src), complete_antichain(dst), budget);
    std::vector<ConePair> pairs{{alpha, alpha2}, {beta, beta2}};
    for (const auto& [a, b] : rest.pairs) {
        pairs.push_back({a, b});
    }
    return normalize(PrefixMap::from_pairs(std::move(pairs)));
}

std::vector<PrefixMap> fix_transpositions_at_depth(const TypeSystem& t, std::size_t depth) {
    const auto level = all_addresses(depth);
    std::vector<PrefixMap> out;
    for (std::size_t i = 0; i < level.size(); ++i) {
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            if (t.type_of(level[i]) == t.type_of(level[j])) {
                out.push_back(transposition(level[i], level[j]));
            }
        }
    }
    return out;
}

}  // namespace vtypes
