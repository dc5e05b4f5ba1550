#include "vtypes/classification.hpp"

#include "vtypes/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace vtypes {

namespace {

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

std::vector<int> labels_at_depth_step(const LabelDiagram& d, const std::vector<bool>& current) {
    std::vector<int> out;
    for (std::size_t l = 0; l < current.size(); ++l) {
        if (current[l]) {
            out.push_back(d.children[l][0]);
            out.push_back(d.children[l][1]);
        }
    }
    return out;
}

// Shortest distance from each label to the target set along child edges.
std::vector<int> distance_to(const LabelDiagram& d, const std::vector<int>& targets) {
    const int inf = std::numeric_limits<int>::max();
    const int n = static_cast<int>(d.size());
    std::vector<std::vector<int>> parents(n);
    for (int l = 0; l < n; ++l) {
        for (int c : d.children[l]) {
            parents[c].push_back(l);
        }
    }
    std::vector<int> dist(n, inf);
    std::deque<int> queue;
    for (int l : targets) {
        dist[l] = 0;
        queue.push_back(l);
    }
    while (!queue.empty()) {
        int l = queue.front();
        queue.pop_front();
        for (int p : parents[l]) {
            if (dist[p] == inf) {
                dist[p] = dist[l] + 1;
                queue.push_back(p);
            }
        }
    }
    return dist;
}

std::vector<int> root_distance(const LabelDiagram& d) {
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(d.size(), inf);
    dist[d.root] = 0;
    std::deque<int> queue{d.root};
    while (!queue.empty()) {
        int l = queue.front();
        queue.pop_front();
        for (int c : d.children[l]) {
            if (dist[c] == inf) {
                dist[c] = dist[l] + 1;
                queue.push_back(c);
            }
        }
    }
    return dist;
}

bool has_internal_cycle(const LabelDiagram& d, const std::vector<int>& scc) {
    if (scc.size() > 1) {
        return true;
    }
    const int l = scc.front();
    return d.children[l][0] == l || d.children[l][1] == l;
}

// Addresses with type in Q none of whose proper prefixes has type in Q.
std::vector<Address> minimal_q_addresses(const Classification& c, const TypeSystem& t) {
    std::vector<Address> out;
    std::function<void(const Address&)> search = [&](const Address& a) {
        const int ty = t.type_of(a);
        if (contains(c.q, ty)) {
            out.push_back(a);
        } else if (!contains(c.r, ty)) {
            search(a.child(0));
            search(a.child(1));
        }
    };
    search(Address{});
    return out;
}

// In the non-branching case each Q label has exactly one child in Q.
Address q_cycle_word(const Classification& c, const TypeSystem& t, int start) {
    std::string word;
    int cur = start;
    do {
        const int x = contains(c.q, t.child(cur, 0)) ? 0 : 1;
        word += static_cast<char>('0' + x);
        cur = t.child(cur, x);
    } while (cur != start);
    return Address::from_bits(word);
}

}  // namespace

TypeGraph type_graph(const TypeSystem& t) {
    TypeGraph g;
    g.names = t.diagram().names;
    g.edges = t.diagram().children;
    for (std::size_t l = 0; l < t.size(); ++l) {
        g.labels.push_back(static_cast<int>(l));
    }
    return g;
}

std::string export_dot(const TypeGraph& g) {
    std::string out = "digraph types {\n";
    for (const auto& name : g.names) {
        out += "  \"" + name + "\";\n";
    }
    for (std::size_t v = 0; v < g.edges.size(); ++v) {
        for (int x = 0; x < 2; ++x) {
            out += "  \"" + g.names[v] + "\" -> \"" + g.names[g.edges[v][x]] + "\" [label=\"" + std::to_string(x) +
                   "\"];\n";
        }
    }
    return out + "}\n";
}

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::Nuclear: return "Nuclear";
    case Kind::Multinuclear: return "Multinuclear";
    case Kind::QuasinuclearAtomic: return "QuasinuclearAtomic";
    case Kind::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::string RationalPoint::to_string() const {
    return (preperiod.empty() ? std::string() : preperiod.bits()) + "(" + period.bits() + ")";
}

RationalPoint canonical_point(const Address& preperiod, const Address& period) {
    std::string pre = preperiod.bits();
    std::string per = period.bits();
    while (!pre.empty() && pre.back() == per.back()) {
        per = per.back() + per.substr(0, per.size() - 1);
        pre.pop_back();
    }
    return {Address::from_bits(pre), Address::from_bits(per)};
}

bool is_primitive_word(const Address& w) {
    const std::string& s = w.bits();
    const std::size_t n = s.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p == 0 && s.compare(p, n - p, s, 0, n - p) == 0) {
            return false;
        }
    }
    return n > 0;
}

EventualSet eventual_label_set(const TypeSystem& t) {
    const auto& d = t.diagram();
    const std::size_t n = d.size();
    std::vector<std::vector<bool>> depth_sets;
    std::map<std::vector<bool>, int> first_seen;
    std::vector<bool> current(n, false);
    current[d.root] = true;
    while (!first_seen.contains(current)) {
        first_seen.emplace(current, static_cast<int>(depth_sets.size()));
        depth_sets.push_back(current);
        std::vector<bool> next(n, false);
        for (int c : labels_at_depth_step(d, current)) {
            next[c] = true;
        }
        current = std::move(next);
    }
    const int start = first_seen.at(current);
    std::vector<bool> in_e(n, false);
    for (std::size_t i = start; i < depth_sets.size(); ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (depth_sets[i][l]) {
                in_e[l] = true;
            }
        }
    }
    EventualSet out;
    for (std::size_t l = 0; l < n; ++l) {
        if (in_e[l]) {
            out.labels.push_back(static_cast<int>(l));
        }
    }
    for (int i = start - 1; i >= 0; --i) {
        bool inside = true;
        for (std::size_t l = 0; l < n; ++l) {
            if (depth_sets[i][l] && !in_e[l]) {
                inside = false;
            }
        }
        if (!inside) {
            out.t = i + 1;
            break;
        }
    }
    return out;
}

std::vector<std::vector<int>> strongly_connected_components(const LabelDiagram& d, const std::vector<int>& subset) {
    const int n = static_cast<int>(d.size());
    std::vector<bool> member(n, false);
    for (int l : subset) {
        member[l] = true;
    }
    std::vector<int> index(n, -1);
    std::vector<int> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> out;
    int counter = 0;
    std::function<void(int)> visit = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : d.children[v]) {
            if (!member[w]) {
                continue;
            }
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w = -1;
            while (w != v) {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    std::vector<int> sorted(subset);
    std::sort(sorted.begin(), sorted.end());
    for (int l : sorted) {
        if (index[l] < 0) {
            visit(l);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_child_closed(const LabelDiagram& d, const std::vector<int>& subset) {
    std::vector<int> sorted(subset);
    std::sort(sorted.begin(), sorted.end());
    for (int l : sorted) {
        for (int c : d.children[l]) {
            if (!contains(sorted, c)) {
                return false;
            }
        }
    }
    return true;
}

bool is_strongly_connected(const LabelDiagram& d, const std::vector<int>& subset) {
    if (subset.empty()) {
        return false;
    }
    auto comps = strongly_connected_components(d, subset);
    return comps.size() == 1 && has_internal_cycle(d, comps.front());
}

std::vector<int> closure(const LabelDiagram& d, int start) {
    std::vector<bool> seen(d.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    std::vector<int> out;
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        out.push_back(l);
        for (int c : d.children[l]) {
            if (!seen[c]) {
                seen[c] = true;
                stack.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> stable_child_closed_subsets(const TypeSystem& t) {
    const auto& d = t.diagram();
    // A stable child-closed set is exactly a union of closures of cyclic labels.
    const auto cyclic = cyclic_labels(d);
    std::set<std::vector<int>> generators;
    for (std::size_t l = 0; l < d.size(); ++l) {
        if (cyclic[l]) {
            generators.insert(closure(d, static_cast<int>(l)));
        }
    }
    std::vector<std::vector<int>> gens(generators.begin(), generators.end());
    std::set<std::vector<int>> unions;
    for (std::size_t mask = 1; mask < (std::size_t{1} << gens.size()); ++mask) {
        std::set<int> u;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (mask >> i & 1U) {
                u.insert(gens[i].begin(), gens[i].end());
            }
        }
        unions.emplace(u.begin(), u.end());
    }
    std::vector<std::vector<int>> out(unions.begin(), unions.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

Classification classify(const TypeSystem& t) {
    const auto& d = t.diagram();
    Classification c;
    const EventualSet ev = eventual_label_set(t);
    c.eventual = ev.labels;
    c.t = ev.t;
    const auto comps = strongly_connected_components(d, ev.labels);
    std::vector<std::vector<int>> closed;
    std::vector<std::vector<int>> open;
    for (const auto& comp : comps) {
        if (is_child_closed(d, comp) && has_internal_cycle(d, comp)) {
            closed.push_back(comp);
        } else {
            open.push_back(comp);
        }
    }
    c.nuclei = closed;
    if (open.empty() && closed.size() == 1) {
        c.kind = Kind::Nuclear;
    } else if (open.empty() && closed.size() >= 2) {
        c.kind = Kind::Multinuclear;
    } else if (open.size() == 1 && closed.size() == 1 && closed.front().size() == 1 &&
               has_internal_cycle(d, open.front())) {
        c.kind = Kind::QuasinuclearAtomic;
        c.q = open.front();
        c.r = closed.front();
        for (int l : c.q) {
            if (contains(c.q, d.children[l][0]) && contains(c.q, d.children[l][1])) {
                c.q_dagger.push_back(l);
            }
        }
        c.branching = !c.q_dagger.empty();
    }
    if (c.kind == Kind::Nuclear || c.kind == Kind::Multinuclear ||
        (c.kind == Kind::QuasinuclearAtomic && c.branching)) {
        c.stable_depth = stable_depth(c, t);
    }
    if (c.kind == Kind::QuasinuclearAtomic && !c.branching) {
        try {
            c.tail_points = tail_points(c, t);
        } catch (const Error& e) {
            c.tail_error = e.what();
        }
        // The cycle word is recorded even when it fails the primitivity check.
        const auto minimal = minimal_q_addresses(c, t);
        if (!minimal.empty()) {
            c.cycle_word = q_cycle_word(c, t, t.type_of(minimal.front()));
        }
    }
    return c;
}

int stable_depth(const Classification& c, const TypeSystem& t) {
    if (c.kind == Kind::Nuclear || c.kind == Kind::Multinuclear) {
        return c.t + 2;
    }
    if (c.kind != Kind::QuasinuclearAtomic || !c.branching) {
        throw Error(ErrorCode::NotApplicable, "stable depth needs a nuclear, multinuclear or branching system");
    }
    const auto& d = t.diagram();
    const int inf = std::numeric_limits<int>::max();
    const auto to_dagger = distance_to(d, c.q_dagger);
    const auto from_root = root_distance(d);
    // Shortest incomparable pair delta1 = gamma 0 eta1, delta2 = gamma 1 eta2
    // with both types in Q-dagger, minimizing the longer of the two.
    int best = inf;
    for (std::size_t l = 0; l < d.size(); ++l) {
        const int a = to_dagger[d.children[l][0]];
        const int b = to_dagger[d.children[l][1]];
        if (from_root[l] == inf || a == inf || b == inf) {
            continue;
        }
        best = std::min(best, from_root[l] + 1 + std::max(a, b));
    }
    if (best == inf) {
        throw Error(ErrorCode::NotApplicable, "no incomparable pair of Q-dagger addresses");
    }
    return std::max(best, c.t) + 1;
}

std::vector<RationalPoint> tail_points(const Classification& c, const TypeSystem& t) {
    if (c.kind != Kind::QuasinuclearAtomic || c.branching) {
        throw Error(ErrorCode::NotApplicable, "tail points need a non-branching atomic quasinuclear system");
    }
    const auto minimal = minimal_q_addresses(c, t);
    if (minimal.empty()) {
        throw Error(ErrorCode::NotApplicable, "no address has a type in Q");
    }
    auto cycle_from = [&](int start) { return q_cycle_word(c, t, start); };
    const Address zeta = cycle_from(t.type_of(minimal.front()));
    if (!is_primitive_word(zeta)) {
        throw Error(ErrorCode::NonPrimitiveCycle, "cycle word " + zeta.bits() + " is a proper power");
    }
    std::vector<RationalPoint> out;
    for (const auto& beta : minimal) {
        out.push_back(canonical_point(beta, cycle_from(t.type_of(beta))));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TypeGraph nucleus_graph(const Classification& c, const TypeSystem& t) {
    if (c.kind != Kind::Nuclear) {
        throw Error(ErrorCode::NotApplicable, "nucleus graph needs a nuclear system");
    }
    const auto& nucleus = c.nuclei.front();
    const auto& d = t.diagram();
    TypeGraph g;
    std::map<int, int> pos;
    for (int l : nucleus) {
        pos[l] = static_cast<int>(g.names.size());
        g.names.push_back(d.names[l]);
        g.labels.push_back(l);
    }
    for (int l : nucleus) {
        g.edges.push_back({pos.at(d.children[l][0]), pos.at(d.children[l][1])});
    }
    return g;
}

}  // namespace vtypes
