#include "vtypes/type_system.hpp"

#include "vtypes/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace vtypes {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<int> parent_;
};

LabelPartition partition_of(UnionFind& uf, std::size_t n) {
    std::vector<int> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
        raw[i] = uf.find(static_cast<int>(i));
    }
    return LabelPartition::from_assignment(raw);
}

// `second` partitions the blocks of `first`; the result partitions the labels.
LabelPartition compose_partitions(const LabelPartition& first, const LabelPartition& second) {
    std::vector<int> raw(first.block_of.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = second.block_of[first.block_of[i]];
    }
    return LabelPartition::from_assignment(raw);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

}  // namespace

int LabelDiagram::index_of(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw Error(ErrorCode::UnknownLabel, "unknown label '" + std::string(name) + "'");
    }
    return static_cast<int>(it - names.begin());
}

LabelDiagram LabelDiagram::pruned(std::vector<std::string>* pruned_names) const {
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int c : children[l]) {
            if (!seen[c]) {
                seen[c] = true;
                stack.push_back(c);
            }
        }
    }
    std::vector<int> renum(size(), -1);
    LabelDiagram out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (seen[i]) {
            renum[i] = static_cast<int>(out.names.size());
            out.names.push_back(names[i]);
        } else if (pruned_names) {
            pruned_names->push_back(names[i]);
        }
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (seen[i]) {
            out.children.push_back({renum[children[i][0]], renum[children[i][1]]});
        }
    }
    out.root = renum[root];
    return out;
}

LabelDiagram parse_diagram(std::string_view text, std::vector<std::string>* warnings) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::string> root;
    std::vector<std::string> names;
    std::vector<std::array<std::string, 2>> kids;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no);
        if (tokens[0] == "root") {
            if (tokens.size() != 2) {
                throw Error(ErrorCode::SyntaxError, where + ": expected 'root LABEL'");
            }
            if (root) {
                throw Error(ErrorCode::SyntaxError, where + ": duplicate root line");
            }
            root = tokens[1];
            continue;
        }
        if (tokens.size() != 4 || tokens[1] != "->") {
            throw Error(ErrorCode::SyntaxError, where + ": expected 'LABEL -> CHILD0 CHILD1'");
        }
        if (std::find(names.begin(), names.end(), tokens[0]) != names.end()) {
            throw Error(ErrorCode::SyntaxError, where + ": label '" + tokens[0] + "' defined twice");
        }
        names.push_back(tokens[0]);
        kids.push_back({tokens[2], tokens[3]});
    }
    if (!root) {
        throw Error(ErrorCode::NoRoot, "no 'root' line");
    }
    LabelDiagram d;
    d.names = names;
    for (const auto& k : kids) {
        d.children.push_back({d.index_of(k[0]), d.index_of(k[1])});
    }
    d.root = d.index_of(*root);
    std::vector<std::string> dropped;
    LabelDiagram out = d.pruned(&dropped);
    if (warnings) {
        for (const auto& n : dropped) {
            warnings->push_back("label '" + n + "' is unreachable from the root and was pruned");
        }
    }
    return out;
}

TypeSystem TypeSystem::validate(LabelDiagram d) {
    d = d.pruned();
    std::map<std::array<int, 2>, int> seen;
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto [it, fresh] = seen.emplace(d.children[i], static_cast<int>(i));
        if (!fresh) {
            throw Error(ErrorCode::ReducednessViolation, "labels " + d.names[it->second] + " and " + d.names[i] +
                                                             " have identical children");
        }
    }
    return TypeSystem(std::move(d));
}

int TypeSystem::type_of(const Address& a) const {
    int l = d_.root;
    for (std::size_t i = 0; i < a.length(); ++i) {
        l = d_.children[l][a.bit(i)];
    }
    return l;
}

TypeSystem universal_system() {
    LabelDiagram d;
    d.names = {"Z"};
    d.children = {{0, 0}};
    return TypeSystem::validate(std::move(d));
}

std::string format_diagram(const LabelDiagram& d) {
    const auto order = bfs_order(d);
    std::string out = "root " + d.names[d.root] + "\n";
    for (int l : order) {
        out += d.names[l] + " -> " + d.names[d.children[l][0]] + " " + d.names[d.children[l][1]] + "\n";
    }
    return out;
}

LabelPartition LabelPartition::from_assignment(const std::vector<int>& raw) {
    LabelPartition p;
    p.block_of.assign(raw.size(), -1);
    std::map<int, int> renum;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, fresh] = renum.emplace(raw[i], p.block_count);
        if (fresh) {
            ++p.block_count;
        }
        p.block_of[i] = it->second;
    }
    return p;
}

std::vector<std::vector<int>> LabelPartition::blocks() const {
    std::vector<std::vector<int>> out(block_count);
    for (std::size_t i = 0; i < block_of.size(); ++i) {
        out[block_of[i]].push_back(static_cast<int>(i));
    }
    return out;
}

bool is_congruence(const LabelDiagram& d, const LabelPartition& p) {
    std::vector<std::array<int, 2>> image(p.block_count, {-1, -1});
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::array<int, 2> kids{p.block_of[d.children[i][0]], p.block_of[d.children[i][1]]};
        auto& slot = image[p.block_of[i]];
        if (slot[0] < 0) {
            slot = kids;
        } else if (slot != kids) {
            return false;
        }
    }
    return true;
}

LabelDiagram quotient_diagram(const LabelDiagram& d, const LabelPartition& p) {
    LabelDiagram out;
    out.names.resize(p.block_count);
    out.children.assign(p.block_count, {-1, -1});
    for (std::size_t i = 0; i < d.size(); ++i) {
        const int b = p.block_of[i];
        out.names[b] += (out.names[b].empty() ? "" : "+") + d.names[i];
        std::array<int, 2> kids{p.block_of[d.children[i][0]], p.block_of[d.children[i][1]]};
        if (out.children[b][0] >= 0 && out.children[b] != kids) {
            throw Error(ErrorCode::PreconditionViolated, "partition is not a congruence");
        }
        out.children[b] = kids;
    }
    out.root = p.block_of[d.root];
    return out;
}

Quotient reduce(const LabelDiagram& input) {
    const LabelDiagram d = input.pruned();
    const int n = static_cast<int>(d.size());
    auto id = [n](int a, int b) { return std::min(a, b) * n + std::max(a, b); };

    // Pair graph on unordered off-diagonal pairs. A pair can reach an
    // off-diagonal cycle iff it survives repeated removal of sinks.
    std::vector<std::vector<int>> succ(n * n);
    std::vector<std::vector<int>> pred(n * n);
    std::vector<int> outdeg(n * n, 0);
    std::vector<bool> alive(n * n, false);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            alive[id(a, b)] = true;
            for (int x = 0; x < 2; ++x) {
                const int ca = d.children[a][x];
                const int cb = d.children[b][x];
                if (ca != cb) {
                    succ[id(a, b)].push_back(id(ca, cb));
                    pred[id(ca, cb)].push_back(id(a, b));
                    ++outdeg[id(a, b)];
                }
            }
        }
    }
    std::vector<int> queue;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (outdeg[id(a, b)] == 0) {
                queue.push_back(id(a, b));
            }
        }
    }
    UnionFind uf(n);
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        if (!alive[v]) {
            continue;
        }
        alive[v] = false;
        uf.unite(v / n, v % n);
        for (int u : pred[v]) {
            if (alive[u] && --outdeg[u] == 0) {
                queue.push_back(u);
            }
        }
    }
    LabelPartition part = partition_of(uf, d.size());
    LabelDiagram q = quotient_diagram(d, part);
    return {TypeSystem::validate(std::move(q)), std::move(part)};
}

Quotient quotient_by_pair(const TypeSystem& t, int p, int q) {
    const auto& d = t.diagram();
    UnionFind uf(d.size());
    std::vector<std::pair<int, int>> work{{p, q}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (uf.unite(a, b)) {
            work.push_back({d.children[a][0], d.children[b][0]});
            work.push_back({d.children[a][1], d.children[b][1]});
        }
    }
    LabelPartition closure = partition_of(uf, d.size());
    Quotient reduced = reduce(quotient_diagram(d, closure));
    return {std::move(reduced.system), compose_partitions(closure, reduced.partition)};
}

Simplicity is_simple(const TypeSystem& t) {
    const int n = static_cast<int>(t.size());
    if (n < 2) {
        throw Error(ErrorCode::TooFewLabels, "simplicity needs at least two labels");
    }
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            Quotient quo = quotient_by_pair(t, p, q);
            if (quo.partition.block_count > 1) {
                return {false, std::move(quo)};
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<bool> cyclic_labels(const LabelDiagram& d) {
    const int n = static_cast<int>(d.size());
    std::vector<bool> out(n, false);
    for (int s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{d.children[s][0], d.children[s][1]};
        while (!stack.empty() && !out[s]) {
            int l = stack.back();
            stack.pop_back();
            if (l == s) {
                out[s] = true;
            } else if (!seen[l]) {
                seen[l] = true;
                stack.push_back(d.children[l][0]);
                stack.push_back(d.children[l][1]);
            }
        }
    }
    return out;
}

std::vector<ClassSize> class_finiteness(const TypeSystem& t) {
    const auto& d = t.diagram();
    const int n = static_cast<int>(d.size());
    const auto cyclic = cyclic_labels(d);
    std::vector<ClassSize> out(n);
    std::vector<int> stack;
    for (int l = 0; l < n; ++l) {
        if (cyclic[l]) {
            out[l].infinite = true;
            stack.push_back(l);
        }
    }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int c : d.children[l]) {
            if (!out[c].infinite) {
                out[c].infinite = true;
                stack.push_back(c);
            }
        }
    }
    // Finite labels form a DAG whose ancestors are all finite; count root paths.
    std::vector<int> indeg(n, 0);
    for (int l = 0; l < n; ++l) {
        if (!out[l].infinite) {
            for (int c : d.children[l]) {
                if (!out[c].infinite) {
                    ++indeg[c];
                }
            }
        }
    }
    if (!out[d.root].infinite) {
        out[d.root].count = 1;
    }
    std::vector<int> ready;
    for (int l = 0; l < n; ++l) {
        if (!out[l].infinite && indeg[l] == 0) {
            ready.push_back(l);
        }
    }
    while (!ready.empty()) {
        int l = ready.back();
        ready.pop_back();
        for (int c : d.children[l]) {
            if (!out[c].infinite) {
                out[c].count += out[l].count;
                if (--indeg[c] == 0) {
                    ready.push_back(c);
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const TypeSystem& t) {
    const auto& d = t.diagram();
    const int n = static_cast<int>(d.size());
    std::vector<std::vector<int>> out;
    for (int image = 0; image < n; ++image) {
        std::vector<int> sigma(n, -1);
        std::vector<bool> used(n, false);
        sigma[d.root] = image;
        used[image] = true;
        std::deque<int> queue{d.root};
        bool ok = true;
        while (ok && !queue.empty()) {
            int l = queue.front();
            queue.pop_front();
            for (int x = 0; x < 2 && ok; ++x) {
                const int c = d.children[l][x];
                const int target = d.children[sigma[l]][x];
                if (sigma[c] < 0) {
                    if (used[target]) {
                        ok = false;
                    } else {
                        sigma[c] = target;
                        used[target] = true;
                        queue.push_back(c);
                    }
                } else if (sigma[c] != target) {
                    ok = false;
                }
            }
        }
        if (ok) {
            out.push_back(std::move(sigma));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> bfs_order(const LabelDiagram& d) {
    std::vector<int> order{d.root};
    std::vector<bool> seen(d.size(), false);
    seen[d.root] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int c : d.children[order[i]]) {
            if (!seen[c]) {
                seen[c] = true;
                order.push_back(c);
            }
        }
    }
    return order;
}

LabelDiagram canonicalize(const LabelDiagram& d) {
    const auto order = bfs_order(d);
    std::vector<int> pos(d.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = static_cast<int>(i);
    }
    LabelDiagram out;
    for (int l : order) {
        out.names.push_back(d.names[l]);
        out.children.push_back({pos[d.children[l][0]], pos[d.children[l][1]]});
    }
    out.root = 0;
    return out;
}

std::string canonical_form(const LabelDiagram& d) {
    const LabelDiagram c = canonicalize(d);
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) {
            out += '/';
        }
        out += std::to_string(c.children[i][0]) + "." + std::to_string(c.children[i][1]);
    }
    return out;
}

}  // namespace vtypes
