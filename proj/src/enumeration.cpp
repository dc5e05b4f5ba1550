#include "vtypes/enumeration.hpp"

#include "vtypes/error.hpp"
#include "vtypes/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace vtypes {

namespace {

std::string label_name(int i) {
    if (i < 26) {
        return std::string(1, static_cast<char>('A' + i));
    }
    return "L" + std::to_string(i);
}

// Child entries are filled in BFS order; an entry equal to the number of
// labels discovered so far introduces the next label. Each rooted diagram
// with all labels reachable arises from exactly one such sequence.
void extend(int k, std::vector<int>& entries, int discovered, std::vector<TypeSystem>& out) {
    const int pos = static_cast<int>(entries.size());
    if (pos == 2 * k) {
        if (discovered != k) {
            return;
        }
        LabelDiagram d;
        for (int i = 0; i < k; ++i) {
            d.names.push_back(label_name(i));
            d.children.push_back({entries[2 * i], entries[2 * i + 1]});
        }
        out.push_back(TypeSystem::validate(std::move(d)));
        return;
    }
    const int label = pos / 2;
    if (label >= discovered) {
        return;
    }
    const int top = std::min(discovered, k - 1);
    for (int e = 0; e <= top; ++e) {
        entries.push_back(e);
        bool reduced = true;
        if (pos % 2 == 1) {
            for (int j = 0; j < label && reduced; ++j) {
                reduced = !(entries[2 * j] == entries[pos - 1] && entries[2 * j + 1] == e);
            }
        }
        if (reduced) {
            extend(k, entries, e == discovered ? discovered + 1 : discovered, out);
        }
        entries.pop_back();
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

}  // namespace

unsigned worker_count() {
    if (const char* env = std::getenv("VTYPES_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<TypeSystem> enumerate_exact(int labels, unsigned threads) {
    if (labels < 1) {
        return {};
    }
    // Shards are the possible child pairs of the root.
    std::vector<std::vector<int>> shards;
    for (int a = 0; a <= std::min(1, labels - 1); ++a) {
        const int after_a = a == 1 ? 2 : 1;
        for (int b = 0; b <= std::min(after_a, labels - 1); ++b) {
            shards.push_back({a, b});
        }
    }
    std::vector<std::vector<TypeSystem>> results(shards.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < shards.size(); i = next++) {
            std::vector<int> entries = shards[i];
            int discovered = 1 + (entries[0] == 1) + (entries[1] == (entries[0] == 1 ? 2 : 1));
            extend(labels, entries, discovered, results[i]);
        }
    };
    const unsigned n = std::min<unsigned>(threads ? threads : worker_count(), shards.size());
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) {
        pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
        th.join();
    }
    std::vector<TypeSystem> merged;
    for (auto& r : results) {
        for (auto& t : r) {
            merged.push_back(std::move(t));
        }
    }
    std::vector<std::string> forms;
    for (const auto& t : merged) {
        forms.push_back(canonical_form(t.diagram()));
    }
    std::vector<std::size_t> order(merged.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return forms[a] < forms[b]; });
    std::vector<TypeSystem> out;
    out.reserve(merged.size());
    for (std::size_t i : order) {
        out.push_back(merged[i]);
    }
    return out;
}

std::vector<TypeSystem> enumerate_diagrams(int max_labels, unsigned threads) {
    std::vector<TypeSystem> out;
    for (int k = 1; k <= max_labels; ++k) {
        auto part = enumerate_exact(k, threads);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool stable_configuration_ok(const std::vector<std::vector<int>>& subsets) {
    auto subset_of = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    switch (subsets.size()) {
    case 1: return true;
    case 2: return subset_of(subsets[0], subsets[1]) || subset_of(subsets[1], subsets[0]);
    case 3: {
        // Sorted by size, so the union must be the last one.
        std::vector<int> both;
        std::set_intersection(subsets[0].begin(), subsets[0].end(), subsets[1].begin(), subsets[1].end(),
                              std::back_inserter(both));
        std::vector<int> uni;
        std::set_union(subsets[0].begin(), subsets[0].end(), subsets[1].begin(), subsets[1].end(),
                       std::back_inserter(uni));
        return both.empty() && uni == subsets[2];
    }
    default: return false;
    }
}

CensusRow census_row(const TypeSystem& t) {
    CensusRow row;
    row.canonical_form = canonical_form(t.diagram());
    row.labels = static_cast<int>(t.size());
    if (t.size() >= 2) {
        row.simple = is_simple(t).simple;
    }
    const Classification c = classify(t);
    row.kind = c.kind;
    for (const auto& nuc : c.nuclei) {
        row.nuclei_sizes.push_back(nuc.size());
    }
    if (c.kind == Kind::Nuclear || c.kind == Kind::Multinuclear) {
        for (const auto& info : semigroup_info(t, c)) {
            std::vector<std::string> f;
            for (const auto& x : info.invariant_factors) {
                f.push_back(x.str());
            }
            row.invariant_factors.push_back(join(f, ";"));
            row.free_rank.push_back(info.free_rank);
            row.det.push_back(info.det_i_minus_a.str());
        }
    }
    const auto subsets = stable_child_closed_subsets(t);
    row.stable_subsets = subsets.size();
    row.stable_configuration_ok = stable_configuration_ok(subsets);
    return row;
}

Census build_census(int max_labels, bool simple_only, unsigned threads) {
    Census census;
    census.max_labels = max_labels;
    const auto systems = enumerate_diagrams(max_labels, threads);
    std::vector<std::optional<CensusRow>> rows(systems.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < systems.size(); i = next++) {
            rows[i] = census_row(systems[i]);
        }
    };
    const unsigned n = threads ? threads : worker_count();
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) {
        pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
        th.join();
    }
    for (auto& r : rows) {
        if (!simple_only || r->simple.value_or(false)) {
            census.rows.push_back(std::move(*r));
        }
    }
    return census;
}

std::string census_csv(const Census& census) {
    std::string out = "canonical_form,labels,simple,kind,nuclei_sizes,invariant_factors,free_rank,det\n";
    for (const auto& r : census.rows) {
        std::vector<std::string> sizes;
        for (auto s : r.nuclei_sizes) {
            sizes.push_back(std::to_string(s));
        }
        std::vector<std::string> ranks;
        for (auto f : r.free_rank) {
            ranks.push_back(std::to_string(f));
        }
        const std::string kind = r.kind == Kind::Multinuclear
                                     ? "Multinuclear(" + std::to_string(r.nuclei_sizes.size()) + ")"
                                     : kind_name(r.kind);
        out += r.canonical_form + "," + std::to_string(r.labels) + "," +
               (r.simple ? (*r.simple ? "true" : "false") : "n/a") + "," + kind + "," + join(sizes, " ") + "," +
               join(r.invariant_factors, " ") + "," + join(ranks, " ") + "," + join(r.det, " ") + "\n";
    }
    return out;
}

bool allowed_simple_verdict(const CensusRow& row) {
    switch (row.kind) {
    case Kind::Nuclear:
    case Kind::QuasinuclearAtomic: return true;
    case Kind::Multinuclear:
        return row.nuclei_sizes.size() == 2 && row.nuclei_sizes[0] == 1 && row.nuclei_sizes[1] == 1;
    case Kind::Unclassified: return false;
    }
    return false;
}

VerificationReport verify_classification(const Census& census) {
    VerificationReport rep;
    for (const auto& r : census.rows) {
        if (!r.simple.value_or(false)) {
            continue;
        }
        ++rep.simple_systems;
        std::string cat = kind_name(r.kind);
        if (r.kind == Kind::Multinuclear) {
            cat = "Multinuclear(" + std::to_string(r.nuclei_sizes.size()) + ")";
        }
        ++rep.counts[cat];
        if (!allowed_simple_verdict(r)) {
            rep.violations.push_back(r.canonical_form);
        }
    }
    return rep;
}

VerificationReport verify_stable_subset_counts(const Census& census) {
    VerificationReport rep;
    for (const auto& r : census.rows) {
        if (!r.simple.value_or(false)) {
            continue;
        }
        ++rep.simple_systems;
        ++rep.counts[std::to_string(r.stable_subsets)];
        if (!r.stable_configuration_ok) {
            rep.violations.push_back(r.canonical_form);
        }
    }
    return rep;
}

}  // namespace vtypes
