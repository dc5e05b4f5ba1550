#pragma once

#include "vtypes/membership.hpp"
#include "vtypes/prefix_map.hpp"
#include "vtypes/type_system.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace vtypes::testing {

inline std::string data_path(const std::string& rel) { return std::string(VTYPES_DATA_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline TypeSystem load(const std::string& name) {
    return TypeSystem::validate(parse_diagram(slurp(data_path("diagrams/" + name + ".lts"))));
}

inline TypeSystem from_text(const std::string& text) { return TypeSystem::validate(parse_diagram(text)); }

/// Splits random leaves of {e} until there are `leaves` of them.
inline std::vector<Address> random_antichain(std::mt19937_64& rng, std::size_t leaves, std::size_t max_len = 12) {
    std::vector<Address> out{Address{}};
    while (out.size() < leaves) {
        std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
        const std::size_t i = pick(rng);
        if (out[i].length() >= max_len) {
            continue;
        }
        Address a = out[i];
        out[i] = a.child(0);
        out.push_back(a.child(1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline PrefixMap random_element(std::mt19937_64& rng, std::size_t max_leaves = 8) {
    std::uniform_int_distribution<std::size_t> size(1, max_leaves);
    const std::size_t n = size(rng);
    auto dom = random_antichain(rng, n);
    auto ran = random_antichain(rng, n);
    std::shuffle(ran.begin(), ran.end(), rng);
    std::vector<ConePair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        pairs.push_back({dom[i], ran[i]});
    }
    return normalize(PrefixMap::from_pairs(std::move(pairs)));
}

/// A product of random type-preserving transpositions at the given depth.
inline PrefixMap random_fix_element(const TypeSystem& t, std::mt19937_64& rng, std::size_t depth, int factors = 4) {
    const auto swaps = fix_transpositions_at_depth(t, depth);
    PrefixMap g;
    if (swaps.empty()) {
        return g;
    }
    std::uniform_int_distribution<std::size_t> pick(0, swaps.size() - 1);
    for (int i = 0; i < factors; ++i) {
        g = compose(g, swaps[pick(rng)]);
    }
    return g;
}

}  // namespace vtypes::testing
