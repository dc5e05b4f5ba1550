#pragma once

#include "vtypes/address.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vtypes {

struct ConePair {
    Address domain;
    Address range;

    friend auto operator<=>(const ConePair&, const ConePair&) = default;
};

/// An element of Thompson's group V given as a bijection between the cones
/// of two complete antichains. Pairs are kept sorted by domain address.
class PrefixMap {
public:
    PrefixMap();  // the identity {e -> e}

    /// Validates that both sides are complete antichains. The result is not
    /// normalized unless it happens to be merge-irreducible already.
    static PrefixMap from_pairs(std::vector<ConePair> pairs);

    static PrefixMap identity() { return PrefixMap{}; }

    const std::vector<ConePair>& pairs() const noexcept { return pairs_; }
    bool normalized() const noexcept { return normalized_; }

    std::size_t max_domain_length() const noexcept;
    std::string to_string() const;

    friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

private:
    friend PrefixMap normalize(const PrefixMap& g);

    std::vector<ConePair> pairs_;
    bool normalized_ = true;
};

/// Merges sibling pairs (a0->b0, a1->b1) into (a->b) until none remain.
PrefixMap normalize(const PrefixMap& g);

/// Apply g first, then h.
PrefixMap compose(const PrefixMap& g, const PrefixMap& h);
PrefixMap inverse(const PrefixMap& g);

/// The partial action on addresses: empty when a is a strict prefix of a
/// domain cone of the normal form.
std::optional<Address> partial_apply(const PrefixMap& g, const Address& a);

PrefixMap transposition(const Address& a, const Address& b);
PrefixMap from_cycles(const std::vector<std::vector<Address>>& cycles);

/// Text form: one "DOMAIN -> RANGE" pair per line, '#' comments allowed.
PrefixMap parse_element(std::string_view text);
std::string format_element(const PrefixMap& g);

}  // namespace vtypes
