#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vtypes {

/// A finite binary word naming the cone of all infinite words with that
/// prefix. The empty word is written "e" in text form.
class Address {
public:
    Address() = default;

    /// Parses a {0,1}-string; the token "e" (or the empty string) is the empty address.
    static Address parse(std::string_view token);

    /// Builds from a string assumed to contain only '0'/'1'.
    static Address from_bits(std::string bits);

    std::size_t length() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int bit(std::size_t i) const noexcept { return bits_[i] == '1' ? 1 : 0; }
    const std::string& bits() const noexcept { return bits_; }

    Address child(int x) const;
    Address concat(const Address& tail) const;
    Address prefix(std::size_t n) const;
    Address suffix_from(std::size_t n) const;
    Address parent() const;

    std::string to_string() const;

    // Lexicographic-then-length order: a proper prefix sorts first.
    friend auto operator<=>(const Address&, const Address&) = default;

private:
    explicit Address(std::string bits) : bits_(std::move(bits)) {}

    std::string bits_;
};

bool is_prefix(const Address& a, const Address& b);
bool incomparable(const Address& a, const Address& b);

/// True iff every pair of distinct entries is incomparable.
bool is_antichain(std::span<const Address> addresses);

/// True iff the antichain is a complete prefix code (Kraft sum exactly 1).
bool is_complete(std::span<const Address> antichain);

/// All addresses of the given length, in order.
std::vector<Address> all_addresses(std::size_t length);

/// The minimal antichain which, together with the given pairwise
/// incomparable addresses, covers Cantor space.
std::vector<Address> complete_antichain(std::span<const Address> antichain);

/// A complete antichain kept sorted in canonical order.
class ConePartition {
public:
    ConePartition();  // the trivial partition {e}

    /// Throws InvalidElement if the addresses are not a complete antichain.
    static ConePartition from(std::vector<Address> addresses);

    const std::vector<Address>& addresses() const noexcept { return addresses_; }
    std::size_t size() const noexcept { return addresses_.size(); }
    std::size_t max_length() const noexcept;

    friend bool operator==(const ConePartition&, const ConePartition&) = default;

private:
    std::vector<Address> addresses_;
};

ConePartition refine_to_depth(const ConePartition& p, std::size_t depth);
ConePartition common_refinement(const ConePartition& p, const ConePartition& q);

}  // namespace vtypes
