#include "vtypes/address.hpp"

#include "vtypes/error.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace vtypes {

Address Address::parse(std::string_view token) {
    if (token == "e" || token.empty()) {
        return Address{};
    }
    for (char c : token) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::InvalidAddress, "not a binary word: '" + std::string(token) + "'");
        }
    }
    return Address{std::string(token)};
}

Address Address::from_bits(std::string bits) { return Address{std::move(bits)}; }

Address Address::child(int x) const { return Address{bits_ + (x ? '1' : '0')}; }

Address Address::concat(const Address& tail) const { return Address{bits_ + tail.bits_}; }

Address Address::prefix(std::size_t n) const { return Address{bits_.substr(0, n)}; }

Address Address::suffix_from(std::size_t n) const { return Address{bits_.substr(n)}; }

Address Address::parent() const {
    return bits_.empty() ? Address{} : Address{bits_.substr(0, bits_.size() - 1)};
}

std::string Address::to_string() const { return bits_.empty() ? std::string("e") : bits_; }

bool is_prefix(const Address& a, const Address& b) {
    return a.length() <= b.length() && b.bits().compare(0, a.length(), a.bits()) == 0;
}

bool incomparable(const Address& a, const Address& b) { return !is_prefix(a, b) && !is_prefix(b, a); }

bool is_antichain(std::span<const Address> addresses) {
    std::vector<Address> sorted(addresses.begin(), addresses.end());
    std::sort(sorted.begin(), sorted.end());
    // In sorted order any comparable pair has the prefix immediately before
    // some extension of it, so adjacent checks suffice.
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (is_prefix(sorted[i - 1], sorted[i])) {
            return false;
        }
    }
    return true;
}

bool is_complete(std::span<const Address> antichain) {
    if (antichain.empty() || !is_antichain(antichain)) {
        return false;
    }
    using boost::multiprecision::cpp_int;
    std::size_t max_len = 0;
    for (const auto& a : antichain) {
        max_len = std::max(max_len, a.length());
    }
    cpp_int total = 0;
    for (const auto& a : antichain) {
        total += cpp_int(1) << (max_len - a.length());
    }
    return total == (cpp_int(1) << max_len);
}

std::vector<Address> all_addresses(std::size_t length) {
    std::vector<Address> out;
    out.reserve(std::size_t{1} << length);
    for (std::size_t code = 0; code < (std::size_t{1} << length); ++code) {
        std::string bits(length, '0');
        for (std::size_t i = 0; i < length; ++i) {
            if (code >> (length - 1 - i) & 1U) {
                bits[i] = '1';
            }
        }
        out.push_back(Address::from_bits(std::move(bits)));
    }
    return out;
}

std::vector<Address> complete_antichain(std::span<const Address> antichain) {
    if (!is_antichain(antichain)) {
        throw Error(ErrorCode::NotIncomparable, "addresses are not pairwise incomparable");
    }
    if (antichain.empty()) {
        return {Address{}};
    }
    std::set<Address> given(antichain.begin(), antichain.end());
    std::set<Address> inner;
    for (const auto& a : antichain) {
        for (std::size_t n = 0; n < a.length(); ++n) {
            inner.insert(a.prefix(n));
        }
    }
    std::vector<Address> out;
    for (const auto& p : inner) {
        for (int x = 0; x < 2; ++x) {
            Address c = p.child(x);
            if (!inner.contains(c) && !given.contains(c)) {
                out.push_back(std::move(c));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConePartition::ConePartition() : addresses_{Address{}} {}

ConePartition ConePartition::from(std::vector<Address> addresses) {
    if (!is_complete(addresses)) {
        throw Error(ErrorCode::InvalidElement, "addresses do not form a complete antichain");
    }
    std::sort(addresses.begin(), addresses.end());
    ConePartition p;
    p.addresses_ = std::move(addresses);
    return p;
}

std::size_t ConePartition::max_length() const noexcept {
    std::size_t m = 0;
    for (const auto& a : addresses_) {
        m = std::max(m, a.length());
    }
    return m;
}

ConePartition refine_to_depth(const ConePartition& p, std::size_t depth) {
    if (depth < p.max_length()) {
        throw Error(ErrorCode::DepthTooSmall, "depth " + std::to_string(depth) + " is below the partition depth " +
                                                  std::to_string(p.max_length()));
    }
    std::vector<Address> out;
    for (const auto& a : p.addresses()) {
        for (const auto& tail : all_addresses(depth - a.length())) {
            out.push_back(a.concat(tail));
        }
    }
    return ConePartition::from(std::move(out));
}

ConePartition common_refinement(const ConePartition& p, const ConePartition& q) {
    std::vector<Address> out;
    for (const auto& a : p.addresses()) {
        for (const auto& b : q.addresses()) {
            if (is_prefix(a, b)) {
                out.push_back(b);
            } else if (is_prefix(b, a)) {
                out.push_back(a);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return ConePartition::from(std::move(out));
}

}  // namespace vtypes
