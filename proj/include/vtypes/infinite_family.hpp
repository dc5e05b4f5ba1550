#pragma once

#include "vtypes/address.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vtypes {

/// A finite prefix a_0 < a_1 < ... < a_m of positive integers, optionally
/// continued by a_n = a_m + step * (n - m).
class IncreasingSeq {
public:
    static IncreasingSeq make(std::vector<std::uint64_t> values, std::optional<std::uint64_t> tail_step = {});

    /// Parses "1,2,3,4".
    static IncreasingSeq parse(std::string_view text, std::optional<std::uint64_t> tail_step = {});

    std::uint64_t at(std::uint64_t n) const;  // throws SequenceExhausted

    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::optional<std::uint64_t> tail_step() const noexcept { return step_; }

private:
    std::vector<std::uint64_t> values_;
    std::optional<std::uint64_t> step_;
};

using FamilyIndex = std::uint64_t;

FamilyIndex family_child(const IncreasingSeq& a, FamilyIndex n, int x);
FamilyIndex family_type_of(const IncreasingSeq& a, const Address& addr);
FamilyIndex family_type_from(const IncreasingSeq& a, FamilyIndex start, const Address& path);

struct IdentificationWitness {
    std::uint64_t m = 0;
    std::uint64_t r = 0;
    std::vector<std::uint64_t> differences;  // j_n - i_n for n = 0..m

    Address path() const;  // 1^m 0^r
};

IdentificationWitness identification_witness(const IncreasingSeq& a, FamilyIndex i, FamilyIndex j,
                                             std::uint64_t k);

struct TruncatedDiagram {
    std::vector<FamilyIndex> types;                         // in discovery order, P^(0) first
    std::vector<std::optional<std::array<int, 2>>> children;  // empty for frontier types
};

TruncatedDiagram truncated_diagram(const IncreasingSeq& a, std::size_t depth);
std::string export_dot(const TruncatedDiagram& d);

}  // namespace vtypes
