#include "vtypes/infinite_family.hpp"

#include "vtypes/error.hpp"

#include <limits>
#include <map>
#include <sstream>

namespace vtypes {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw Error(ErrorCode::SequenceExhausted, "type index overflows 64 bits");
    }
    return a + b;
}

}  // namespace

IncreasingSeq IncreasingSeq::make(std::vector<std::uint64_t> values, std::optional<std::uint64_t> tail_step) {
    if (values.empty()) {
        throw Error(ErrorCode::PreconditionViolated, "sequence prefix is empty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0 || (i > 0 && values[i] <= values[i - 1])) {
            throw Error(ErrorCode::PreconditionViolated, "sequence must be strictly increasing and positive");
        }
    }
    if (tail_step && *tail_step == 0) {
        throw Error(ErrorCode::PreconditionViolated, "tail step must be positive");
    }
    IncreasingSeq s;
    s.values_ = std::move(values);
    s.step_ = tail_step;
    return s;
}

IncreasingSeq IncreasingSeq::parse(std::string_view text, std::optional<std::uint64_t> tail_step) {
    std::vector<std::uint64_t> values;
    std::stringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoull(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw Error(ErrorCode::SyntaxError, "bad sequence entry '" + item + "'");
        }
    }
    return make(std::move(values), tail_step);
}

std::uint64_t IncreasingSeq::at(std::uint64_t n) const {
    if (n < values_.size()) {
        return values_[n];
    }
    if (!step_) {
        throw Error(ErrorCode::SequenceExhausted, "a_" + std::to_string(n) + " is beyond the given prefix");
    }
    const std::uint64_t extra = n - (values_.size() - 1);
    if (extra > (std::numeric_limits<std::uint64_t>::max() - values_.back()) / *step_) {
        throw Error(ErrorCode::SequenceExhausted, "a_" + std::to_string(n) + " overflows 64 bits");
    }
    return values_.back() + *step_ * extra;
}

FamilyIndex family_child(const IncreasingSeq& a, FamilyIndex n, int x) {
    if (x == 0) {
        return n == 0 ? 0 : n - 1;
    }
    return checked_add(n, a.at(n));
}

FamilyIndex family_type_from(const IncreasingSeq& a, FamilyIndex start, const Address& path) {
    FamilyIndex n = start;
    for (std::size_t i = 0; i < path.length(); ++i) {
        n = family_child(a, n, path.bit(i));
    }
    return n;
}

FamilyIndex family_type_of(const IncreasingSeq& a, const Address& addr) { return family_type_from(a, 0, addr); }

Address IdentificationWitness::path() const { return Address::from_bits(std::string(m, '1') + std::string(r, '0')); }

IdentificationWitness identification_witness(const IncreasingSeq& a, FamilyIndex i, FamilyIndex j, std::uint64_t k) {
    if (i >= j || k == 0) {
        throw Error(ErrorCode::PreconditionViolated, "need i < j and k >= 1");
    }
    IdentificationWitness w;
    w.differences.push_back(j - i);
    while (j - i < k) {
        i = checked_add(i, a.at(i));
        j = checked_add(j, a.at(j));
        ++w.m;
        w.differences.push_back(j - i);
    }
    w.r = j - k;
    return w;
}

TruncatedDiagram truncated_diagram(const IncreasingSeq& a, std::size_t depth) {
    TruncatedDiagram out;
    std::map<FamilyIndex, int> pos;
    std::vector<std::size_t> found_at;
    out.types.push_back(0);
    out.children.emplace_back();
    found_at.push_back(0);
    pos[0] = 0;
    for (std::size_t v = 0; v < out.types.size(); ++v) {
        if (found_at[v] >= depth) {
            continue;
        }
        std::array<int, 2> kids{};
        for (int x = 0; x < 2; ++x) {
            const FamilyIndex c = family_child(a, out.types[v], x);
            auto [it, fresh] = pos.emplace(c, static_cast<int>(out.types.size()));
            if (fresh) {
                out.types.push_back(c);
                out.children.emplace_back();
                found_at.push_back(found_at[v] + 1);
            }
            kids[x] = it->second;
        }
        out.children[v] = kids;
    }
    return out;
}

std::string export_dot(const TruncatedDiagram& d) {
    std::string out = "digraph family {\n";
    for (std::size_t v = 0; v < d.types.size(); ++v) {
        out += "  \"P" + std::to_string(d.types[v]) + "\"" + (d.children[v] ? "" : " [style=dashed]") + ";\n";
    }
    for (std::size_t v = 0; v < d.types.size(); ++v) {
        if (!d.children[v]) {
            continue;
        }
        for (int x = 0; x < 2; ++x) {
            out += "  \"P" + std::to_string(d.types[v]) + "\" -> \"P" + std::to_string(d.types[(*d.children[v])[x]]) +
                   "\" [label=\"" + std::to_string(x) + "\"];\n";
        }
    }
    return out + "}\n";
}

}  // namespace vtypes
