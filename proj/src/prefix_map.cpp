#include "vtypes/prefix_map.hpp"

#include "vtypes/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vtypes {

namespace {

bool has_mergeable_pair(const std::vector<ConePair>& pairs) {
    std::map<Address, Address> by_domain;
    for (const auto& p : pairs) {
        by_domain.emplace(p.domain, p.range);
    }
    for (const auto& [dom, ran] : by_domain) {
        if (dom.empty() || ran.empty() || dom.bit(dom.length() - 1) != 0 || ran.bit(ran.length() - 1) != 0) {
            continue;
        }
        auto sib = by_domain.find(dom.parent().child(1));
        if (sib != by_domain.end() && sib->second == ran.parent().child(1)) {
            return true;
        }
    }
    return false;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

PrefixMap::PrefixMap() : pairs_{ConePair{Address{}, Address{}}} {}

PrefixMap PrefixMap::from_pairs(std::vector<ConePair> pairs) {
    std::vector<Address> dom;
    std::vector<Address> ran;
    for (const auto& p : pairs) {
        dom.push_back(p.domain);
        ran.push_back(p.range);
    }
    if (!is_complete(dom)) {
        throw Error(ErrorCode::InvalidElement, "domain cones do not form a complete antichain");
    }
    if (!is_complete(ran)) {
        throw Error(ErrorCode::InvalidElement, "range cones do not form a complete antichain");
    }
    std::sort(pairs.begin(), pairs.end());
    PrefixMap g;
    g.normalized_ = !has_mergeable_pair(pairs);
    g.pairs_ = std::move(pairs);
    return g;
}

std::size_t PrefixMap::max_domain_length() const noexcept {
    std::size_t m = 0;
    for (const auto& p : pairs_) {
        m = std::max(m, p.domain.length());
    }
    return m;
}

std::string PrefixMap::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += pairs_[i].domain.to_string() + "->" + pairs_[i].range.to_string();
    }
    return out + "}";
}

PrefixMap normalize(const PrefixMap& g) {
    if (g.normalized()) {
        return g;
    }
    std::map<Address, Address> by_domain;
    for (const auto& p : g.pairs()) {
        by_domain.emplace(p.domain, p.range);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = by_domain.begin(); it != by_domain.end(); ++it) {
            const Address& dom = it->first;
            const Address& ran = it->second;
            if (dom.empty() || ran.empty() || dom.bit(dom.length() - 1) != 0 || ran.bit(ran.length() - 1) != 0) {
                continue;
            }
            auto sib = by_domain.find(dom.parent().child(1));
            if (sib == by_domain.end() || sib->second != ran.parent().child(1)) {
                continue;
            }
            Address merged_dom = dom.parent();
            Address merged_ran = ran.parent();
            by_domain.erase(sib);
            by_domain.erase(it);
            by_domain.emplace(std::move(merged_dom), std::move(merged_ran));
            changed = true;
            break;
        }
    }
    PrefixMap out;
    out.pairs_.clear();
    for (auto& [d, r] : by_domain) {
        out.pairs_.push_back({d, r});
    }
    out.normalized_ = true;
    return out;
}

PrefixMap compose(const PrefixMap& g, const PrefixMap& h) {
    std::vector<ConePair> pairs;
    for (const auto& gp : g.pairs()) {
        for (const auto& hp : h.pairs()) {
            if (is_prefix(gp.range, hp.domain)) {
                Address tail = hp.domain.suffix_from(gp.range.length());
                pairs.push_back({gp.domain.concat(tail), hp.range});
            } else if (is_prefix(hp.domain, gp.range)) {
                Address tail = gp.range.suffix_from(hp.domain.length());
                pairs.push_back({gp.domain, hp.range.concat(tail)});
            }
        }
    }
    return normalize(PrefixMap::from_pairs(std::move(pairs)));
}

PrefixMap inverse(const PrefixMap& g) {
    std::vector<ConePair> pairs;
    pairs.reserve(g.pairs().size());
    for (const auto& p : g.pairs()) {
        pairs.push_back({p.range, p.domain});
    }
    return PrefixMap::from_pairs(std::move(pairs));
}

std::optional<Address> partial_apply(const PrefixMap& g, const Address& a) {
    const PrefixMap n = normalize(g);
    for (const auto& p : n.pairs()) {
        if (is_prefix(p.domain, a)) {
            return p.range.concat(a.suffix_from(p.domain.length()));
        }
    }
    return std::nullopt;
}

PrefixMap transposition(const Address& a, const Address& b) {
    if (!incomparable(a, b)) {
        throw Error(ErrorCode::NotIncomparable, a.to_string() + " and " + b.to_string() + " are comparable");
    }
    return from_cycles({{a, b}});
}

PrefixMap from_cycles(const std::vector<std::vector<Address>>& cycles) {
    std::vector<Address> moved;
    for (const auto& c : cycles) {
        moved.insert(moved.end(), c.begin(), c.end());
    }
    if (!is_antichain(moved)) {
        throw Error(ErrorCode::NotIncomparable, "cycle entries are not pairwise incomparable");
    }
    std::vector<ConePair> pairs;
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            pairs.push_back({c[i], c[(i + 1) % c.size()]});
        }
    }
    for (const auto& rest : complete_antichain(moved)) {
        pairs.push_back({rest, rest});
    }
    return PrefixMap::from_pairs(std::move(pairs));
}

PrefixMap parse_element(std::string_view text) {
    std::vector<ConePair> pairs;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": expected 'DOMAIN -> RANGE'");
        }
        std::string lhs = trim(std::string_view(line).substr(0, arrow));
        std::string rhs = trim(std::string_view(line).substr(arrow + 2));
        if (lhs.empty() || rhs.empty() || lhs.find_first_of(" \t") != std::string::npos ||
            rhs.find_first_of(" \t") != std::string::npos) {
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": malformed pair");
        }
        pairs.push_back({Address::parse(lhs), Address::parse(rhs)});
    }
    if (pairs.empty()) {
        throw Error(ErrorCode::SyntaxError, "element has no pairs");
    }
    return PrefixMap::from_pairs(std::move(pairs));
}

std::string format_element(const PrefixMap& g) {
    std::string out;
    for (const auto& p : g.pairs()) {
        out += p.domain.to_string() + " -> " + p.range.to_string() + "\n";
    }
    return out;
}

}  // namespace vtypes
