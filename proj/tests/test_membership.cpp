#include "vtypes/error.hpp"
#include "vtypes/membership.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace vtypes;
using vtypes::testing::load;

namespace {

Address A(const char* s) { return Address::parse(s); }

std::vector<Address> As(std::initializer_list<const char*> xs) {
    std::vector<Address> out;
    for (auto x : xs) {
        out.push_back(A(x));
    }
    return out;
}

PrefixMap element(const std::string& name) {
    return parse_element(testing::slurp(testing::data_path("elements/" + name + ".vel")));
}

}  // namespace

TEST_SUITE("membership") {
    TEST_CASE("fix and stab on the slope-four system") {
        auto t = load("slopefour");
        CHECK(in_fix(t, element("swap_00_01")));
        CHECK(in_stab(t, element("swap_00_01")).member);
        CHECK_FALSE(in_fix(t, element("swap_0_10")));
        CHECK_FALSE(in_stab(t, element("swap_0_10")).member);
        CHECK(in_fix(t, PrefixMap::identity()));
    }

    TEST_CASE("odd shifts alone cannot fill a cone partition") {
        auto t = load("slopefour");
        // The listed element normalizes to 11 -> 1, an even shift mixed with odd ones.
        auto g = element("slope_shift");
        CHECK(format_element(normalize(g)).find("11 -> 1") != std::string::npos);
        CHECK_FALSE(in_stab(t, g).member);
        // Exhaustive over elements with at most five leaves and short cones:
        // Stab equals Fix here.
        std::vector<std::vector<Address>> parts;
        for (std::size_t n = 1; n <= 5; ++n) {
            std::mt19937_64 rng(n);
            std::set<std::vector<Address>> seen;
            for (int rep = 0; rep < 400; ++rep) {
                seen.insert(testing::random_antichain(rng, n, 4));
            }
            parts.insert(parts.end(), seen.begin(), seen.end());
        }
        int checked = 0;
        for (const auto& d : parts) {
            for (const auto& r : parts) {
                if (d.size() != r.size()) {
                    continue;
                }
                auto perm = r;
                do {
                    std::vector<ConePair> pairs;
                    for (std::size_t i = 0; i < d.size(); ++i) {
                        pairs.push_back({d[i], perm[i]});
                    }
                    const auto g2 = PrefixMap::from_pairs(pairs);
                    CHECK(in_stab(t, g2).member == in_fix(t, g2));
                    ++checked;
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
        CHECK(checked > 1000);
    }

    TEST_CASE("stabilizer element that permutes classes") {
        auto t = load("atomic_multinuclear");
        auto g = transposition(A("10"), A("11"));
        CHECK_FALSE(in_fix(t, g));
        auto v = in_stab(t, g);
        CHECK(v.member);
        auto img = induced_class_permutation(t, g);
        CHECK(img[t.index_of("R")] == t.index_of("S"));
        CHECK(img[t.index_of("S")] == t.index_of("R"));
        CHECK(img[t.index_of("Q")] == t.index_of("Q"));
        CHECK(img[t.index_of("A")] == -1);
        // Q and R have the same children, so swapping their cones is allowed.
        CHECK(in_stab(t, transposition(A("0"), A("10"))).member);
        auto bad = transposition(A("0"), A("1"));
        CHECK_FALSE(in_stab(t, bad).member);
        CHECK_THROWS_AS(induced_class_permutation(t, bad), Error);
    }

    TEST_CASE("in_fix agrees with pointwise checking") {
        std::mt19937_64 rng(31);
        for (auto name : {"slopefour", "simple_maximal", "stabzero", "atomic_multinuclear", "branching"}) {
            auto t = load(name);
            int members = 0;
            for (int rep = 0; rep < 150; ++rep) {
                auto g = rep % 2 ? testing::random_element(rng, 6) : testing::random_fix_element(t, rng, 3);
                const bool fast = in_fix(t, g);
                members += fast ? 1 : 0;
                CHECK(fast == oracle::fix_by_points(t, g));
                CHECK(fast == in_fix_deep(t, g));
            }
            CHECK(members > 0);
        }
    }

    TEST_CASE("transpositions at a depth preserve types") {
        auto t = load("slopefour");
        auto swaps = fix_transpositions_at_depth(t, 2);
        CHECK(swaps.size() == 6);
        for (const auto& s : swaps) {
            CHECK(in_fix(t, s));
        }
    }

    TEST_CASE("Fix is normal in Stab") {
        std::mt19937_64 rng(37);
        auto t = load("atomic_multinuclear");
        const auto h = transposition(A("10"), A("11"));
        for (int rep = 0; rep < 50; ++rep) {
            auto g = testing::random_fix_element(t, rng, 3);
            CHECK(in_fix(t, compose(compose(inverse(h), g), h)));
        }
    }

    TEST_CASE("matched decompositions") {
        auto t = load("slopefour");
        auto m = matched_decomposition(t, As({"0"}), As({"00", "01"}));
        CHECK(m.carets == 1);
        for (const auto& [a, b] : m.pairs) {
            CHECK(t.type_of(a) == t.type_of(b));
        }
        try {
            matched_decomposition(t, As({"0"}), As({"00"}));
            FAIL("expected TypeMismatch");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::TypeMismatch);
        }
        auto u = load("higman5");
        auto um = matched_decomposition(u, As({"0", "1"}), As({"e"}));
        CHECK(um.pairs.size() >= 2);
        try {
            matched_decomposition(u, As({"0", "1"}), As({"e"}), 0);
            FAIL("expected SearchExhausted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SearchExhausted);
        }
    }

    TEST_CASE("witness conjugator") {
        auto t = load("slopefour");
        auto c = classify(t);
        auto g = witness_conjugator(t, c, A("00"), A("01"), A("10"), A("11"));
        CHECK(*partial_apply(g, A("00")) == A("01"));
        CHECK(*partial_apply(g, A("10")) == A("11"));
        CHECK(in_fix(t, g));
        CHECK_THROWS_AS(witness_conjugator(t, c, A("0"), A("1"), A("10"), A("11")), Error);
        auto s = load("stabzero");
        CHECK_THROWS_AS(witness_conjugator(s, classify(s), A("00"), A("00"), A("10"), A("10")), Error);
    }
}
