#include "vtypes/enumeration.hpp"
#include "vtypes/error.hpp"
#include "vtypes/type_system.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace vtypes;
using vtypes::testing::from_text;
using vtypes::testing::load;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::SyntaxError;
}

}  // namespace

TEST_SUITE("type_systems") {
    TEST_CASE("parser") {
        auto d = parse_diagram("root A\nA -> A B\nB -> B B\n");
        CHECK(d.size() == 2);
        CHECK(d.names[d.root] == "A");
        CHECK(d.child(d.index_of("A"), 1) == d.index_of("B"));
        CHECK(code_of([] { parse_diagram("A -> A A\n"); }) == ErrorCode::NoRoot);
        CHECK(code_of([] { parse_diagram("root A\nA -> A C\n"); }) == ErrorCode::UnknownLabel);
        CHECK(code_of([] { parse_diagram("root A\nA -> A\n"); }) == ErrorCode::SyntaxError);
        CHECK(code_of([] { parse_diagram("root A\nA A A\n"); }) == ErrorCode::SyntaxError);
    }

    TEST_CASE("unreachable labels are pruned with a warning") {
        std::vector<std::string> warnings;
        auto d = parse_diagram("root A\nA -> A A\nX -> A X\n", &warnings);
        CHECK(d.size() == 1);
        CHECK(warnings.size() == 1);
    }

    TEST_CASE("validation") {
        CHECK_NOTHROW(from_text("root A\nA -> B B\nB -> A A\nC -> A A\n"));
        CHECK(code_of([] { from_text("root A\nA -> B C\nB -> A A\nC -> A A\n"); }) ==
              ErrorCode::ReducednessViolation);
        for (auto name : {"stabzero", "slopefour", "atomic_multinuclear", "nonbranching", "branching",
                          "simple_maximal", "infinite_abelianization", "higman5", "nonprimitive", "universal"}) {
            CHECK_NOTHROW(load(name));
        }
    }

    TEST_CASE("type of an address") {
        auto t = load("stabzero");
        CHECK(t.name(t.type_of(Address::parse("e"))) == "A");
        CHECK(t.name(t.type_of(Address::parse("000"))) == "A");
        CHECK(t.name(t.type_of(Address::parse("001"))) == "B");
        CHECK(t.name(t.type_of(Address::parse("1000"))) == "B");
        auto s = load("slopefour");
        CHECK(s.name(s.type_of(Address::parse("0110"))) == "A");
        CHECK(s.name(s.type_of(Address::parse("011"))) == "B");
    }

    TEST_CASE("reduce examples") {
        auto q = reduce(parse_diagram("root A\nA -> B C\nB -> A A\nC -> A A\n"));
        CHECK(q.system.size() == 2);
        CHECK(q.partition.block_count == 2);
        auto u = reduce(parse_diagram("root A\nA -> B C\nB -> B C\nC -> B C\n"));
        CHECK(u.system.size() == 1);
        // Off-diagonal cycles keep labels apart even without equal children.
        auto s = reduce(load("slopefour").diagram());
        CHECK(s.system.size() == 2);
        CHECK(s.partition.is_identity());
    }

    TEST_CASE("reduce agrees with iterated merging and is idempotent") {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 400; ++i) {
            const int k = 1 + i % 6;
            std::uniform_int_distribution<int> pick(0, k - 1);
            LabelDiagram d;
            for (int l = 0; l < k; ++l) {
                d.names.push_back("L" + std::to_string(l));
                d.children.push_back({pick(rng), pick(rng)});
            }
            d = d.pruned();
            auto q = reduce(d);
            CHECK(static_cast<int>(q.system.size()) == oracle::iterated_merge_size(d));
            CHECK(reduce(q.system.diagram()).partition.is_identity());
            CHECK(is_congruence(d, q.partition));
        }
    }

    TEST_CASE("quotient by a pair") {
        auto t = load("atomic_multinuclear");
        auto q = quotient_by_pair(t, t.index_of("Q"), t.index_of("R"));
        CHECK(q.partition.block_count == 4);
        auto s = load("slopefour");
        auto u = quotient_by_pair(s, 0, 1);
        CHECK(u.system.size() == 1);
        CHECK(canonical_form(u.system.diagram()) == canonical_form(universal_system().diagram()));
        CHECK(quotient_by_pair(s, 0, 0).partition.is_identity());
    }

    TEST_CASE("quotient by a pair is the finest reduced congruence joining the pair") {
        for (int k = 2; k <= 4; ++k) {
            for (const auto& t : enumerate_exact(k, 1)) {
                const auto parts = oracle::quotient_partitions(t.diagram());
                for (int p = 0; p < k; ++p) {
                    for (int q = p + 1; q < k; ++q) {
                        const auto got = quotient_by_pair(t, p, q).partition.block_of;
                        CHECK(got[p] == got[q]);
                        CHECK(oracle::congruent_and_reduced(t.diagram(), got));
                        for (const auto& cand : parts) {
                            if (cand[p] == cand[q]) {
                                CHECK(oracle::coarser_or_equal(cand, got));
                            }
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("simplicity") {
        CHECK(is_simple(load("simple_maximal")).simple);
        CHECK(is_simple(load("slopefour")).simple);
        auto m = is_simple(load("atomic_multinuclear"));
        CHECK_FALSE(m.simple);
        REQUIRE(m.witness);
        CHECK(m.witness->partition.block_count > 1);
        CHECK(m.witness->partition.block_count < 5);
        CHECK(code_of([] { is_simple(universal_system()); }) == ErrorCode::TooFewLabels);
    }

    TEST_CASE("simplicity agrees with partition enumeration") {
        for (int k = 2; k <= 4; ++k) {
            for (const auto& t : enumerate_exact(k, 1)) {
                CHECK(is_simple(t).simple == oracle::simple_by_partitions(t.diagram()));
            }
        }
    }

    TEST_CASE("class finiteness") {
        auto t = load("stabzero");
        auto sizes = class_finiteness(t);
        CHECK(sizes[t.index_of("A")].infinite);
        CHECK(sizes[t.index_of("B")].infinite);
        auto f = from_text("root A\nA -> B C\nB -> D C\nC -> C D\nD -> D D\n");
        auto fs = class_finiteness(f);
        CHECK_FALSE(fs[f.index_of("A")].infinite);
        CHECK(fs[f.index_of("A")].count == 1);
        CHECK(fs[f.index_of("B")].count == 1);
        CHECK(fs[f.index_of("C")].infinite);
    }

    TEST_CASE("finite class counts agree with layer counting") {
        for (int k = 2; k <= 4; ++k) {
            for (const auto& t : enumerate_exact(k, 1)) {
                const auto sizes = class_finiteness(t);
                const auto shallow = oracle::type_counts(t, 2 * k);
                const auto deep = oracle::type_counts(t, 3 * k + 1);
                for (std::size_t l = 0; l < t.size(); ++l) {
                    if (sizes[l].infinite) {
                        CHECK(deep[l] > shallow[l]);
                    } else {
                        CHECK(sizes[l].count == deep[l]);
                        CHECK(deep[l] == shallow[l]);
                    }
                }
            }
        }
    }

    TEST_CASE("automorphisms") {
        auto s = load("slopefour");
        auto autos = diagram_automorphisms(s);
        std::sort(autos.begin(), autos.end());
        CHECK(autos == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
        CHECK(diagram_automorphisms(load("stabzero")).size() == 1);
        for (int k = 1; k <= 3; ++k) {
            for (const auto& t : enumerate_exact(k, 1)) {
                for (const auto& sigma : diagram_automorphisms(t)) {
                    for (std::size_t l = 0; l < t.size(); ++l) {
                        for (int x = 0; x < 2; ++x) {
                            CHECK(sigma[t.child(static_cast<int>(l), x)] == t.child(sigma[l], x));
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("canonical form ignores label names and order") {
        auto a = parse_diagram("root A\nA -> A B\nB -> B B\n");
        auto b = parse_diagram("root Y\nX -> X X\nY -> Y X\n");
        CHECK(canonical_form(a) == canonical_form(b));
        CHECK(canonical_form(a) != canonical_form(parse_diagram("root A\nA -> B A\nB -> B B\n")));
        CHECK(canonical_form(canonicalize(a)) == canonical_form(a));
        auto t = load("simple_maximal");
        CHECK(canonical_form(parse_diagram(format_diagram(t.diagram()))) == canonical_form(t.diagram()));
    }
}
