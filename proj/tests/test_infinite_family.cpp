#include "vtypes/error.hpp"
#include "vtypes/infinite_family.hpp"

#include <doctest.h>

using namespace vtypes;

TEST_SUITE("infinite_family") {
    TEST_CASE("sequences") {
        auto a = IncreasingSeq::parse("1,2,3,4");
        CHECK(a.at(0) == 1);
        CHECK(a.at(3) == 4);
        CHECK_THROWS_AS(a.at(4), Error);
        auto b = IncreasingSeq::parse("1,3", 2);
        CHECK(b.at(5) == 11);
        CHECK_THROWS_AS(IncreasingSeq::parse("2,2"), Error);
        CHECK_THROWS_AS(IncreasingSeq::parse("1,x"), Error);
    }

    TEST_CASE("identification witness for the identity sequence") {
        auto a = IncreasingSeq::parse("1,2,3,4,5,6,7,8");
        auto w = identification_witness(a, 0, 1, 2);
        CHECK(w.m == 1);
        CHECK(w.r == 1);
        CHECK(w.path().to_string() == "10");
        CHECK(family_type_from(a, 0, w.path()) == 0);
        CHECK(family_type_from(a, 1, w.path()) == 2);
    }

    TEST_CASE("witness paths land where the recurrence says") {
        auto a = IncreasingSeq::parse("1", 1);
        for (FamilyIndex i = 0; i < 6; ++i) {
            for (FamilyIndex j = i + 1; j < 7; ++j) {
                for (FamilyIndex k = 1; k < 6; ++k) {
                    auto w = identification_witness(a, i, j, k);
                    CHECK(family_type_from(a, i, w.path()) == 0);
                    CHECK(family_type_from(a, j, w.path()) == k);
                    CHECK(w.differences.back() >= k);
                    CHECK(w.differences.size() == w.m + 1);
                }
            }
        }
    }

    TEST_CASE("type of an address follows the children") {
        auto a = IncreasingSeq::parse("1,3,4,7,9,12,13,15");
        Address addr;
        FamilyIndex n = 0;
        for (int x : {1, 0, 1, 1, 0, 0}) {
            addr = addr.child(x);
            n = family_child(a, n, x);
            CHECK(family_type_of(a, addr) == n);
        }
    }

    TEST_CASE("truncated diagram") {
        auto a = IncreasingSeq::parse("1", 1);
        auto d = truncated_diagram(a, 3);
        CHECK(d.types.front() == 0);
        CHECK(d.types.size() == d.children.size());
        bool frontier = false;
        for (const auto& c : d.children) {
            frontier = frontier || !c.has_value();
        }
        CHECK(frontier);
        CHECK(export_dot(d).find("dashed") != std::string::npos);
    }
}
