#include <doctest.h>

#include <algorithm>

#include "sset/search.hpp"
#include "sset/standard.hpp"

using namespace sset;

TEST_CASE("enumerate_maps counts on standard objects")
{
    Budget big(1'000'000);
    CHECK(enumerate_maps(terminal_point(), standard_simplex(2), big).maps.size() == 3);
    CHECK(enumerate_maps(standard_simplex(1), standard_simplex(1), big).maps.size() == 3);
    CHECK(enumerate_maps(interval_boundary(), standard_simplex(1), big).maps.size() == 4);
    // maps Delta^1 -> Delta^2 are monotone pairs a <= b from {0,1,2}: 6
    CHECK(enumerate_maps(standard_simplex(1), standard_simplex(2), big).maps.size() == 6);
}

TEST_CASE("enumerated maps are valid and deterministic")
{
    MapList l1 = enumerate_maps(standard_horn(2, 1), standard_simplex(1), Budget(1'000'000));
    MapList l2 = enumerate_maps(standard_horn(2, 1), standard_simplex(1), Budget(1'000'000));
    REQUIRE(l1.maps.size() == l2.maps.size());
    CHECK(l1.complete);
    for (std::size_t t = 0; t < l1.maps.size(); ++t) {
        CHECK(l1.maps[t].same_map(l2.maps[t]));
        CHECK(validate_map(l1.maps[t], 2).ok());
    }
}

TEST_CASE("budget exhaustion is a distinguished non-failure outcome")
{
    MapList out = enumerate_maps(standard_simplex(2), standard_simplex(3), Budget(5));
    CHECK(!out.complete);

    MapList full = enumerate_maps(standard_simplex(2), standard_simplex(3), Budget(1'000'000));
    CHECK(full.complete);
    // monotone triples from {0..3}: C(6,3) = 20
    CHECK(full.maps.size() == 20);
}

TEST_CASE("maps from the empty set")
{
    Budget big(1000);
    MapList out = enumerate_maps(empty_sset(), standard_simplex(2), big);
    CHECK(out.maps.size() == 1);
    CHECK(out.maps[0].source().empty());
}

TEST_CASE("pins restrict the search")
{
    Presentation d1 = standard_simplex(1);
    MapSearchProblem prob;
    prob.source = &d1;
    prob.target = &d1;
    prob.pin(d1.require("0"), NormalSimplex{{}, d1.require("1")});
    Budget b(1000);
    int found = 0;
    search_maps(prob, b, [&](const std::vector<NormalSimplex>&) {
        ++found;
        return true;
    });
    // v0 -> 1 forces v1 -> 1 and the edge to be degenerate
    CHECK(found == 1);
}

TEST_CASE("reversed order explores the same solution set")
{
    Presentation bd = interval_boundary();
    Presentation d1 = standard_simplex(1);
    MapSearchProblem prob;
    prob.source = &bd;
    prob.target = &d1;
    std::vector<std::vector<NormalSimplex>> fwd, rev;
    Budget b1(1000), b2(1000);
    search_maps(prob, b1, [&](const std::vector<NormalSimplex>& im) {
        fwd.push_back(im);
        return true;
    });
    prob.reversed = true;
    search_maps(prob, b2, [&](const std::vector<NormalSimplex>& im) {
        rev.push_back(im);
        return true;
    });
    REQUIRE(fwd.size() == rev.size());
    std::sort(fwd.begin(), fwd.end());
    std::sort(rev.begin(), rev.end());
    CHECK(fwd == rev);
}
