#include <doctest.h>

#include "sset/lifting.hpp"
#include "sset/standard.hpp"

using namespace sset;

namespace {

Budget big() { return Budget(2'000'000); }

SimplicialMap horn_incl(int p, int k)
{
    return inclusion_by_names(standard_horn(p, k), standard_simplex(p));
}

SimplicialMap boundary_incl(int n)
{
    return inclusion_by_names(standard_boundary(n), standard_simplex(n));
}

}  // namespace

TEST_CASE("solve_lift finds the identity filler for a horn square")
{
    Presentation d2 = standard_simplex(2);
    Presentation pt = terminal_point();
    LiftingSquare sq{horn_incl(2, 1), terminal_map(d2, pt),
                     horn_incl(2, 1), terminal_map(d2, pt)};
    REQUIRE(square_commutes(sq));
    LiftResult lr = solve_lift(sq, big());
    REQUIRE(lr.outcome == LiftOutcome::found);
    CHECK(lr.lift->same_map(identity_map(d2)));
    CHECK(verify_lift(sq, *lr.lift));
}

TEST_CASE("solve_lift through the identity of the point")
{
    Presentation d1 = standard_simplex(1);
    Presentation pt = terminal_point();
    LiftingSquare sq{boundary_incl(1), identity_map(pt),
                     terminal_map(interval_boundary(), pt), terminal_map(d1, pt)};
    LiftResult lr = solve_lift(sq, big());
    REQUIRE(lr.outcome == LiftOutcome::found);
    CHECK(lr.lift->same_map(terminal_map(d1, pt)));
}

TEST_CASE("solve_lift refutes with an exhaustive certificate")
{
    // i = bdDelta^1 into Delta^1, p = bdDelta^1 -> pt, top = identity:
    // a diagonal would be a nonconstant map Delta^1 -> bdDelta^1
    Presentation bd = interval_boundary();
    Presentation d1 = standard_simplex(1);
    Presentation pt = terminal_point();
    LiftingSquare sq{inclusion_by_names(bd, d1), terminal_map(bd, pt),
                     identity_map(bd), terminal_map(d1, pt)};
    REQUIRE(square_commutes(sq));
    LiftResult lr = solve_lift(sq, big());
    CHECK(lr.outcome == LiftOutcome::none);
    CHECK(lr.exhaustive);

    // independent re-enumeration under reversed candidate order agrees
    LiftResult rev = solve_lift(sq, big(), true);
    CHECK(rev.outcome == LiftOutcome::none);
}

TEST_CASE("non-commuting square is invalid input")
{
    Presentation d1 = standard_simplex(1);
    Presentation pt = terminal_point();
    // bottom drives vertex 0 to itself but top sends everything to vertex 1
    SimplicialMap i = boundary_incl(1);
    SimplicialMap p = identity_map(d1);
    SimplicialMap top = constant_map(interval_boundary(), d1, d1.require("1"));
    SimplicialMap bottom = identity_map(d1);
    LiftingSquare sq{i, p, top, bottom};
    CHECK(!square_commutes(sq));
    CHECK_THROWS_AS(solve_lift(sq, big()), error);
    (void)pt;
}

TEST_CASE("solve_lift budget exhaustion reports inconclusive")
{
    Presentation d3 = standard_simplex(3);
    Presentation pt = terminal_point();
    LiftingSquare sq{horn_incl(3, 1), terminal_map(d3, pt),
                     horn_incl(3, 1), terminal_map(d3, pt)};
    LiftResult lr = solve_lift(sq, Budget(2));
    CHECK(lr.outcome == LiftOutcome::inconclusive);
}

TEST_CASE("has_rlp: identity holds against any family")
{
    Presentation d2 = standard_simplex(2);
    auto res = has_rlp(identity_map(d2), MapFamily::horns(2), 2, big());
    CHECK(res.holds());
    auto res2 = has_rlp(identity_map(d2), MapFamily::boundaries(2), 2, big());
    CHECK(res2.holds());
}

TEST_CASE("has_rlp: path lifting fails for a boundary inclusion over the interval")
{
    // p : bdDelta^1 -> Delta^1 cannot lift the nondegenerate bottom edge
    Presentation bd = interval_boundary();
    Presentation d1 = standard_simplex(1);
    SimplicialMap p = inclusion_by_names(bd, d1);
    auto res = has_rlp(p, MapFamily::horns(1), 1, big());
    REQUIRE(res.fails());
    // witness square is replayable: re-solving it still refutes
    LiftResult again = solve_lift(*res.witness, big());
    CHECK(again.outcome == LiftOutcome::none);
}

TEST_CASE("has_rlp: discrete-fiber projection is a fibration up to dim 2")
{
    Presentation d1 = standard_simplex(1);
    Product pr = product(interval_boundary(), d1);
    auto res = has_rlp(pr.proj_right(), MapFamily::horns(2), 2, big());
    CHECK(res.holds());
}

TEST_CASE("is_kan_fibration examples")
{
    Presentation d1 = standard_simplex(1);
    Presentation pt = terminal_point();
    CHECK(is_kan_fibration_up_to(identity_map(standard_simplex(2)), 3, big()).holds());

    auto fail = is_kan_fibration_up_to(terminal_map(d1, pt), 2, big());
    REQUIRE(fail.fails());
    // the failing square lives over a horn of dimension 2
    CHECK(fail.witness->i.target().dim() == 2);

    Presentation s2 = discrete_set(2);
    Product pr = product(d1, s2);
    CHECK(is_kan_fibration_up_to(pr.proj_left(), 2, big()).holds());
}

TEST_CASE("is_kan_complex examples")
{
    CHECK(is_kan_complex_up_to(terminal_point(), 3, big()).holds());
    CHECK(is_kan_complex_up_to(discrete_set(3), 3, big()).holds());
    CHECK(is_kan_complex_up_to(standard_simplex(1), 2, big()).fails());
}

TEST_CASE("replay a single horn attachment")
{
    // attach Delta^1 to a point along Horn(1,0)
    Presentation pt = terminal_point();
    Presentation h = standard_horn(1, 0);
    AnodyneTrace tr;
    tr.name = "one-cell";
    tr.start = pt;
    tr.stages.push_back({{HornCell{1, 0, terminal_map(h, pt)}}});
    TraceReplay rep = replay_anodyne(tr);
    REQUIRE(rep.accepted);
    CHECK(rep.result.gen_count() == 3);  // 2 vertices, 1 edge
    CHECK(rep.result.dim() == 1);
    auto inj = is_degreewise_injective(rep.inclusion, 3);
    CHECK(inj.holds());
    CHECK(validate(rep.result, 3).ok());
}

TEST_CASE("replay two stages filling both horns of the interval")
{
    Presentation pt = terminal_point();
    AnodyneTrace tr;
    tr.name = "wedge";
    tr.start = pt;
    tr.stages.push_back({{HornCell{1, 0, terminal_map(standard_horn(1, 0), pt)}}});
    TraceReplay first = replay_anodyne(tr);
    REQUIRE(first.accepted);
    // second stage attaches to the stage-1 object
    Presentation g1 = first.result;
    SimplicialMap att("a", standard_horn(1, 1), g1,
                      {first.inclusion.image_of(0)});
    tr.stages.push_back({{HornCell{1, 1, att}}});
    TraceReplay rep = replay_anodyne(tr);
    REQUIRE(rep.accepted);
    auto [lo0, hi0] = rep.result.degree_range(0);
    auto [lo1, hi1] = rep.result.degree_range(1);
    CHECK(hi0 - lo0 == 3);
    CHECK(hi1 - lo1 == 2);
}

TEST_CASE("trace with a wrong generator class is certificate-rejected")
{
    Presentation pt = terminal_point();
    // attach map whose source is a boundary, not the declared horn
    AnodyneTrace tr;
    tr.name = "bogus";
    tr.start = pt;
    tr.stages.push_back({{HornCell{1, 0, terminal_map(interval_boundary(), pt)}}});
    TraceReplay rep = replay_anodyne(tr);
    CHECK(!rep.accepted);
    CHECK(rep.bad_stage == 0);
}

TEST_CASE("check_llp_against")
{
    Presentation d2 = standard_simplex(2);
    Presentation pt = terminal_point();

    // identity left leg: every square solved by its own bottom edge data
    LlpReport r0 = check_llp_against(identity_map(d2), {terminal_map(d2, pt)}, big());
    CHECK(r0.all_solved());

    // horn inclusion against a discrete-fiber projection
    Product pr = product(d2, discrete_set(2));
    LlpReport r1 = check_llp_against(horn_incl(2, 1), {pr.proj_left()}, big());
    CHECK(r1.all_solved());
    CHECK(r1.entries[0].squares > 0);

    // boundary inclusion is a cofibration but not anodyne
    Presentation bd = interval_boundary();
    LlpReport r2 = check_llp_against(boundary_incl(1), {terminal_map(bd, pt)}, big());
    CHECK(!r2.all_solved());
    CHECK(!r2.entries[0].unsolved.empty());
}
