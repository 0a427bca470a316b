#include <doctest.h>

#include "sset/homotopy.hpp"
#include "sset/standard.hpp"

using namespace sset;

namespace {
Budget big() { return Budget(4'000'000); }
}

TEST_CASE("cylinder structure")
{
    Cylinder c0 = cylinder(terminal_point());
    CHECK(c0.prod.object.gen_count() == 3);  // I itself
    CHECK(validate_map(c0.e0, 2).ok());
    CHECK(validate_map(c0.e1, 2).ok());

    Cylinder cb = cylinder(interval_boundary());
    CHECK(cb.prod.object.gen_count() == 6);  // two disjoint intervals
    CHECK(cb.prod.object.dim() == 1);

    Cylinder c1 = cylinder(standard_simplex(1));
    auto [lo, hi] = c1.prod.object.degree_range(2);
    CHECK(hi - lo == 2);  // the square has two triangles
    // ends are degreewise injective sections of the projection
    CHECK(is_degreewise_injective(c1.e0, 3).holds());
    CHECK(compose(c1.proj, c1.e0).same_map(identity_map(standard_simplex(1))));
    CHECK(compose(c1.proj, c1.e1).same_map(identity_map(standard_simplex(1))));
}

TEST_CASE("are_homotopic: equal maps via the constant homotopy")
{
    Presentation d1 = standard_simplex(1);
    SimplicialMap f = identity_map(d1);
    HomotopyResult res = are_homotopic(f, f, big());
    REQUIRE(res.outcome == LiftOutcome::found);
    // witness restricts to f at both ends
    Cylinder cyl = cylinder(d1);
    CHECK(compose(res.witness->h, cyl.e0).same_map(f));
    CHECK(compose(res.witness->h, cyl.e1).same_map(f));
}

TEST_CASE("are_homotopic: the two vertices of the interval")
{
    Presentation pt = terminal_point();
    Presentation d1 = standard_simplex(1);
    SimplicialMap v0 = constant_map(pt, d1, d1.require("0"));
    SimplicialMap v1 = constant_map(pt, d1, d1.require("1"));
    HomotopyResult res = are_homotopic(v0, v1, big());
    REQUIRE(res.outcome == LiftOutcome::found);
    CHECK(res.witness->forward);
}

TEST_CASE("are_homotopic: none across components, with exhaustive certificate")
{
    Presentation pt = terminal_point();
    Presentation bd = interval_boundary();
    SimplicialMap v0 = constant_map(pt, bd, bd.require("0"));
    SimplicialMap v1 = constant_map(pt, bd, bd.require("1"));
    HomotopyResult res = are_homotopic(v0, v1, big());
    CHECK(res.outcome == LiftOutcome::none);
}

TEST_CASE("homotopy sets")
{
    Presentation pt = terminal_point();

    HomotopyClassTable t1 = homotopy_set(pt, standard_simplex(2), big());
    CHECK(t1.maps.size() == 3);
    CHECK(t1.class_count() == 1);
    CHECK(t1.complete);

    HomotopyClassTable t2 = homotopy_set(pt, interval_boundary(), big());
    CHECK(t2.maps.size() == 2);
    CHECK(t2.class_count() == 2);

    HomotopyClassTable t3 = homotopy_set(interval_boundary(), pt, big());
    CHECK(t3.maps.size() == 1);
    CHECK(t3.class_count() == 1);
}

TEST_CASE("witness chains replay to valid homotopies")
{
    Presentation pt = terminal_point();
    Presentation d2 = standard_simplex(2);
    HomotopyClassTable t = homotopy_set(pt, d2, big());
    REQUIRE(t.class_count() == 1);
    auto chain = t.connect(0, 2);
    REQUIRE(chain.has_value());
    REQUIRE(!chain->steps.empty());
    Cylinder cyl = cylinder(pt);
    // endpoints of consecutive steps match up: replay the chain
    int at = 0;
    for (const HomotopyWitness& w : chain->steps) {
        SimplicialMap h0 = compose(w.h, cyl.e0);
        SimplicialMap h1 = compose(w.h, cyl.e1);
        const SimplicialMap& here = t.maps[static_cast<std::size_t>(at)];
        if (w.forward) {
            CHECK(h0.same_map(here));
            at = t.index_of(h1);
        } else {
            CHECK(h1.same_map(here));
            at = t.index_of(h0);
        }
        REQUIRE(at >= 0);
    }
    CHECK(at == 2);
}

TEST_CASE("Kan target: one-step relation is already an equivalence")
{
    HomotopyClassTable t = homotopy_set(terminal_point(), discrete_set(2), big());
    CHECK(t.one_step_is_equivalence());

    HomotopyClassTable t2 = homotopy_set(interval_boundary(), discrete_set(2), big());
    CHECK(t2.one_step_is_equivalence());
}

TEST_CASE("non-Kan target: closure can strictly grow")
{
    // maps pt -> Horn(2,0): vertices 0,1,2; edges 01, 02 only.
    // vertex 1 ~ vertex 0 ~ vertex 2 but 1 and 2 are not one-step related.
    Presentation h20 = standard_horn(2, 0);
    HomotopyClassTable t = homotopy_set(terminal_point(), h20, big());
    CHECK(t.maps.size() == 3);
    CHECK(t.class_count() == 1);
    CHECK(!t.one_step_is_equivalence());
}

TEST_CASE("pi_zero")
{
    CHECK(pi_zero(interval_boundary()).count() == 2);
    CHECK(pi_zero(standard_simplex(3)).count() == 1);
    Presentation mix = coproduct({standard_simplex(1), terminal_point()}).object;
    CHECK(pi_zero(mix).count() == 2);
    CHECK(pi_zero(empty_sset()).count() == 0);
}

TEST_CASE("function complexes")
{
    Presentation pt = terminal_point();
    Presentation d1 = standard_simplex(1);

    // Hom(pt, X)_n is X_n
    FunctionComplexView v = function_complex(pt, d1, 2, big());
    for (int n = 0; n <= 2; ++n)
        CHECK(v.elements[static_cast<std::size_t>(n)].size() == d1.enumerate_degree(n).size());

    FunctionComplexView v2 = function_complex(interval_boundary(), d1, 1, big());
    CHECK(v2.elements[0].size() == 4);

    FunctionComplexView v3 = function_complex(d1, d1, 1, big());
    CHECK(v3.elements[0].size() == 3);

    // face/degeneracy actions land at valid indices and satisfy d_i s_i = id
    for (std::size_t idx = 0; idx < v3.elements[0].size(); ++idx) {
        int up = v3.element_degeneracy(0, static_cast<int>(idx), 0);
        REQUIRE(up >= 0);
        CHECK(v3.element_face(1, up, 0) == static_cast<int>(idx));
        CHECK(v3.element_face(1, up, 1) == static_cast<int>(idx));
    }
}

namespace {

// replay a chain and confirm it connects `from` to `to`
void check_chain(const HomotopyChain& chain, const SimplicialMap& from, const SimplicialMap& to)
{
    Cylinder cyl = cylinder(from.source());
    SimplicialMap at = from;
    for (const HomotopyWitness& w : chain.steps) {
        SimplicialMap h0 = compose(w.h, cyl.e0);
        SimplicialMap h1 = compose(w.h, cyl.e1);
        if (w.forward) {
            CHECK(h0.same_map(at));
            at = h1;
        } else {
            CHECK(h1.same_map(at));
            at = h0;
        }
    }
    CHECK(at.same_map(to));
}

}  // namespace

TEST_CASE("homotopy inverse: identity and collapse")
{
    // Delta^1 is contractible, so any map inverts the identity up to
    // homotopy; what matters is that the witnesses replay.
    Presentation d1 = standard_simplex(1);
    SimplicialMap f = identity_map(d1);
    HomotopyInverse inv = find_homotopy_inverse(f, big());
    REQUIRE(inv.outcome == LiftOutcome::found);
    check_chain(inv.gf_to_id, compose(*inv.inverse, f), identity_map(d1));
    check_chain(inv.fg_to_id, compose(f, *inv.inverse), identity_map(d1));

    Presentation pt = terminal_point();
    SimplicialMap collapse = terminal_map(d1, pt);
    HomotopyInverse inv2 = find_homotopy_inverse(collapse, big());
    REQUIRE(inv2.outcome == LiftOutcome::found);
    check_chain(inv2.gf_to_id, compose(*inv2.inverse, collapse), identity_map(d1));
    check_chain(inv2.fg_to_id, compose(collapse, *inv2.inverse), identity_map(pt));
}

TEST_CASE("homotopy inverse: obstruction on pi_0")
{
    Presentation pt = terminal_point();
    Presentation bd = interval_boundary();
    SimplicialMap v0 = constant_map(pt, bd, bd.require("0"));
    HomotopyInverse inv = find_homotopy_inverse(v0, big());
    CHECK(inv.outcome == LiftOutcome::none);
}

TEST_CASE("weak equivalence against a family")
{
    Presentation d1 = standard_simplex(1);
    Presentation pt = terminal_point();
    std::vector<KanTarget> targets;
    targets.push_back(certify_kan(discrete_set(2), 3, big()));
    targets.push_back(certify_kan(terminal_point(), 3, big()));
    REQUIRE(targets[0].certified_dim == 3);

    WeqReport r0 = is_weak_equivalence_against(identity_map(d1), targets, big());
    CHECK(r0.overall == Verdict::holds);

    // Delta^1 -> pt is a weak equivalence; both homotopy sets have 2 classes
    WeqReport r1 = is_weak_equivalence_against(terminal_map(d1, pt), targets, big());
    CHECK(r1.overall == Verdict::holds);
    CHECK(r1.targets[0].classes_source == 2);
    CHECK(r1.targets[0].classes_target == 2);

    // fold: pt + pt -> pt is not a weak equivalence (4 classes vs 2)
    Presentation two = coproduct({pt, pt}).object;
    SimplicialMap fold = terminal_map(two, pt);
    WeqReport r2 = is_weak_equivalence_against(fold, targets, big());
    CHECK(r2.overall == Verdict::fails);
    CHECK(r2.targets[0].classes_source == 4);
    CHECK(r2.targets[0].classes_target == 2);

    // a target without certificate is rejected
    KanTarget bad;
    bad.Z = standard_simplex(1);
    bad.certified_dim = -1;
    WeqReport r3 = is_weak_equivalence_against(identity_map(d1), {bad}, big());
    CHECK(r3.targets[0].rejected);
    CHECK(r3.overall == Verdict::inconclusive);
}

TEST_CASE("functoriality of f# on homotopy sets")
{
    // (g o f)# = f# o g# checked on class representatives
    Presentation d1 = standard_simplex(1);
    Presentation pt = terminal_point();
    Presentation s2 = discrete_set(2);
    SimplicialMap f = inclusion_by_names(interval_boundary(), d1);
    SimplicialMap g = terminal_map(d1, pt);

    HomotopyClassTable tz = homotopy_set(pt, s2, big());
    HomotopyClassTable ty = homotopy_set(d1, s2, big());
    HomotopyClassTable tx = homotopy_set(interval_boundary(), s2, big());
    SimplicialMap gf = compose(g, f);
    for (int c = 0; c < tz.class_count(); ++c) {
        const SimplicialMap& rep =
            tz.maps[static_cast<std::size_t>(tz.representatives[static_cast<std::size_t>(c)])];
        int direct = tx.class_of[static_cast<std::size_t>(tx.index_of(compose(rep, gf)))];
        int via = ty.index_of(compose(rep, g));
        const SimplicialMap& mid = ty.maps[static_cast<std::size_t>(via)];
        int composed = tx.class_of[static_cast<std::size_t>(tx.index_of(compose(mid, f)))];
        CHECK(direct == composed);
    }
}
