#include <doctest.h>

#include "sset/corpus.hpp"
#include "sset/io.hpp"
#include "sset/standard.hpp"

using namespace sset;

TEST_CASE("canonical round trip on standard objects")
{
    for (int p = 0; p <= 3; ++p) {
        Presentation d = standard_simplex(p);
        std::string text = serialize_sset(d);
        Parsed<Presentation> back = parse_sset(text);
        REQUIRE(back.ok());
        CHECK(back.value->same_structure(d));
        CHECK(back.value->name() == d.name());
        // parse o serialize is the identity byte-for-byte
        CHECK(serialize_sset(*back.value) == text);
    }
}

TEST_CASE("serialize o parse canonicalizes")
{
    // same content, scrambled order and comments
    std::string scrambled =
        "# a triangle boundary piece\n"
        "sset X\n"
        "face e 1 = v0\n"
        "simplex e 1\n"
        "simplex v0 0\n\n"
        "simplex v1 0   # other end\n"
        "face e 0 = v1\n";
    Parsed<Presentation> p = parse_sset(scrambled);
    REQUIRE(p.ok());
    std::string canon = serialize_sset(*p.value);
    Parsed<Presentation> again = parse_sset(canon);
    REQUIRE(again.ok());
    CHECK(serialize_sset(*again.value) == canon);  // idempotent
}

TEST_CASE("parse diagnostics carry position and kind")
{
    // face index out of range on a 1-simplex
    std::string bad =
        "sset X\n"
        "simplex v0 0\n"
        "simplex e 1\n"
        "face e 0 = v0\n"
        "face e 2 = v0\n";
    Parsed<Presentation> p = parse_sset(bad);
    REQUIRE(!p.ok());
    CHECK(p.diag.kind == Diagnostic::Kind::syntax);
    CHECK(p.diag.line == 5);

    // dangling reference
    std::string dangle =
        "sset X\n"
        "simplex e 1\n"
        "face e 0 = ghost\n"
        "face e 1 = ghost\n";
    Parsed<Presentation> q = parse_sset(dangle);
    REQUIRE(!q.ok());
    CHECK(q.diag.kind == Diagnostic::Kind::dangling_reference);
    CHECK(q.diag.line == 3);

    // identity violation: d_0 d_1 inconsistency via a corrupt triangle
    std::string corrupt =
        "sset X\n"
        "simplex a 0\n"
        "simplex b 0\n"
        "simplex c 0\n"
        "simplex ab 1\nface ab 0 = b\nface ab 1 = a\n"
        "simplex ac 1\nface ac 0 = c\nface ac 1 = a\n"
        "simplex bc 1\nface bc 0 = c\nface bc 1 = b\n"
        "simplex t 2\nface t 0 = bc\nface t 1 = bc\nface t 2 = ab\n";
    Parsed<Presentation> r = parse_sset(corrupt);
    REQUIRE(!r.ok());
    CHECK(r.diag.kind == Diagnostic::Kind::identity_violation);

    // syntax error
    Parsed<Presentation> s = parse_sset("sset X\nsimplex v zero\n");
    REQUIRE(!s.ok());
    CHECK(s.diag.kind == Diagnostic::Kind::syntax);
}

TEST_CASE("smap round trip and diagnostics")
{
    Environment env;
    env.ssets["Delta1"] = standard_simplex(1);
    env.ssets["pt"] = terminal_point();
    SimplicialMap collapse = terminal_map(standard_simplex(1), terminal_point());
    collapse.rename("collapse");
    std::string text = serialize_smap(collapse);
    Parsed<SimplicialMap> back = parse_smap(text, env);
    REQUIRE(back.ok());
    CHECK(back.value->same_map(collapse));
    CHECK(serialize_smap(*back.value) == text);

    // unknown object
    Parsed<SimplicialMap> bad = parse_smap("smap f : Nope -> pt\n", env);
    REQUIRE(!bad.ok());
    CHECK(bad.diag.kind == Diagnostic::Kind::dangling_reference);

    // missing image
    Parsed<SimplicialMap> missing =
        parse_smap("smap f : Delta1 -> pt\nsend 0 = 0\n", env);
    REQUIRE(!missing.ok());

    // non-commuting images are an identity violation
    env.ssets["bdI"] = interval_boundary();
    Parsed<SimplicialMap> noncomm = parse_smap(
        "smap f : Delta1 -> Delta1\nsend 0 = 1\nsend 1 = 0\nsend 01 = 01\n", env);
    REQUIRE(!noncomm.ok());
    CHECK(noncomm.diag.kind == Diagnostic::Kind::identity_violation);
}

TEST_CASE("product round trips through the text format")
{
    Product pr = product(standard_simplex(1), standard_simplex(1));
    std::string text = serialize_sset(pr.object);
    Parsed<Presentation> back = parse_sset(text);
    REQUIRE(back.ok());
    CHECK(back.value->same_structure(pr.object));
}

TEST_CASE("trace round trip through the environment")
{
    Presentation pt = terminal_point();
    Presentation h10 = standard_horn(1, 0);
    SimplicialMap att = terminal_map(h10, pt);
    att.rename("att0");
    Environment env;
    env.ssets["pt"] = pt;
    env.ssets["Horn1_0"] = h10;
    env.smaps["att0"] = att;

    AnodyneTrace tr;
    tr.name = "t";
    tr.start = pt;
    tr.stages.push_back({{HornCell{1, 0, att}}});
    std::string text = serialize_trace(tr);
    Parsed<AnodyneTrace> back = parse_trace(text, env);
    REQUIRE(back.ok());
    CHECK(back.value->stages.size() == 1);
    TraceReplay rep = replay_anodyne(*back.value);
    CHECK(rep.accepted);
    CHECK(serialize_trace(*back.value) == text);
}

TEST_CASE("corpus generation is deterministic and validated")
{
    CorpusLimits limits;
    limits.max_dim = 2;
    limits.max_nondegenerate = 50;
    Corpus c1 = generate_corpus(7, limits, Budget(20'000'000));
    Corpus c2 = generate_corpus(7, limits, Budget(20'000'000));
    CHECK(c1.digest() == c2.digest());
    CHECK(!c1.objects.empty());
    CHECK(!c1.fibrations.empty());
    CHECK(!c1.traces.empty());
    for (const Presentation& p : c1.objects) {
        CHECK(validate(p, std::min(p.dim() + 1, 3)).ok());
        CHECK(p.gen_count() <= limits.max_nondegenerate);
        CHECK(p.dim() <= limits.max_dim);
    }
    for (const SimplicialMap& m : c1.maps) CHECK(validate_map(m, 2).ok());

    bool has_d2 = false, has_d3 = false;
    for (const Presentation& p : c1.objects) {
        if (p.name() == "Delta2") has_d2 = true;
        if (p.name() == "Delta3") has_d3 = true;
    }
    CHECK(has_d2);
    CHECK(!has_d3);  // dim limit 2 excludes Delta^3
}

TEST_CASE("full corpus round trips byte-exactly")
{
    CorpusLimits limits;
    Corpus c = generate_corpus(7, limits, Budget(20'000'000));
    Environment env;
    for (const Presentation& p : c.objects) env.ssets[p.name()] = p;
    for (const Presentation& p : c.objects) {
        std::string text = serialize_sset(p);
        Parsed<Presentation> back = parse_sset(text);
        REQUIRE(back.ok());
        CHECK(serialize_sset(*back.value) == text);
    }
    for (const SimplicialMap& m : c.maps) {
        std::string text = serialize_smap(m);
        Parsed<SimplicialMap> back = parse_smap(text, env);
        REQUIRE(back.ok());
        CHECK(serialize_smap(*back.value) == text);
    }
}

TEST_CASE("correction traces serialize as named smap directories")
{
    Presentation d1 = standard_simplex(1);
    SimplicialMap i = inclusion_by_names(standard_boundary(1), d1);
    LiftingSquare sq{i, identity_map(d1), compose(identity_map(d1), i), identity_map(d1)};
    CorrectionTrace tr = solve_boundary_lift_via_correction(sq, Budget(1'000'000));
    REQUIRE(tr.status == MinimalizeStatus::ok);
    Diagnostic d = write_correction_trace("correction_out", tr);
    CHECK(d.ok());
    auto lift_file = read_file("correction_out/lift.smap");
    REQUIRE(lift_file.ok());
    Environment env;
    env.ssets[d1.name()] = d1;
    Parsed<SimplicialMap> back = parse_smap(*lift_file.value, env);
    REQUIRE(back.ok());
    CHECK(back.value->same_map(tr.lift));
}
