// Acceptance suite: one criterion per test case, one pass/fail line each.
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sset/axioms.hpp"
#include "sset/cli.hpp"
#include "sset/io.hpp"
#include "sset/standard.hpp"

using namespace sset;

namespace {

Budget big() { return Budget(200'000'000); }

Corpus& acceptance_corpus()
{
    static Corpus corpus = [] {
        CorpusLimits limits;
        limits.max_dim = 3;
        limits.max_nondegenerate = 50;
        return generate_corpus(7, limits, big());
    }();
    return corpus;
}

void line(int n, const char* slug, bool pass, const std::string& detail = "")
{
    std::printf("[acceptance] C%d %s: %s%s%s\n", n, slug, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("C1 structural suite")
{
    auto t0 = std::chrono::steady_clock::now();
    const Corpus& corpus = acceptance_corpus();
    int violations = 0;
    for (const Presentation& X : corpus.objects) {
        if (!validate(X, 6).ok()) ++violations;
        for (int n = 0; n <= 6; ++n) {
            std::vector<NormalSimplex> elems = X.enumerate_degree(n);
            std::set<NormalSimplex> uniq(elems.begin(), elems.end());
            if (uniq.size() != elems.size()) ++violations;            // EZ uniqueness
            if (elems.size() != X.count_degree(n)) ++violations;      // complete
        }
    }
    double secs = seconds_since(t0);
    bool pass = violations == 0 && secs < 10.0;
    line(1, "structural-suite", pass,
         std::to_string(corpus.objects.size()) + " objects, degree <= 6, " +
             std::to_string(secs).substr(0, 4) + "s");
    CHECK(violations == 0);
    CHECK(secs < 10.0);
}

TEST_CASE("C2 counting oracles")
{
    bool pass = true;
    // nondegenerate counts of Delta^p against the closed form
    for (int p = 0; p <= 4; ++p) {
        Presentation d = standard_simplex(p);
        for (int n = 0; n <= p; ++n) {
            auto [lo, hi] = d.degree_range(n);
            if (static_cast<std::uint64_t>(hi - lo) != binomial(p + 1, n + 1)) pass = false;
        }
    }
    // top-dimensional generators of Delta^p x Delta^q against the
    // independent componentwise degeneracy-criterion brute force
    for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
            Presentation X = standard_simplex(p);
            Presentation Y = standard_simplex(q);
            int n = p + q;
            std::uint64_t oracle = 0;
            for (const NormalSimplex& a : X.enumerate_degree(n)) {
                for (const NormalSimplex& b : Y.enumerate_degree(n)) {
                    bool degen = false;
                    for (int i = 0; i < n && !degen; ++i)
                        if (X.degeneracy(X.face(a, i), i) == a &&
                            Y.degeneracy(Y.face(b, i), i) == b)
                            degen = true;
                    if (!degen) ++oracle;
                }
            }
            if (oracle != binomial(p + q, p)) pass = false;
            Product pr = product(X, Y);
            auto [lo, hi] = pr.object.degree_range(n);
            if (static_cast<std::uint64_t>(hi - lo) != oracle) pass = false;
        }
    }
    line(2, "counting-oracles", pass);
    CHECK(pass);
}

TEST_CASE("C3 lifting soundness and completeness on 200 squares")
{
    const Corpus& corpus = acceptance_corpus();
    // deterministically collect commuting squares: family members as left
    // legs against corpus maps, then sample 200 with the corpus seed
    std::vector<LiftingSquare> pool;
    Budget budget = big();
    for (const SimplicialMap& incl : MapFamily::horns(2).inclusions()) {
        for (const SimplicialMap& p : corpus.maps) {
            if (p.source().gen_count() > 12 || p.target().gen_count() > 12) continue;
            const Presentation& S = incl.source();
            const Presentation& T = incl.target();
            MapSearchProblem tprob;
            tprob.source = &S;
            tprob.target = &p.source();
            search_maps(tprob, budget, [&](const std::vector<NormalSimplex>& tim) {
                SimplicialMap top("top", incl.source_ptr(), p.source_ptr(), tim);
                MapSearchProblem bprob;
                bprob.source = &T;
                bprob.target = &p.target();
                for (GenId s = 0; s < S.gen_count(); ++s) {
                    const NormalSimplex& is = incl.image_of(s);
                    bprob.constraints[is.base].push_back({is.word, p.apply(top.image_of(s))});
                }
                search_maps(bprob, budget, [&](const std::vector<NormalSimplex>& im) {
                    pool.push_back({incl, p, top,
                                    SimplicialMap("bottom", incl.target_ptr(),
                                                  p.target_ptr(), im)});
                    return pool.size() < 5000;
                });
                return pool.size() < 5000;
            });
        }
    }
    SplitMix64 rng(corpus.seed);
    std::vector<LiftingSquare> sample;
    for (int t = 0; t < 200 && !pool.empty(); ++t)
        sample.push_back(pool[static_cast<std::size_t>(rng.below(pool.size()))]);

    int disagreements = 0, bad_lifts = 0, solved = 0, refuted = 0;
    for (const LiftingSquare& sq : sample) {
        LiftResult fwd = solve_lift(sq, big());
        if (fwd.outcome == LiftOutcome::found) {
            ++solved;
            if (!verify_lift(sq, *fwd.lift)) ++bad_lifts;
        } else if (fwd.outcome == LiftOutcome::none) {
            ++refuted;
            LiftResult rev = solve_lift(sq, big(), true);
            if (rev.outcome != LiftOutcome::none) ++disagreements;
        } else {
            ++disagreements;  // budget must suffice at desk scale
        }
    }
    bool pass = sample.size() == 200 && disagreements == 0 && bad_lifts == 0;
    line(3, "lifting-soundness-completeness", pass,
         std::to_string(solved) + " lifts verified, " + std::to_string(refuted) +
             " refutations re-confirmed under reversed order");
    CHECK(sample.size() == 200);
    CHECK(disagreements == 0);
    CHECK(bad_lifts == 0);
}

TEST_CASE("C4 anodyne traces lift against corpus fibrations")
{
    const Corpus& corpus = acceptance_corpus();
    REQUIRE(corpus.fibration_check_dim == 3);
    int squares = 0;
    bool pass = true;
    for (const AnodyneTrace& tr : corpus.traces) {
        TraceReplay rep = replay_anodyne(tr);
        if (!rep.accepted || static_cast<int>(tr.stages.size()) > 3) {
            pass = false;
            continue;
        }
        LlpReport lr = check_llp_against(rep.inclusion, corpus.fibrations, big());
        for (const LlpEntry& e : lr.entries) squares += e.squares;
        if (!lr.all_solved() || lr.any_truncated()) pass = false;
    }
    line(4, "anodyne-implies-lifts", pass,
         std::to_string(squares) + " squares over " +
             std::to_string(corpus.traces.size()) + " traces x " +
             std::to_string(corpus.fibrations.size()) + " fibrations, all solved");
    CHECK(pass);
    CHECK(squares > 0);
}

TEST_CASE("C5 acyclic-fibration verdict coherence")
{
    const Corpus& corpus = acceptance_corpus();
    int instances = 0, mismatches = 0, witness_failures = 0;
    for (const SimplicialMap& f : corpus.maps) {
        if (f.source().gen_count() > 15 || f.target().gen_count() > 15) continue;
        // the degree-2 lifting verdict is compared against total section and
        // deformation witnesses, so instances are windowed to objects the
        // bound fully covers (defects of 3-dimensional objects live above it)
        if (f.source().dim() > 2 || f.target().dim() > 2) continue;
        AcyclicFibrationReport rep = acyclic_fibration_check(f, 2, big());
        ++instances;
        bool lhs = rep.rlp_boundaries.holds();
        bool rhs = rep.fibration.holds() && rep.construction_verified &&
                   rep.weq_discrete.overall == Verdict::holds;
        if (lhs != rhs) ++mismatches;
        if (lhs) {
            // replay the constructive witnesses
            if (!rep.section.has_value() || !rep.deformation.has_value())
                ++witness_failures;
            else {
                Cylinder cyl = cylinder(f.source());
                SimplicialMap sf = compose(*rep.section, f);
                bool ok = compose(f, *rep.section).same_map(identity_map(f.target())) &&
                          compose(*rep.deformation, cyl.e0).same_map(identity_map(f.source())) &&
                          compose(*rep.deformation, cyl.e1).same_map(sf) &&
                          compose(f, *rep.deformation).same_map(compose(f, cyl.proj));
                if (!ok) ++witness_failures;
            }
        }
    }
    bool pass = mismatches == 0 && witness_failures == 0 && instances > 0;
    line(5, "lemma-2.4-coherence", pass,
         std::to_string(instances) + " maps, verdict sets identical, witnesses replayed");
    CHECK(mismatches == 0);
    CHECK(witness_failures == 0);
}

TEST_CASE("C6 factorization suite on 20 corpus maps")
{
    const Corpus& corpus = acceptance_corpus();
    std::vector<const SimplicialMap*> chosen;
    for (const SimplicialMap& f : corpus.maps) {
        if (f.source().gen_count() > 8 || f.target().gen_count() > 8) continue;
        if (f.source().dim() > 1 || f.target().dim() > 1) continue;
        chosen.push_back(&f);
        if (chosen.size() == 20) break;
    }
    REQUIRE(chosen.size() == 20);
    int horn_ok = 0, boundary_ok = 0, inconclusive_recorded = 0;
    for (const SimplicialMap* f : chosen) {
        Factorization viah = factorize(*f, MapFamily::horns(2), 2, 2, big());
        bool exact = compose(viah.right, viah.left).same_map(*f);
        TraceReplay rep = replay_anodyne(*viah.trace);
        bool replays = rep.accepted && rep.inclusion.same_map(viah.left);
        bool right_ok = viah.rlp_report.verdict != Verdict::fails;
        if (viah.rlp_report.verdict == Verdict::inconclusive && !viah.rlp_report.note.empty())
            ++inconclusive_recorded;
        if (exact && replays && right_ok) ++horn_ok;

        Factorization viab = factorize(*f, MapFamily::boundaries(2), 2, 2, big());
        bool bexact = compose(viab.right, viab.left).same_map(*f);
        if (bexact && viab.left_injectivity.holds()) ++boundary_ok;
    }
    bool pass = horn_ok == 20 && boundary_ok == 20;
    line(6, "factorization-suite", pass,
         "N=2 d=2; " + std::to_string(inconclusive_recorded) +
             " right-leg reports deferred to later stages and recorded");
    CHECK(horn_ok == 20);
    CHECK(boundary_ok == 20);
}

TEST_CASE("C7 minimalization suite")
{
    const Corpus& corpus = acceptance_corpus();
    int ok = 0, total = 0;
    std::string fails;
    auto run_one = [&](const SimplicialMap& f, TruncationWaiver waiver) {
        ++total;
        MinimalizationResult mr;
        try {
            mr = minimal_subfibration(f, 2, big(), waiver);
        } catch (const error&) {
            fails += " " + f.name() + "(no-certificate)";
            return;
        }
        if (mr.status != MinimalizeStatus::ok) {
            fails += " " + f.name() + "(" + mr.diagnostic + ")";
            return;
        }
        const Presentation& X = f.source();
        Cylinder cyl = cylinder(X);
        Cylinder ecyl = cylinder(mr.E);
        SimplicialMap exi =
            product_map(cyl.prod, mr.inclusion, identity_map(cyl.prod.right), ecyl.prod);
        bool identities =
            compose(mr.retraction, mr.inclusion).same_map(identity_map(mr.E)) &&
            compose(mr.homotopy, cyl.e0).same_map(identity_map(X)) &&
            compose(mr.homotopy, cyl.e1).same_map(compose(mr.inclusion, mr.retraction)) &&
            compose(f, mr.homotopy).same_map(compose(f, cyl.proj)) &&
            compose(mr.homotopy, exi).same_map(compose(mr.inclusion, ecyl.proj));
        SimplicialMap phi = compose(f, mr.inclusion);
        bool minimal = is_minimal(phi, 2, big()).holds();
        bool bundle = is_f_bundle(phi, 2, big()).is_bundle;
        if (identities && minimal && bundle) ++ok;
        else fails += " " + f.name() + "(witness-or-bundle)";
    };
    for (const SimplicialMap& f : corpus.fibrations) {
        if (f.source().gen_count() > 12) continue;
        run_one(f, {});
    }
    for (const auto& [f, waiver] : corpus.waived_fibrations) run_one(f, waiver);
    bool pass = ok == total && total > 0;
    line(7, "minimalization-suite", pass,
         std::to_string(ok) + "/" + std::to_string(total) + " fibrations" +
             (fails.empty() ? "" : "; failing:" + fails));
    CHECK(ok == total);
}

TEST_CASE("C8 horn trivialization of twisted discrete bundles")
{
    SplitMix64 rng(7);
    int done = 0, trivialized = 0, cross_checked = 0;
    for (int instance = 0; instance < 30; ++instance) {
        int k = instance % 3;
        int m = 1 + static_cast<int>(rng.below(3));
        Presentation horn = standard_horn(2, k);
        // twisted product: per nondegenerate base edge a random permutation
        Builder b("tw");
        auto [vlo, vhi] = horn.degree_range(0);
        for (GenId v = vlo; v < vhi; ++v)
            for (int j = 0; j < m; ++j)
                b.add_generator(horn.gen(v).name + "_s" + std::to_string(j), 0);
        auto [elo, ehi] = horn.degree_range(1);
        for (GenId e = elo; e < ehi; ++e) {
            std::vector<int> perm(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) perm[static_cast<std::size_t>(j)] = j;
            for (int j = m - 1; j > 0; --j)
                std::swap(perm[static_cast<std::size_t>(j)],
                          perm[static_cast<std::size_t>(rng.below(
                              static_cast<std::uint64_t>(j + 1)))]);
            for (int j = 0; j < m; ++j) {
                std::string nm = horn.gen(e).name + "_s" + std::to_string(j);
                b.add_generator(nm, 1);
                b.set_face(nm, 1, {},
                           horn.gen(horn.face_of_gen(e, 1).base).name + "_s" +
                               std::to_string(j));
                b.set_face(nm, 0, {},
                           horn.gen(horn.face_of_gen(e, 0).base).name + "_s" +
                               std::to_string(perm[static_cast<std::size_t>(j)]));
            }
        }
        Presentation tw = std::move(b).build();
        std::vector<NormalSimplex> images;
        for (GenId g = 0; g < tw.gen_count(); ++g) {
            std::string base = tw.gen(g).name.substr(0, tw.gen(g).name.find("_s"));
            images.push_back({{}, horn.require(base)});
        }
        SimplicialMap pi("pi", tw, horn, std::move(images));
        ++done;
        HornTrivialization triv = trivialize_over_horn(pi, 2, k, big());
        if (triv.status != MinimalizeStatus::ok) continue;
        Product global = product(horn, triv.fiber);
        bool verified = compose(global.proj_left(), triv.iso).same_map(pi) &&
                        compose(triv.inverse, triv.iso).same_map(identity_map(tw)) &&
                        compose(triv.iso, triv.inverse).same_map(identity_map(global.object));
        if (verified) ++trivialized;
        // exhaustive cross-check: enumerate every over-base isomorphism
        SimplicialMap gproj = global.proj_left();
        MapSearchProblem prob;
        prob.source = &tw;
        prob.target = &global.object;
        PostCondition post{&gproj, pi.images()};
        prob.posts.push_back(post);
        int found = 0;
        bool ours_among = false;
        Budget budget = big();
        search_maps(prob, budget, [&](const std::vector<NormalSimplex>& im) {
            SimplicialMap cand("c", tw, global.object, im);
            if (inverse_iso(cand).has_value()) {
                ++found;
                if (cand.images() == triv.iso.images()) ours_among = true;
            }
            return true;
        });
        if (found > 0 && ours_among) ++cross_checked;
    }
    bool pass = done == 30 && trivialized == 30 && cross_checked == 30;
    line(8, "horn-trivialization", pass,
         "30 twisted bundles over all Horn(2,k), fibers of size <= 3");
    CHECK(trivialized == 30);
    CHECK(cross_checked == 30);
}

TEST_CASE("C9 correction procedure cross-check on 20 solvable squares")
{
    // bundles with homotopy-equivalence witnesses: identities and the
    // square bundle over the interval
    std::vector<SimplicialMap> bundles;
    bundles.push_back(identity_map(standard_simplex(1)));
    bundles.push_back(identity_map(standard_simplex(2)));
    Product sqb = product(standard_simplex(1), standard_simplex(1));
    bundles.push_back(sqb.proj_left());

    std::vector<LiftingSquare> solvable;
    Budget budget = big();
    for (const SimplicialMap& p : bundles) {
        for (int n = 0; n <= 2 && solvable.size() < 40; ++n) {
            Presentation bd = standard_boundary(n);
            Presentation dn = standard_simplex(n);
            SimplicialMap incl = inclusion_by_names(bd, dn);
            MapSearchProblem tprob;
            tprob.source = &bd;
            tprob.target = &p.source();
            search_maps(tprob, budget, [&](const std::vector<NormalSimplex>& tim) {
                SimplicialMap top("v", bd, p.source(), tim);
                MapSearchProblem bprob;
                bprob.source = &dn;
                bprob.target = &p.target();
                for (GenId s = 0; s < bd.gen_count(); ++s) {
                    const NormalSimplex& is = incl.image_of(s);
                    bprob.constraints[is.base].push_back({is.word, p.apply(top.image_of(s))});
                }
                search_maps(bprob, budget, [&](const std::vector<NormalSimplex>& im) {
                    LiftingSquare sq{incl, p, top,
                                     SimplicialMap("u", dn, p.target(), im)};
                    if (solve_lift(sq, big()).outcome == LiftOutcome::found)
                        solvable.push_back(std::move(sq));
                    return solvable.size() < 40;
                });
                return solvable.size() < 40;
            });
        }
    }
    SplitMix64 rng(7);
    int agreements = 0;
    for (int t = 0; t < 20 && !solvable.empty(); ++t) {
        const LiftingSquare& sq =
            solvable[static_cast<std::size_t>(rng.below(solvable.size()))];
        CorrectionTrace tr = solve_boundary_lift_via_correction(sq, big());
        LiftResult exhaustive = solve_lift(sq, big());
        bool agree = tr.status == MinimalizeStatus::ok &&
                     exhaustive.outcome == LiftOutcome::found &&
                     verify_lift(sq, tr.lift) && verify_lift(sq, *exhaustive.lift);
        if (agree) ++agreements;
    }
    bool pass = agreements == 20;
    line(9, "correction-cross-check", pass,
         std::to_string(agreements) + "/20 squares: correction and exhaustive "
                                      "search agree, both lifts verify");
    CHECK(agreements == 20);
}

TEST_CASE("C10 CLI and report")
{
    const Corpus& corpus = acceptance_corpus();
    // byte-exact round trips across the full corpus
    Environment env;
    for (const Presentation& p : corpus.objects) env.ssets[p.name()] = p;
    bool roundtrip = true;
    for (const Presentation& p : corpus.objects) {
        std::string text = serialize_sset(p);
        Parsed<Presentation> back = parse_sset(text);
        if (!back.ok() || serialize_sset(*back.value) != text) roundtrip = false;
    }
    for (const SimplicialMap& m : corpus.maps) {
        std::string text = serialize_smap(m);
        Parsed<SimplicialMap> back = parse_smap(text, env);
        if (!back.ok() || serialize_smap(*back.value) != text) roundtrip = false;
    }

    // verify-axioms exits 0 or 2 (never 1) and the JSON validates
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int rc = cli_run({"verify-axioms", "--seed", "7", "--dim", "2", "--report",
                      "acceptance_report.json"});
    std::cout.rdbuf(old);
    bool exit_ok = rc == 0 || rc == 2;

    bool schema_ok = false;
    auto bytes = read_file("acceptance_report.json");
    if (bytes.ok()) {
        auto j = nlohmann::json::parse(*bytes.value, nullptr, false);
        schema_ok = !j.is_discarded() && j["schema"] == 1 && j["suite"] == "mc-axioms" &&
                    j.contains("tool_version") && j.contains("inputs") &&
                    j["checks"].is_array() && !j["checks"].empty();
        for (const auto& c : j["checks"])
            if (!c.contains("id") || !c.contains("verdict")) schema_ok = false;
    }
    bool pass = roundtrip && exit_ok && schema_ok;
    line(10, "cli-and-report", pass,
         "round-trip byte-exact; verify-axioms exit " + std::to_string(rc) +
             "; schema valid");
    CHECK(roundtrip);
    CHECK(exit_ok);
    CHECK(schema_ok);
}
