#include "sset/axioms.hpp"

#include <chrono>

#include <json.hpp>

#include "sset/io.hpp"
#include "sset/standard.hpp"

namespace sset {

Verdict Report::overall() const
{
    bool any_inconclusive = false;
    for (const CheckResult& c : checks) {
        if (c.verdict == Verdict::fails) return Verdict::fails;
        if (c.verdict == Verdict::inconclusive) any_inconclusive = true;
    }
    return any_inconclusive ? Verdict::inconclusive : Verdict::holds;
}

std::string Report::to_json(bool with_timings) const
{
    nlohmann::ordered_json j;
    j["schema"] = schema;
    j["suite"] = suite;
    j["tool_version"] = tool_version;
    j["overall"] = to_string(overall());
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["verdict"] = to_string(c.verdict);
        if (c.bound >= 0) e["bound"] = c.bound;
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (with_timings) e["ms"] = c.ms;
        j["checks"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

std::string square_witness(const LiftingSquare& sq)
{
    return "square i=" + sq.i.name() + " p=" + sq.p.name() + " top=[" +
           serialize_smap(sq.top) + "] bottom=[" + serialize_smap(sq.bottom) + "]";
}

// MC1: universal properties of the finite (co)limits on corpus instances
void check_mc1(const Corpus& corpus, const McConfig& cfg, Report& rep)
{
    Budget budget = cfg.budget;
    Timer t;
    CheckResult c;
    c.id = "MC1.limits";
    c.bound = cfg.dim;
    std::string fail;

    // initial and terminal objects
    const Presentation* pt = corpus.object("pt");
    const Presentation* d1 = corpus.object("Delta1");
    for (const Presentation& X : corpus.objects) {
        if (enumerate_maps(empty_sset(), X, budget).maps.size() != 1)
            fail = "initial object: map count from empty wrong at " + X.name();
        if (pt != nullptr && enumerate_maps(X, *pt, budget).maps.size() != 1 && !X.empty())
            fail = "terminal object: map count into pt wrong at " + X.name();
    }

    // product universal property: pairings exist and are unique
    if (d1 != nullptr && pt != nullptr) {
        Product pr = product(*d1, *d1);
        SimplicialMap pl = pr.proj_left(), prr = pr.proj_right();
        MapList fs = enumerate_maps(*d1, *d1, budget);
        for (const SimplicialMap& f : fs.maps) {
            for (const SimplicialMap& g : fs.maps) {
                SimplicialMap med = pr.pairing(f, g);
                if (!compose(pl, med).same_map(f) || !compose(prr, med).same_map(g))
                    fail = "product pairing equations fail";
                // uniqueness by exhaustive count
                int count = 0;
                MapSearchProblem prob;
                prob.source = d1;
                prob.target = &pr.object;
                PostCondition c1{&pl, f.images()}, c2{&prr, g.images()};
                prob.posts = {c1, c2};
                search_maps(prob, budget, [&](const std::vector<NormalSimplex>&) {
                    ++count;
                    return true;
                });
                if (count != 1) fail = "product mediator not unique";
            }
        }
    }

    // pushout universal property on the circle instance
    if (d1 != nullptr && pt != nullptr) {
        Presentation bd = interval_boundary();
        SimplicialMap incl = inclusion_by_names(bd, *d1);
        Pushout po = pushout(incl, incl);
        SimplicialMap u = terminal_map(*d1, *pt);
        SimplicialMap med = pushout_mediator(po, u, u);
        if (!compose(med, po.from_left).same_map(u) ||
            !compose(med, po.from_right).same_map(u))
            fail = "pushout mediator equations fail";
        // exhaustive cocone check in low degrees: all maps from the pushout
        // are determined by their restrictions
        MapList all = enumerate_maps(po.object, *d1, budget);
        for (const SimplicialMap& m : all.maps) {
            SimplicialMap mu = compose(m, po.from_left);
            SimplicialMap mv = compose(m, po.from_right);
            int count = 0;
            for (const SimplicialMap& m2 : all.maps)
                if (compose(m2, po.from_left).same_map(mu) &&
                    compose(m2, po.from_right).same_map(mv))
                    ++count;
            if (count != 1) fail = "pushout cocone has a non-unique mediator";
        }
    }

    // pullback universal property on a product projection instance
    if (d1 != nullptr) {
        const Presentation* s2 = corpus.object("disc2");
        if (s2 != nullptr) {
            Product pr = product(*d1, *s2);
            Pullback pb = pullback(pr.proj_left(), identity_map(*d1));
            SimplicialMap med =
                pullback_mediator(pb, identity_map(pr.object), pr.proj_left());
            if (!compose(pb.to_left, med).same_map(identity_map(pr.object)))
                fail = "pullback mediator equations fail";
        }
    }

    c.verdict = fail.empty() ? Verdict::holds : Verdict::fails;
    c.witness = fail;
    c.ms = t.ms();
    rep.checks.push_back(std::move(c));
}

// MC2: verdict-level two-of-three over the discrete-target family
void check_mc2(const Corpus& corpus, const McConfig& cfg, Report& rep)
{
    Budget budget = cfg.budget;
    Timer t;
    CheckResult c;
    c.id = "MC2.two_of_three";
    c.bound = cfg.dim;
    std::vector<KanTarget> targets;
    for (int sz = 1; sz <= 3; ++sz)
        targets.push_back(certify_kan(discrete_set(sz), cfg.dim + 1, budget));
    auto weq = [&](const SimplicialMap& f) {
        return is_weak_equivalence_against(f, targets, budget).overall;
    };
    std::string fail;
    int instances = 0;
    for (const SimplicialMap& f : corpus.maps) {
        for (const SimplicialMap& g : corpus.maps) {
            if (!f.target().same_structure(g.source())) continue;
            if (f.source().dim() > cfg.dim || g.target().dim() > cfg.dim) continue;
            ++instances;
            Verdict vf = weq(f), vg = weq(g), vgf = weq(compose(g, f));
            int holds = (vf == Verdict::holds) + (vg == Verdict::holds) +
                        (vgf == Verdict::holds);
            int fails = (vf == Verdict::fails) + (vg == Verdict::fails) +
                        (vgf == Verdict::fails);
            if (holds == 2 && fails == 1)
                fail = "two-of-three violated at " + f.name() + " ; " + g.name();
        }
    }
    c.detail = std::to_string(instances) + " composable pairs";
    c.verdict = fail.empty() ? Verdict::holds : Verdict::fails;
    c.witness = fail;
    c.ms = t.ms();
    rep.checks.push_back(std::move(c));
}

// MC3: retract instances inherit the verified properties
void check_mc3(const Corpus& corpus, const McConfig& cfg, Report& rep)
{
    Budget budget = cfg.budget;
    Timer t;
    CheckResult c;
    c.id = "MC3.retracts";
    c.bound = cfg.dim;
    std::string fail;
    const Presentation* pt = corpus.object("pt");
    const Presentation* d1 = corpus.object("Delta1");
    if (pt != nullptr && d1 != nullptr) {
        // pt is a retract of Delta1 over the collapse maps: f = id_pt is a
        // retract of g = collapse
        SimplicialMap i("i", *pt, *d1, {NormalSimplex{{}, d1->require("0")}});
        SimplicialMap r = terminal_map(*d1, *pt);
        SimplicialMap g = terminal_map(*d1, *pt);
        SimplicialMap f = identity_map(*pt);
        if (!compose(r, i).same_map(f)) fail = "retract data does not compose";
        // property transfer at verdict level
        std::vector<KanTarget> targets;
        for (int sz = 1; sz <= 3; ++sz)
            targets.push_back(certify_kan(discrete_set(sz), cfg.dim + 1, budget));
        Verdict wg = is_weak_equivalence_against(g, targets, budget).overall;
        Verdict wf = is_weak_equivalence_against(f, targets, budget).overall;
        if (wg == Verdict::holds && wf != Verdict::holds)
            fail = "weak equivalence not inherited by the retract";
        Checked<LiftingSquare> fg = is_kan_fibration_up_to(g, cfg.dim, budget);
        Checked<LiftingSquare> ff = is_kan_fibration_up_to(f, cfg.dim, budget);
        if (fg.holds() && !ff.holds()) fail = "fibration not inherited by the retract";
        // cofibration case: Horn(1,0) -> Delta1 is a retract of itself
        auto inj_g = is_degreewise_injective(
            inclusion_by_names(standard_horn(1, 0), *d1), cfg.dim);
        if (!inj_g.holds()) fail = "cofibration retract instance failed";
    }
    c.verdict = fail.empty() ? Verdict::holds : Verdict::fails;
    c.witness = fail;
    c.ms = t.ms();
    rep.checks.push_back(std::move(c));
}

// MC4: lifting instances pairing corpus (acyclic) cofibrations with corpus
// (acyclic) fibrations
void check_mc4(const Corpus& corpus, const McConfig& cfg, Report& rep)
{
    Budget budget = cfg.budget;
    {
        Timer t;
        CheckResult c;
        c.id = "MC4.i.cofibration_vs_acyclic_fibration";
        c.bound = cfg.dim;
        std::string fail;
        int squares = 0;
        // corpus acyclic fibrations: verified RLP against boundaries
        std::vector<SimplicialMap> acyclic;
        for (const SimplicialMap& p : corpus.fibrations)
            if (has_rlp(p, MapFamily::boundaries(cfg.dim), cfg.dim, budget).holds())
                acyclic.push_back(p);
        for (const SimplicialMap& i : corpus.maps) {
            if (!is_degreewise_injective(i, cfg.dim).holds()) continue;
            if (i.target().dim() > cfg.dim || i.source().dim() > cfg.dim) continue;
            LlpReport lr = check_llp_against(i, acyclic, budget);
            for (const LlpEntry& e : lr.entries) squares += e.squares;
            if (!lr.all_solved()) {
                for (const LlpEntry& e : lr.entries)
                    if (!e.unsolved.empty())
                        fail = "left=" + i.name() + " right=" + e.fibration + " " +
                               square_witness(e.unsolved.front());
            }
        }
        c.detail = std::to_string(squares) + " squares";
        c.verdict = fail.empty() ? Verdict::holds : Verdict::fails;
        c.witness = fail;
        c.ms = t.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        Timer t;
        CheckResult c;
        c.id = "MC4.ii.anodyne_vs_fibration";
        c.bound = cfg.dim;
        std::string fail;
        int squares = 0;
        for (const AnodyneTrace& tr : corpus.traces) {
            TraceReplay replay = replay_anodyne(tr);
            if (!replay.accepted) {
                fail = "trace " + tr.name + " failed to replay";
                continue;
            }
            LlpReport lr = check_llp_against(replay.inclusion, corpus.fibrations, budget);
            for (const LlpEntry& e : lr.entries) squares += e.squares;
            if (!lr.all_solved()) {
                fail = "anodyne trace " + tr.name + " has an unsolved square";
                for (const LlpEntry& e : lr.entries)
                    if (!e.unsolved.empty()) fail += ": " + square_witness(e.unsolved.front());
            }
        }
        c.detail = std::to_string(squares) + " squares";
        c.verdict = fail.empty() ? Verdict::holds : Verdict::fails;
        c.witness = fail;
        c.ms = t.ms();
        rep.checks.push_back(std::move(c));
    }
}

// MC5: both staged factorizations with leg-class verification
void check_mc5(const Corpus& corpus, const McConfig& cfg, Report& rep)
{
    Budget budget = cfg.budget;
    Timer t;
    CheckResult c;
    c.id = "MC5.factorizations";
    c.bound = cfg.dim;
    std::string fail;
    bool any_inconclusive = false;
    int done = 0;
    for (const SimplicialMap& f : corpus.maps) {
        // staged horn factorizations grow combinatorially on 2-dimensional
        // inputs; the suite samples the 1-dimensional corpus family
        if (f.source().gen_count() > 8 || f.target().gen_count() > 8) continue;
        if (f.source().dim() > 1 || f.target().dim() > 1) continue;
        Factorization viah =
            factorize(f, MapFamily::horns(cfg.dim), cfg.stages, cfg.dim, budget);
        if (!compose(viah.right, viah.left).same_map(f)) fail = "horn composite broken";
        TraceReplay replay = replay_anodyne(*viah.trace);
        if (!replay.accepted || !replay.inclusion.same_map(viah.left))
            fail = "horn left leg does not replay at " + f.name();
        if (viah.rlp_report.fails())
            fail = "horn right leg RLP fails at " + f.name();
        if (viah.rlp_report.verdict == Verdict::inconclusive) any_inconclusive = true;
        Factorization viab =
            factorize(f, MapFamily::boundaries(cfg.dim), cfg.stages, cfg.dim, budget);
        if (!compose(viab.right, viab.left).same_map(f)) fail = "boundary composite broken";
        if (!viab.left_injectivity.holds())
            fail = "boundary left leg not degreewise injective at " + f.name();
        if (viab.rlp_report.verdict == Verdict::inconclusive) any_inconclusive = true;
        ++done;
    }
    c.detail = std::to_string(done) + " maps factored both ways (N=" +
               std::to_string(cfg.stages) + ", d=" + std::to_string(cfg.dim) + ")";
    if (!fail.empty()) c.verdict = Verdict::fails;
    else c.verdict = any_inconclusive ? Verdict::inconclusive : Verdict::holds;
    c.witness = fail;
    c.ms = t.ms();
    rep.checks.push_back(std::move(c));
}

}  // namespace

Report verify_mc_suite(const Corpus& corpus, const McConfig& cfg)
{
    Report rep;
    rep.suite = "mc-axioms";
    rep.tool_version = "0.1.0";
    rep.inputs["corpus"] = corpus.digest();
    rep.inputs["seed"] = std::to_string(corpus.seed);
    rep.inputs["dim"] = std::to_string(cfg.dim);
    rep.inputs["stages"] = std::to_string(cfg.stages);
    check_mc1(corpus, cfg, rep);
    check_mc2(corpus, cfg, rep);
    check_mc3(corpus, cfg, rep);
    check_mc4(corpus, cfg, rep);
    check_mc5(corpus, cfg, rep);
    return rep;
}

}  // namespace sset
