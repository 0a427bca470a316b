#include "sset/lifting.hpp"

#include "sset/standard.hpp"

namespace sset {

bool square_commutes(const LiftingSquare& sq)
{
    if (!sq.i.source().same_structure(sq.top.source())) return false;
    if (!sq.i.target().same_structure(sq.bottom.source())) return false;
    if (!sq.top.target().same_structure(sq.p.source())) return false;
    if (!sq.bottom.target().same_structure(sq.p.target())) return false;
    return compose(sq.p, sq.top).same_map(compose(sq.bottom, sq.i));
}

LiftResult solve_lift(const LiftingSquare& sq, Budget budget, bool reversed,
                      TargetCache* cache)
{
    if (!square_commutes(sq)) throw error("solve_lift: square does not commute");
    const Presentation& B = sq.i.target();
    const Presentation& X = sq.p.source();
    MapSearchProblem prob;
    prob.source = &B;
    prob.target = &X;
    prob.reversed = reversed;
    // diagonal o i = top, one word constraint per A-generator
    const Presentation& A = sq.i.source();
    for (GenId a = 0; a < A.gen_count(); ++a) {
        const NormalSimplex& ia = sq.i.image_of(a);
        prob.constraints[ia.base].push_back({ia.word, sq.top.image_of(a)});
    }
    // p o diagonal = bottom
    prob.posts.push_back({&sq.p, sq.bottom.images()});

    LiftResult res;
    std::optional<SimplicialMap> found;
    SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& im) {
        found = SimplicialMap("lift", sq.i.target_ptr(), sq.p.source_ptr(), im);
        return false;
    }, cache);
    res.explored = budget.used;
    if (found.has_value()) {
        res.outcome = LiftOutcome::found;
        res.lift = std::move(found);
        res.exhaustive = false;
    } else if (st == SearchStatus::complete) {
        res.outcome = LiftOutcome::none;
        res.exhaustive = true;
    } else {
        res.outcome = LiftOutcome::inconclusive;
    }
    return res;
}

bool verify_lift(const LiftingSquare& sq, const SimplicialMap& diagonal)
{
    return compose(diagonal, sq.i).same_map(sq.top) &&
           compose(sq.p, diagonal).same_map(sq.bottom);
}

MapFamily MapFamily::horns(int dim)
{
    MapFamily f;
    f.kind = Kind::horns;
    f.dim = dim;
    return f;
}

MapFamily MapFamily::boundaries(int dim)
{
    MapFamily f;
    f.kind = Kind::boundaries;
    f.dim = dim;
    return f;
}

MapFamily MapFamily::explicit_list(std::vector<SimplicialMap> members)
{
    MapFamily f;
    f.kind = Kind::explicit_list;
    f.members = std::move(members);
    return f;
}

std::vector<SimplicialMap> MapFamily::inclusions() const
{
    if (kind == Kind::explicit_list) return members;
    std::vector<SimplicialMap> out;
    if (kind == Kind::horns) {
        for (int p = 1; p <= dim; ++p)
            for (int k = 0; k <= p; ++k)
                out.push_back(inclusion_by_names(standard_horn(p, k), standard_simplex(p)));
    } else {
        for (int n = 0; n <= dim; ++n)
            out.push_back(inclusion_by_names(standard_boundary(n), standard_simplex(n)));
    }
    return out;
}

Checked<LiftingSquare> has_rlp(const SimplicialMap& p, const MapFamily& fam, int d, Budget budget)
{
    Checked<LiftingSquare> res;
    res.bound = d;
    MapFamily capped = fam;
    if (fam.kind != MapFamily::Kind::explicit_list) capped.dim = std::min(fam.dim, d);
    bool truncated = false;

    TargetCache xcache, ycache;
    xcache.target = &p.source();
    ycache.target = &p.target();
    for (const SimplicialMap& incl : capped.inclusions()) {
        const Presentation& S = incl.source();
        const Presentation& T = incl.target();
        if (T.dim() > d) continue;
        const PresPtr& tp = incl.target_ptr();
        // stream tops and bottoms; never materialize the square lists
        MapSearchProblem tprob;
        tprob.source = &S;
        tprob.target = &p.source();
        SearchStatus tst = search_maps(tprob, budget, [&](const std::vector<NormalSimplex>& tim) {
            SimplicialMap top("top", incl.source_ptr(), p.source_ptr(), tim);
            MapSearchProblem bprob;
            bprob.source = &T;
            bprob.target = &p.target();
            for (GenId s = 0; s < S.gen_count(); ++s) {
                const NormalSimplex& is = incl.image_of(s);
                bprob.constraints[is.base].push_back({is.word, p.apply(top.image_of(s))});
            }
            SearchStatus bst = search_maps(bprob, budget, [&](const std::vector<NormalSimplex>& im) {
                LiftingSquare sq{incl, p, top, SimplicialMap("bottom", tp, p.target_ptr(), im)};
                LiftResult lr = solve_lift(sq, budget, false, &xcache);
                if (lr.outcome == LiftOutcome::none) {
                    res.verdict = Verdict::fails;
                    res.witness = std::move(sq);
                    return false;
                }
                if (lr.outcome == LiftOutcome::inconclusive) truncated = true;
                return true;
            }, &ycache);
            if (bst == SearchStatus::truncated) truncated = true;
            return !res.witness.has_value();
        }, &xcache);
        if (tst == SearchStatus::truncated) truncated = true;
        if (res.witness.has_value()) return res;
    }
    res.verdict = truncated ? Verdict::inconclusive : Verdict::holds;
    return res;
}

Checked<LiftingSquare> is_kan_fibration_up_to(const SimplicialMap& f, int d, Budget budget)
{
    return has_rlp(f, MapFamily::horns(d), d, budget);
}

Checked<LiftingSquare> is_kan_complex_up_to(const Presentation& X, int d, Budget budget)
{
    return is_kan_fibration_up_to(terminal_map(X, terminal_point()), d, budget);
}

TraceReplay replay_anodyne(const AnodyneTrace& tr)
{
    TraceReplay rep;
    Presentation cur = tr.start;
    SimplicialMap incl = identity_map(cur);
    for (std::size_t s = 0; s < tr.stages.size(); ++s) {
        const TraceStage& stage = tr.stages[s];
        std::vector<Presentation> horns, simplices;
        for (const HornCell& cell : stage.cells) {
            if (cell.p < 1 || cell.k < 0 || cell.k > cell.p) {
                rep.bad_stage = static_cast<int>(s);
                rep.diagnostic = "horn parameters out of range";
                return rep;
            }
            Presentation h = standard_horn(cell.p, cell.k);
            if (!cell.attach.source().same_structure(h)) {
                rep.bad_stage = static_cast<int>(s);
                rep.diagnostic = "attaching map source is not the declared horn";
                return rep;
            }
            if (!cell.attach.target().same_structure(cur)) {
                rep.bad_stage = static_cast<int>(s);
                rep.diagnostic = "attaching map target is not the current stage object";
                return rep;
            }
            if (!validate_map(cell.attach).ok()) {
                rep.bad_stage = static_cast<int>(s);
                rep.diagnostic = "attaching map is not simplicial";
                return rep;
            }
            horns.push_back(std::move(h));
            simplices.push_back(standard_simplex(cell.p));
        }
        if (stage.cells.empty()) continue;
        Coproduct ch = coproduct(horns);
        Coproduct cd = coproduct(simplices);
        SimplicialMap gen_incl = inclusion_by_names(ch.object, cd.object);
        // combined attaching map out of the horn coproduct
        std::vector<NormalSimplex> images(static_cast<std::size_t>(ch.object.gen_count()));
        for (std::size_t t = 0; t < stage.cells.size(); ++t) {
            const SimplicialMap& inj = ch.injections[t];
            const SimplicialMap& att = stage.cells[t].attach;
            for (GenId g = 0; g < att.source().gen_count(); ++g)
                images[static_cast<std::size_t>(inj.image_of(g).base)] = att.image_of(g);
        }
        SimplicialMap attach_all("attach", ch.object, cur, std::move(images));
        Pushout po = pushout(attach_all, gen_incl);
        rep.stage_inclusions.push_back(po.from_left);
        rep.stage_cells.push_back(po.from_right);
        rep.stage_cell_injections.push_back(cd.injections);
        incl = compose(po.from_left, incl);
        cur = po.object;
        rep.stage_objects.push_back(cur);
    }
    rep.accepted = true;
    rep.result = std::move(cur);
    rep.inclusion = std::move(incl);
    return rep;
}

bool LlpReport::all_solved() const
{
    for (const LlpEntry& e : entries)
        if (e.solved != e.squares || !e.unsolved.empty()) return false;
    return true;
}

bool LlpReport::any_truncated() const
{
    for (const LlpEntry& e : entries)
        if (e.truncated) return true;
    return false;
}

LlpReport check_llp_against(const SimplicialMap& i,
                            const std::vector<SimplicialMap>& fibrations, Budget budget)
{
    LlpReport report;
    const Presentation& A = i.source();
    const Presentation& B = i.target();
    for (const SimplicialMap& p : fibrations) {
        LlpEntry entry;
        entry.fibration = p.name();
        TargetCache xcache, ycache;
        xcache.target = &p.source();
        ycache.target = &p.target();
        MapSearchProblem tprob;
        tprob.source = &A;
        tprob.target = &p.source();
        SearchStatus tst = search_maps(tprob, budget, [&](const std::vector<NormalSimplex>& tim) {
            SimplicialMap top("top", i.source_ptr(), p.source_ptr(), tim);
            MapSearchProblem bprob;
            bprob.source = &B;
            bprob.target = &p.target();
            for (GenId a = 0; a < A.gen_count(); ++a) {
                const NormalSimplex& ia = i.image_of(a);
                bprob.constraints[ia.base].push_back({ia.word, p.apply(top.image_of(a))});
            }
            SearchStatus bst = search_maps(bprob, budget, [&](const std::vector<NormalSimplex>& im) {
                LiftingSquare sq{i, p, top,
                                 SimplicialMap("bottom", i.target_ptr(), p.target_ptr(), im)};
                ++entry.squares;
                LiftResult lr = solve_lift(sq, budget, false, &xcache);
                if (lr.outcome == LiftOutcome::found) ++entry.solved;
                else if (lr.outcome == LiftOutcome::none) entry.unsolved.push_back(sq);
                else entry.truncated = true;
                return true;
            }, &ycache);
            if (bst == SearchStatus::truncated) entry.truncated = true;
            return true;
        }, &xcache);
        if (tst == SearchStatus::truncated) entry.truncated = true;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace sset
