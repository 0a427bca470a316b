#include "sset/factorization.hpp"

#include "sset/standard.hpp"

namespace sset {

SoaStage soa_stage(const SimplicialMap& f, const MapFamily& fam, int d, Budget& budget)
{
    SoaStage stage;
    const Presentation& G = f.source();
    const Presentation& Y = f.target();
    MapFamily capped = fam;
    if (fam.kind != MapFamily::Kind::explicit_list) capped.dim = std::min(fam.dim, d);
    TargetCache gcache, ycache;
    gcache.target = &G;
    ycache.target = &Y;

    std::vector<Presentation> horn_parts, cell_parts;
    std::vector<SimplicialMap> incls = capped.inclusions();
    for (const SimplicialMap& incl : incls) {
        const Presentation& S = incl.source();
        const Presentation& T = incl.target();
        if (T.dim() > d) continue;
        int hp = T.dim();
        int hk = -1;
        if (capped.kind == MapFamily::Kind::horns) {
            // recover k from the horn presentation name "Horn<p>_<k>"
            const std::string& nm = S.name();
            hk = std::stoi(nm.substr(nm.find('_') + 1));
        }
        MapSearchProblem tprob;
        tprob.source = &S;
        tprob.target = &G;
        SearchStatus tst = search_maps(tprob, budget, [&](const std::vector<NormalSimplex>& tim) {
            SimplicialMap top("top", incl.source_ptr(), f.source_ptr(), tim);
            MapSearchProblem bprob;
            bprob.source = &T;
            bprob.target = &Y;
            for (GenId s = 0; s < S.gen_count(); ++s) {
                const NormalSimplex& is = incl.image_of(s);
                bprob.constraints[is.base].push_back({is.word, f.apply(top.image_of(s))});
            }
            SearchStatus st = search_maps(bprob, budget, [&](const std::vector<NormalSimplex>& im) {
                stage.squares.push_back(
                    {hp, hk, top, SimplicialMap("bottom", incl.target_ptr(), f.target_ptr(), im)});
                horn_parts.push_back(S);
                cell_parts.push_back(T);
                return true;
            }, &ycache);
            if (st == SearchStatus::truncated) stage.truncated = true;
            return true;
        }, &gcache);
        if (tst == SearchStatus::truncated) stage.truncated = true;
    }

    if (stage.squares.empty()) {
        stage.object = G;
        stage.inclusion = identity_map(G);
        stage.projection = f;
        stage.cells = map_from_empty(G);
        return stage;
    }

    Coproduct ch = coproduct(horn_parts);
    Coproduct cd = coproduct(cell_parts);
    SimplicialMap gen_incl = inclusion_by_names(ch.object, cd.object);
    std::vector<NormalSimplex> attach_images(static_cast<std::size_t>(ch.object.gen_count()));
    std::vector<NormalSimplex> bottom_images(static_cast<std::size_t>(cd.object.gen_count()));
    for (std::size_t q = 0; q < stage.squares.size(); ++q) {
        const SimplicialMap& top = stage.squares[q].top;
        const SimplicialMap& bottom = stage.squares[q].bottom;
        for (GenId g = 0; g < top.source().gen_count(); ++g)
            attach_images[static_cast<std::size_t>(ch.injections[q].image_of(g).base)] =
                top.image_of(g);
        for (GenId g = 0; g < bottom.source().gen_count(); ++g)
            bottom_images[static_cast<std::size_t>(cd.injections[q].image_of(g).base)] =
                bottom.image_of(g);
    }
    SimplicialMap attach_all("attach", ch.object, G, std::move(attach_images));
    SimplicialMap bottoms_all("bottoms", cd.object, Y, std::move(bottom_images));
    Pushout po = pushout(attach_all, gen_incl);
    stage.projection = pushout_mediator(po, f, bottoms_all);
    stage.projection.rename("p");
    stage.inclusion = po.from_left;
    stage.cells = po.from_right;
    stage.cell_injections = cd.injections;
    stage.object = std::move(po.object);
    return stage;
}

Factorization factorize(const SimplicialMap& f, const MapFamily& fam, int N, int d, Budget budget)
{
    Factorization out;
    SimplicialMap cur = f;
    SimplicialMap left = identity_map(f.source());
    for (int n = 1; n <= N; ++n) {
        SoaStage stage = soa_stage(cur, fam, d, budget);
        if (stage.truncated) out.truncated = true;
        left = compose(stage.inclusion, left);
        cur = stage.projection;
        out.stages.push_back(std::move(stage));
    }
    out.left = std::move(left);
    out.left.rename("left");
    out.right = std::move(cur);
    out.right.rename("right");
    if (!compose(out.right, out.left).same_map(f))
        throw error("factorize: composite does not reproduce the input map");
    out.rlp_report = has_rlp(out.right, fam, d, budget);
    if (out.rlp_report.fails()) {
        // a square unsolved at stage N is solved at stage N+1 by its own
        // attached cell, so a finite stage never refutes the limit map;
        // the verdict stays three-valued with the deferred square recorded
        out.rlp_report.verdict = Verdict::inconclusive;
        out.rlp_report.note = "unsolved at stage N=" + std::to_string(N) +
                              "; the enumerated cell solves it at stage N+1";
    }
    out.left_injectivity = is_degreewise_injective(out.left, d + 1);
    if (fam.kind == MapFamily::Kind::horns) {
        AnodyneTrace tr;
        tr.name = "left_" + f.name();
        tr.start = f.source();
        for (const SoaStage& stage : out.stages) {
            TraceStage ts;
            for (const SoaSquare& sq : stage.squares)
                ts.cells.push_back({sq.p, sq.k, sq.top});
            tr.stages.push_back(std::move(ts));
        }
        out.trace = std::move(tr);
    }
    return out;
}

FibrantApproxStage fibrant_approx_staged(const Presentation& X, int N, int d, Budget budget)
{
    Factorization f =
        factorize(terminal_map(X, terminal_point()), MapFamily::horns(d), N, d, budget);
    FibrantApproxStage out;
    out.stages = N;
    out.object = f.right.source();
    out.inclusion = f.left;
    out.trace = std::move(*f.trace);
    out.kan_report = is_kan_complex_up_to(out.object, d, budget);
    return out;
}

CylinderUnion cylinder_union_inclusion(const SimplicialMap& i)
{
    auto inj = is_degreewise_injective(i, i.source().dim() + 1);
    if (!inj.holds()) throw error("cylinder_union_inclusion: map is not degreewise injective");
    const Presentation& B = i.target();
    CylinderUnion out;
    out.cylinder = product(B, interval());
    std::vector<char> in_image(static_cast<std::size_t>(B.gen_count()), 0);
    for (GenId a = 0; a < i.source().gen_count(); ++a)
        in_image[static_cast<std::size_t>(i.image_of(a).base)] = 1;
    std::vector<NormalSimplex> keep;
    for (GenId g = 0; g < out.cylinder.object.gen_count(); ++g) {
        const auto& [u, v] = out.cylinder.components[static_cast<std::size_t>(g)];
        bool in_AxI = in_image[static_cast<std::size_t>(u.base)];
        bool in_BxIdot = out.cylinder.right.gen(v.base).degree == 0;
        if (in_AxI || in_BxIdot) keep.push_back({{}, g});
    }
    Subcomplex sc = subcomplex_generated(out.cylinder.object, keep);
    out.object = std::move(sc.object);
    out.object.rename("cyl_union");
    out.inclusion = std::move(sc.inclusion);
    return out;
}

std::optional<SimplicialMap> induced_stage_map(const SoaStage& stage_f, const SoaStage& stage_f2,
                                               const SimplicialMap& a_prev,
                                               const SimplicialMap& b)
{
    if (stage_f.squares.empty())
        return compose(stage_f2.inclusion, a_prev);
    // locate the transported square of f inside the enumeration for f'
    std::vector<int> match(stage_f.squares.size(), -1);
    for (std::size_t q = 0; q < stage_f.squares.size(); ++q) {
        SimplicialMap top2 = compose(a_prev, stage_f.squares[q].top);
        SimplicialMap bottom2 = compose(b, stage_f.squares[q].bottom);
        for (std::size_t j = 0; j < stage_f2.squares.size(); ++j) {
            if (stage_f2.squares[j].top.same_map(top2) &&
                stage_f2.squares[j].bottom.same_map(bottom2)) {
                match[q] = static_cast<int>(j);
                break;
            }
        }
        if (match[q] < 0) return std::nullopt;
    }
    const Presentation& cd = stage_f.cells.source();
    std::vector<NormalSimplex> v_images(static_cast<std::size_t>(cd.gen_count()));
    for (std::size_t q = 0; q < stage_f.squares.size(); ++q) {
        const SimplicialMap& inj = stage_f.cell_injections[q];
        const SimplicialMap& inj2 = stage_f2.cell_injections[static_cast<std::size_t>(match[q])];
        for (GenId g = 0; g < inj.source().gen_count(); ++g)
            v_images[static_cast<std::size_t>(inj.image_of(g).base)] =
                stage_f2.cells.apply(inj2.image_of(g));
    }
    SimplicialMap v("cells_map", stage_f.cells.source_ptr(),
                    std::make_shared<const Presentation>(stage_f2.object), std::move(v_images));
    SimplicialMap u = compose(stage_f2.inclusion, a_prev);
    Pushout po;
    po.object = stage_f.object;
    po.from_left = stage_f.inclusion;
    po.from_right = stage_f.cells;
    SimplicialMap med = pushout_mediator(po, u, v);
    med.rename("induced");
    return med;
}

}  // namespace sset
