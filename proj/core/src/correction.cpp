#include "sset/minimal.hpp"
#include "sset/standard.hpp"

namespace sset {

namespace {

NormalSimplex std_part(const Product& pr, GenId g, bool left)
{
    const auto& [a, b] = pr.components[static_cast<std::size_t>(g)];
    return left ? a : b;
}

// tuple of the left (standard-simplex) coordinate of a product generator
std::vector<int> left_tuple(const Product& pr, GenId g)
{
    return simplex_to_tuple(pr.left, std_part(pr, g, true));
}

bool surjective_onto(const std::vector<int>& tuple, int n)
{
    std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
    for (int v : tuple) hit[static_cast<std::size_t>(v)] = 1;
    for (char c : hit)
        if (!c) return false;
    return true;
}

}  // namespace

AcyclicFibrationReport acyclic_fibration_check(const SimplicialMap& f, int d, Budget budget)
{
    AcyclicFibrationReport rep;
    const Presentation& X = f.source();
    const Presentation& Y = f.target();

    rep.rlp_boundaries = has_rlp(f, MapFamily::boundaries(d), d, budget);
    rep.fibration = has_rlp(f, MapFamily::horns(d), d, budget);
    std::vector<KanTarget> discrete_targets;
    int needed = std::max(X.dim(), Y.dim()) + 1;
    for (int sz = 1; sz <= 3; ++sz)
        discrete_targets.push_back(certify_kan(discrete_set(sz), std::max(needed, 1), budget));
    rep.weq_discrete = is_weak_equivalence_against(f, discrete_targets, budget);
    rep.verdict = rep.rlp_boundaries.verdict;

    // (<=) construct the section and the vertical deformation from the RLP
    if (rep.rlp_boundaries.holds()) {
        MapSearchProblem sprob;
        sprob.source = &Y;
        sprob.target = &X;
        PostCondition spost;
        spost.q = &f;
        spost.expected = identity_map(Y).images();
        sprob.posts.push_back(std::move(spost));
        SearchResult sres = find_first_map(sprob, budget, "s");
        if (sres.map.has_value()) {
            rep.section = sres.map;
            Cylinder cyl = cylinder(X);
            SimplicialMap sf = compose(*rep.section, f);
            MapSearchProblem hprob;
            hprob.source = &cyl.prod.object;
            hprob.target = &X;
            for (GenId x = 0; x < X.gen_count(); ++x) {
                hprob.pin(cyl.e0.image_of(x).base, NormalSimplex{{}, x});
                hprob.pin(cyl.e1.image_of(x).base, sf.image_of(x));
            }
            PostCondition hpost;
            hpost.q = &f;
            std::vector<NormalSimplex> expected;
            for (GenId g = 0; g < cyl.prod.object.gen_count(); ++g)
                expected.push_back(
                    f.apply(cyl.prod.components[static_cast<std::size_t>(g)].first));
            hpost.expected = std::move(expected);
            hprob.posts.push_back(std::move(hpost));
            SearchResult hres = find_first_map(hprob, budget, "h");
            if (hres.map.has_value()) {
                rep.deformation = hres.map;
                rep.construction_verified =
                    compose(f, *rep.section).same_map(identity_map(Y)) &&
                    compose(*rep.deformation, cyl.e0).same_map(identity_map(X)) &&
                    compose(*rep.deformation, cyl.e1).same_map(sf) &&
                    compose(f, *rep.deformation).same_map(compose(f, cyl.proj));
            }
        }
        if (!rep.construction_verified) rep.status = MinimalizeStatus::insufficient_fillers;
    }

    // (=>) minimal subfibration, fiber tables, and the prism construction
    if (rep.fibration.holds() && !Y.empty()) {
        MinimalizationResult mr = minimal_subfibration(f, d, budget);
        rep.status = mr.status;
        if (mr.status == MinimalizeStatus::ok) {
            SimplicialMap phi = compose(f, mr.inclusion);
            rep.minimal_projection_iso = inverse_iso(phi).has_value();
            // minimal fiber over the least vertex
            Presentation pt = terminal_point();
            GenId v0 = Y.degree_range(0).first;
            SimplicialMap vmap("v", pt, Y, {NormalSimplex{{}, v0}});
            Presentation M = pullback(phi, vmap).object;
            M.rename("M");
            rep.fiber_trivial = true;
            auto [mlo, mhi] = M.degree_range(0);
            for (GenId m = mlo; m < mhi; ++m) {
                for (int n = 0; n <= d; ++n) {
                    HomotopyGroupReport table = fiber_homotopy_table(M, m, n, budget);
                    if (!table.trivial) rep.fiber_trivial = false;
                    rep.fiber_tables.push_back(std::move(table));
                }
            }
            // prism construction solving boundary squares (when phi is iso)
            if (rep.minimal_projection_iso) {
                SimplicialMap phi_inv = *inverse_iso(phi);
                for (int n = 0; n <= d; ++n) {
                    Presentation bd = standard_boundary(n);
                    Presentation dn = standard_simplex(n);
                    SimplicialMap incl = inclusion_by_names(bd, dn);
                    MapList tops = enumerate_maps(bd, X, budget);
                    for (const SimplicialMap& v_top : tops.maps) {
                        MapSearchProblem bprob;
                        bprob.source = &dn;
                        bprob.target = &Y;
                        for (GenId s = 0; s < bd.gen_count(); ++s) {
                            const NormalSimplex& is = incl.image_of(s);
                            bprob.constraints[is.base].push_back(
                                {is.word, f.apply(v_top.image_of(s))});
                        }
                        std::vector<SimplicialMap> bottoms;
                        search_maps(bprob, budget, [&](const std::vector<NormalSimplex>& im) {
                            bottoms.emplace_back("u", dn, Y, im);
                            return true;
                        });
                        for (const SimplicialMap& u_bot : bottoms) {
                            ++rep.prism_squares;
                            // canonical lifting of the bottom through phi
                            SimplicialMap canon =
                                compose(mr.inclusion, compose(phi_inv, u_bot));
                            Product prism = product(dn, interval());
                            Cylinder xcyl = cylinder(X);
                            MapSearchProblem pprob;
                            pprob.source = &prism.object;
                            pprob.target = &X;
                            PostCondition ppost;
                            ppost.q = &f;
                            for (GenId g = 0; g < prism.object.gen_count(); ++g) {
                                const auto& [u, t] =
                                    prism.components[static_cast<std::size_t>(g)];
                                std::vector<int> tup = left_tuple(prism, g);
                                ppost.expected.push_back(
                                    u_bot.apply(std_part(prism, g, true)));
                                if (!surjective_onto(tup, n)) {
                                    // boundary stays on the retracting homotopy
                                    NormalSimplex vz =
                                        v_top.apply(tuple_to_simplex(bd, tup));
                                    pprob.pin(g, mr.homotopy.apply(
                                                     xcyl.prod.pair(vz, t)));
                                } else if (prism.right.gen(t.base).degree == 0 &&
                                           prism.right.gen(t.base).name == "1") {
                                    pprob.pin(g, canon.apply(std_part(prism, g, true)));
                                }
                            }
                            pprob.posts.push_back(std::move(ppost));
                            SearchResult pres = find_first_map(pprob, budget, "prism");
                            if (!pres.map.has_value()) continue;
                            // restriction to time 0 solves the original square
                            std::vector<NormalSimplex> sol;
                            GenId i0 = prism.right.require("0");
                            for (GenId t = 0; t < dn.gen_count(); ++t)
                                sol.push_back(pres.map->apply(prism.pair(
                                    {{}, t},
                                    degenerate_vertex(prism.right, i0,
                                                      dn.gen(t).degree))));
                            SimplicialMap lift("l", dn, X, std::move(sol));
                            LiftingSquare original{incl, f, v_top, u_bot};
                            if (verify_lift(original, lift)) ++rep.prism_solved;
                        }
                    }
                }
            }
        }
    }
    rep.note = "RLP-vs-boundaries verdict " + std::string(to_string(rep.verdict)) +
               "; fibration " + to_string(rep.fibration.verdict) +
               "; discrete-family weak equivalence " + to_string(rep.weq_discrete.overall);
    return rep;
}

CorrectionTrace solve_boundary_lift_via_correction(const LiftingSquare& square, Budget budget)
{
    CorrectionTrace out;
    if (!square_commutes(square)) throw error("correction: square does not commute");
    const SimplicialMap& pi = square.p;
    const Presentation& Ep = pi.source();
    const Presentation& Yt = pi.target();
    const Presentation& bd = square.i.source();
    const Presentation& dn = square.i.target();
    int n = dn.dim();
    if (!bd.same_structure(standard_boundary(n)) || !dn.same_structure(standard_simplex(n)))
        throw error("correction: left leg is not a standard boundary inclusion");
    const SimplicialMap& v_top = square.top;
    const SimplicialMap& u_bot = square.bottom;

    // step 1: initial lift of the bottom map through the surjection
    MapSearchProblem l0prob;
    l0prob.source = &dn;
    l0prob.target = &Ep;
    PostCondition l0post;
    l0post.q = &pi;
    l0post.expected = u_bot.images();
    l0prob.posts.push_back(std::move(l0post));
    SearchResult l0res = find_first_map(l0prob, budget, "l0");
    if (!l0res.map.has_value()) {
        out.status = MinimalizeStatus::insufficient_fillers;
        out.failed_step = "initial-lift";
        return out;
    }
    out.l0 = *l0res.map;
    SimplicialMap incl = inclusion_by_names(bd, dn);
    SimplicialMap l0bd = compose(out.l0, incl);

    Cylinder bcyl = cylinder(bd);

    if (l0bd.same_map(v_top)) {
        // already solves the square: degenerate correction data
        out.m0 = compose(v_top, bcyl.proj);
        out.a = compose(pi, out.m0);
        out.btilde = out.m0;
        out.b = out.a;
        Product bd2 = product(bd, standard_simplex(2));
        std::vector<NormalSimplex> gimg, dimg;
        for (GenId g = 0; g < bd2.object.gen_count(); ++g) {
            const auto& [u, t] = bd2.components[static_cast<std::size_t>(g)];
            (void)t;
            gimg.push_back(compose(pi, v_top).apply(u));
            dimg.push_back(v_top.apply(u));
        }
        out.gamma = SimplicialMap("gamma", bd2.object, Yt, std::move(gimg));
        out.delta = SimplicialMap("delta", bd2.object, Ep, std::move(dimg));
        out.m = out.m0;
        Product prism = product(dn, interval());
        std::vector<NormalSimplex> himg;
        for (GenId g = 0; g < prism.object.gen_count(); ++g)
            himg.push_back(out.l0.apply(prism.components[static_cast<std::size_t>(g)].first));
        out.h = SimplicialMap("h", prism.object, Ep, std::move(himg));
        out.lift = out.l0;
        out.status = MinimalizeStatus::ok;
        return out;
    }

    // step 2: a 1-simplex m0 of Hom(bd, E') from l0|bd to v
    MapSearchProblem m0prob;
    m0prob.source = &bcyl.prod.object;
    m0prob.target = &Ep;
    for (GenId s = 0; s < bd.gen_count(); ++s) {
        m0prob.pin(bcyl.e0.image_of(s).base, l0bd.image_of(s));
        m0prob.pin(bcyl.e1.image_of(s).base, v_top.image_of(s));
    }
    SearchResult m0res = find_first_map(m0prob, budget, "m0");
    if (!m0res.map.has_value()) {
        out.status = MinimalizeStatus::insufficient_fillers;
        out.failed_step = "m0";
        return out;
    }
    out.m0 = *m0res.map;
    out.a = compose(pi, out.m0);

    // steps 3-4: loop btilde at v with a filler gamma of (b, const, a)
    Product bd2 = product(bd, standard_simplex(2));
    auto edge_pin = [&](const SimplicialMap& edge_map, GenId g, int lo) {
        // value of an edge-composite on a generator whose Delta^2 part lies
        // in the edge {lo, hi}
        const auto& [u, t] = bd2.components[static_cast<std::size_t>(g)];
        std::vector<int> tt = simplex_to_tuple(bd2.right, t);
        std::vector<int> relabeled;
        for (int x : tt) relabeled.push_back(x == lo ? 0 : 1);
        return edge_map.apply(
            bcyl.prod.pair(u, tuple_to_simplex(bcyl.prod.right, relabeled)));
    };
    auto in_edge = [&](GenId g, int lo, int hi) {
        const auto& t = bd2.components[static_cast<std::size_t>(g)].second;
        for (int x : simplex_to_tuple(bd2.right, t))
            if (x != lo && x != hi) return false;
        return true;
    };

    MapSearchProblem loopprob;
    loopprob.source = &bcyl.prod.object;
    loopprob.target = &Ep;
    for (GenId s = 0; s < bd.gen_count(); ++s) {
        loopprob.pin(bcyl.e0.image_of(s).base, v_top.image_of(s));
        loopprob.pin(bcyl.e1.image_of(s).base, v_top.image_of(s));
    }
    bool found_pair = false;
    Budget loop_budget = budget;
    search_maps(loopprob, loop_budget, [&](const std::vector<NormalSimplex>& bim) {
        SimplicialMap btilde("btilde", bcyl.prod.object, Ep, bim);
        SimplicialMap b = compose(pi, btilde);
        // gamma : bd x Delta^2 -> Yt with faces (b, const, a)
        MapSearchProblem gprob;
        gprob.source = &bd2.object;
        gprob.target = &Yt;
        for (GenId g = 0; g < bd2.object.gen_count(); ++g) {
            if (in_edge(g, 0, 1)) gprob.pin(g, edge_pin(out.a, g, 0));
            else if (in_edge(g, 1, 2)) gprob.pin(g, edge_pin(b, g, 1));
            else if (in_edge(g, 0, 2)) {
                const auto& [u, t] = bd2.components[static_cast<std::size_t>(g)];
                (void)t;
                gprob.pin(g, compose(pi, v_top).apply(u));
            }
        }
        SearchResult gres = find_first_map(gprob, budget, "gamma");
        if (!gres.map.has_value()) return true;  // try the next loop
        out.btilde = btilde;
        out.b = b;
        out.gamma = *gres.map;
        found_pair = true;
        return false;
    });
    if (!found_pair) {
        out.status = MinimalizeStatus::insufficient_fillers;
        out.failed_step = "gamma";
        return out;
    }

    // step 5: delta over gamma restricting to (m0, btilde) on the 1-horn
    MapSearchProblem dprob;
    dprob.source = &bd2.object;
    dprob.target = &Ep;
    PostCondition dpost;
    dpost.q = &pi;
    dpost.expected = out.gamma.images();
    for (GenId g = 0; g < bd2.object.gen_count(); ++g) {
        if (in_edge(g, 0, 1)) dprob.pin(g, edge_pin(out.m0, g, 0));
        else if (in_edge(g, 1, 2)) dprob.pin(g, edge_pin(out.btilde, g, 1));
    }
    dprob.posts.push_back(std::move(dpost));
    SearchResult dres = find_first_map(dprob, budget, "delta");
    if (!dres.map.has_value()) {
        out.status = MinimalizeStatus::insufficient_fillers;
        out.failed_step = "delta";
        return out;
    }
    out.delta = *dres.map;

    // step 6: the corrected vertical homotopy m = delta restricted to edge 02
    {
        std::vector<NormalSimplex> mimg;
        for (GenId g = 0; g < bcyl.prod.object.gen_count(); ++g) {
            const auto& [u, t] = bcyl.prod.components[static_cast<std::size_t>(g)];
            std::vector<int> tt = simplex_to_tuple(bcyl.prod.right, t);
            for (int& x : tt) x = x == 0 ? 0 : 2;
            mimg.push_back(out.delta.apply(bd2.pair(u, tuple_to_simplex(bd2.right, tt))));
        }
        out.m = SimplicialMap("m", bcyl.prod.object, Ep, std::move(mimg));
    }

    // step 7: prism lift pinned to l0 at time 0 and m on the boundary
    Product prism = product(dn, interval());
    MapSearchProblem hprob;
    hprob.source = &prism.object;
    hprob.target = &Ep;
    PostCondition hpost;
    hpost.q = &pi;
    for (GenId g = 0; g < prism.object.gen_count(); ++g) {
        const auto& [u, t] = prism.components[static_cast<std::size_t>(g)];
        std::vector<int> tup = left_tuple(prism, g);
        hpost.expected.push_back(u_bot.apply(std_part(prism, g, true)));
        if (!surjective_onto(tup, n)) {
            NormalSimplex ub = tuple_to_simplex(bd, tup);
            hprob.pin(g, out.m.apply(bcyl.prod.pair(ub, t)));
        } else if (prism.right.gen(t.base).degree == 0 &&
                   prism.right.gen(t.base).name == "0") {
            hprob.pin(g, out.l0.apply(std_part(prism, g, true)));
        }
    }
    hprob.posts.push_back(std::move(hpost));
    SearchResult hres = find_first_map(hprob, budget, "prism");
    if (!hres.map.has_value()) {
        out.status = MinimalizeStatus::insufficient_fillers;
        out.failed_step = "prism";
        return out;
    }
    out.h = *hres.map;

    // step 8: the solution is the time-1 end of the prism
    std::vector<NormalSimplex> sol;
    GenId i1 = prism.right.require("1");
    for (GenId t = 0; t < dn.gen_count(); ++t)
        sol.push_back(
            out.h.apply(prism.pair({{}, t}, degenerate_vertex(prism.right, i1,
                                                              dn.gen(t).degree))));
    out.lift = SimplicialMap("l", dn, Ep, std::move(sol));
    if (!verify_lift(square, out.lift)) {
        out.status = MinimalizeStatus::rejected;
        out.failed_step = "final-verification";
        return out;
    }
    out.status = MinimalizeStatus::ok;
    return out;
}

}  // namespace sset
