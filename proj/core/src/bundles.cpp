#include <algorithm>

#include "sset/minimal.hpp"
#include "sset/standard.hpp"

namespace sset {

namespace {

// first map A -> B that is an isomorphism of presentations
std::optional<std::pair<SimplicialMap, SimplicialMap>> find_iso(const Presentation& A,
                                                                const Presentation& B,
                                                                Budget& budget, bool& truncated)
{
    MapSearchProblem prob;
    prob.source = &A;
    prob.target = &B;
    std::optional<std::pair<SimplicialMap, SimplicialMap>> out;
    SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& im) {
        SimplicialMap cand("iso", A, B, im);
        if (auto inv = inverse_iso(cand)) {
            out = {std::move(cand), std::move(*inv)};
            return false;
        }
        return true;
    });
    if (st == SearchStatus::truncated && !out.has_value()) truncated = true;
    return out;
}

// first over-base isomorphism pb_total -> model (a Delta^m x F product),
// where to_base : pb_total -> Delta^m is the pullback projection
std::optional<std::pair<SimplicialMap, SimplicialMap>> find_over_base_iso(
    const Presentation& pb_total, const SimplicialMap& to_base, const Product& model,
    Budget& budget, bool& truncated)
{
    SimplicialMap model_proj = model.proj_left();
    MapSearchProblem prob;
    prob.source = &pb_total;
    prob.target = &model.object;
    PostCondition post;
    post.q = &model_proj;
    post.expected = to_base.images();
    prob.posts.push_back(std::move(post));
    std::optional<std::pair<SimplicialMap, SimplicialMap>> out;
    SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& im) {
        SimplicialMap cand("triv", pb_total, model.object, im);
        if (auto inv = inverse_iso(cand)) {
            out = {std::move(cand), std::move(*inv)};
            return false;
        }
        return true;
    });
    if (st == SearchStatus::truncated && !out.has_value()) truncated = true;
    return out;
}

SimplicialMap vertex_map(const Presentation& Y, GenId v)
{
    Presentation pt = terminal_point();
    return {"at_" + Y.gen(v).name, pt, Y, {NormalSimplex{{}, v}}};
}

}  // namespace

BundleAtlas is_f_bundle(const SimplicialMap& pi, int d, Budget budget)
{
    const Presentation& Y = pi.target();
    BundleAtlas atlas;
    if (Y.empty()) {
        atlas.is_bundle = true;
        atlas.fiber = empty_sset();
        return atlas;
    }
    Pi0 p0 = pi_zero(Y);
    GenId anchor = p0.representatives[0];
    atlas.fiber = pullback(pi, vertex_map(Y, anchor)).object;
    atlas.fiber.rename("F");

    // fibers over all vertices must agree with the anchor fiber
    auto [vlo, vhi] = Y.degree_range(0);
    for (GenId v = vlo; v < vhi; ++v) {
        Presentation fv = pullback(pi, vertex_map(Y, v)).object;
        bool truncated = false;
        auto iso = find_iso(fv, atlas.fiber, budget, truncated);
        if (truncated) {
            atlas.inconclusive = true;
            atlas.diagnostic = "fiber comparison truncated at vertex " + Y.gen(v).name;
            return atlas;
        }
        if (!iso.has_value()) {
            atlas.fiber_mismatch = {anchor, v};
            atlas.diagnostic = "fibers over '" + Y.gen(anchor).name + "' and '" +
                               Y.gen(v).name + "' are not isomorphic";
            return atlas;
        }
    }

    // per-simplex trivializations up to degree d
    for (GenId g = 0; g < Y.gen_count(); ++g) {
        int m = Y.gen(g).degree;
        if (m > d) break;
        NormalSimplex sigma{{}, g};
        Pullback pb = pullback(pi, yoneda_map(Y, sigma));
        Product model = product(standard_simplex(m), atlas.fiber);
        bool truncated = false;
        auto iso = find_over_base_iso(pb.object, pb.to_right, model, budget, truncated);
        if (truncated) {
            atlas.inconclusive = true;
            atlas.diagnostic = "trivialization search truncated over " + Y.gen(g).name;
            return atlas;
        }
        if (!iso.has_value()) {
            atlas.diagnostic = "no trivialization over simplex " + Y.gen(g).name;
            return atlas;
        }
        atlas.charts.push_back({sigma, std::move(iso->first), std::move(iso->second)});
    }
    atlas.is_bundle = true;
    return atlas;
}

std::vector<SimplicialMap> over_base_automorphisms(const Product& trivial_bundle, Budget& budget,
                                                   bool& truncated)
{
    const Presentation& F = trivial_bundle.right;
    std::vector<SimplicialMap> out;
    truncated = false;
    if (F.dim() <= 0) {
        // discrete fiber: the constant symmetric-group complex, in closed form
        std::vector<GenId> perm(static_cast<std::size_t>(F.gen_count()));
        for (GenId i = 0; i < F.gen_count(); ++i) perm[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<NormalSimplex> images;
            for (GenId i = 0; i < F.gen_count(); ++i)
                images.push_back({{}, perm[static_cast<std::size_t>(i)]});
            SimplicialMap fmap("perm", F, F, std::move(images));
            out.push_back(product_map(trivial_bundle, identity_map(trivial_bundle.left), fmap,
                                      trivial_bundle));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    SimplicialMap proj = trivial_bundle.proj_left();
    MapSearchProblem prob;
    prob.source = &trivial_bundle.object;
    prob.target = &trivial_bundle.object;
    PostCondition post;
    post.q = &proj;
    post.expected = proj.images();
    prob.posts.push_back(std::move(post));
    SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& im) {
        SimplicialMap cand("aut", trivial_bundle.object, trivial_bundle.object, im);
        if (inverse_iso(cand).has_value()) out.push_back(std::move(cand));
        return true;
    });
    truncated = st == SearchStatus::truncated;
    return out;
}

HornTrivialization trivialize_over_horn(const SimplicialMap& pi, int p, int k, Budget budget)
{
    HornTrivialization out;
    Presentation horn = standard_horn(p, k);
    if (!pi.target().same_structure(horn)) {
        out.diagnostic = "base is not the declared horn";
        return out;
    }
    const Presentation& E = pi.source();
    // fiber model anchored at the horn vertex k (every horn face contains it)
    GenId vk = pi.target().require(tuple_name({k}));
    out.fiber = pullback(pi, vertex_map(pi.target(), vk)).object;
    out.fiber.rename("F");
    const Presentation& F = out.fiber;
    Product global = product(pi.target(), F);

    if (F.dim() <= 0) {
        // per-face charts, then one fiber permutation per face to agree at k
        struct FaceChart {
            int i;
            SimplicialMap incl;  // Delta^{p-1} -> horn
            Pullback pb;
            Product model;
            SimplicialMap iso;
        };
        std::vector<FaceChart> charts;
        for (int i = 0; i <= p; ++i) {
            if (i == k) continue;
            Presentation face = standard_simplex(p - 1);
            std::vector<NormalSimplex> images;
            for (GenId g = 0; g < face.gen_count(); ++g) {
                std::vector<int> t = simplex_to_tuple(face, {{}, g});
                for (int& vtx : t) vtx = vtx < i ? vtx : vtx + 1;
                images.push_back(tuple_to_simplex(pi.target(), t));
            }
            SimplicialMap incl("face" + std::to_string(i), face, pi.target(), std::move(images));
            Pullback pb = pullback(pi, incl);
            Product model = product(standard_simplex(p - 1), F);
            bool truncated = false;
            auto iso = find_over_base_iso(pb.object, pb.to_right, model, budget, truncated);
            if (!iso.has_value()) {
                out.status = truncated ? MinimalizeStatus::insufficient_fillers
                                       : MinimalizeStatus::rejected;
                out.diagnostic = "no chart over face " + std::to_string(i);
                return out;
            }
            charts.push_back(
                {i, std::move(incl), std::move(pb), std::move(model), std::move(iso->first)});
        }
        // labeling of the fiber elements over the anchor vertex k by each chart
        auto vertex_labels = [&](const FaceChart& fc) {
            std::map<GenId, GenId> lab;  // E vertex -> F vertex
            int kk = k < fc.i ? k : k - 1;
            GenId anchor_vertex = fc.pb.to_right.target().require(tuple_name({kk}));
            for (GenId g = 0; g < fc.pb.object.gen_count(); ++g) {
                if (fc.pb.object.gen(g).degree != 0) continue;
                if (!(fc.pb.to_right.image_of(g) == NormalSimplex{{}, anchor_vertex})) continue;
                GenId e_elt = fc.pb.to_left.image_of(g).base;
                NormalSimplex val = fc.iso.image_of(g);
                GenId f_elt = fc.model.components[static_cast<std::size_t>(val.base)].second.base;
                lab[e_elt] = f_elt;
            }
            return lab;
        };
        std::map<GenId, GenId> reference = vertex_labels(charts.front());
        std::vector<NormalSimplex> tau_images(static_cast<std::size_t>(E.gen_count()));
        std::vector<char> assigned(static_cast<std::size_t>(E.gen_count()), 0);
        for (const FaceChart& fc : charts) {
            std::map<GenId, GenId> lab = vertex_labels(fc);
            // permutation adjust with adjust(lab(e)) = reference(e)
            std::map<GenId, GenId> adjust;
            for (auto& [e_elt, f_elt] : lab) adjust[f_elt] = reference.at(e_elt);
            std::vector<char> used(static_cast<std::size_t>(F.gen_count()), 0);
            for (auto& [from, to] : adjust) used[static_cast<std::size_t>(to)] = 1;
            for (GenId ff = 0; ff < F.gen_count(); ++ff) {
                if (adjust.count(ff)) continue;
                for (GenId to = 0; to < F.gen_count(); ++to)
                    if (!used[static_cast<std::size_t>(to)]) {
                        adjust[ff] = to;
                        used[static_cast<std::size_t>(to)] = 1;
                        break;
                    }
            }
            for (GenId g = 0; g < fc.pb.object.gen_count(); ++g) {
                const NormalSimplex& left = fc.pb.to_left.image_of(g);
                if (!left.word.empty()) continue;
                GenId e_gen = left.base;
                if (assigned[static_cast<std::size_t>(e_gen)]) continue;
                NormalSimplex val = fc.iso.image_of(g);
                const auto& [s_part, f_part] =
                    fc.model.components[static_cast<std::size_t>(val.base)];
                NormalSimplex f_adj{f_part.word, adjust.at(f_part.base)};
                NormalSimplex glob = global.pair(fc.incl.apply(s_part), f_adj);
                if (!val.word.empty())
                    glob = global.object.act(
                        glob, word_to_surj(val.word, global.object.degree_of(glob)));
                tau_images[static_cast<std::size_t>(e_gen)] = glob;
                assigned[static_cast<std::size_t>(e_gen)] = 1;
            }
        }
        for (char a : assigned)
            if (!a) {
                out.status = MinimalizeStatus::rejected;
                out.diagnostic = "a total-space generator lies over no horn face";
                return out;
            }
        SimplicialMap tau("triv", E, global.object, std::move(tau_images));
        SimplicialMap glob_proj = global.proj_left();
        if (validate_map(tau).ok() && compose(glob_proj, tau).same_map(pi)) {
            if (auto inv = inverse_iso(tau)) {
                out.status = MinimalizeStatus::ok;
                out.iso = std::move(tau);
                out.inverse = std::move(*inv);
                return out;
            }
        }
        out.status = MinimalizeStatus::rejected;
        out.diagnostic = "adjusted charts failed to glue to an isomorphism";
        return out;
    }

    // non-discrete fiber: the automorphism fillers degenerate to a budgeted
    // direct search for a global over-base isomorphism
    bool truncated = false;
    auto iso = find_over_base_iso(E, pi, global, budget, truncated);
    if (iso.has_value()) {
        out.status = MinimalizeStatus::ok;
        out.iso = std::move(iso->first);
        out.inverse = std::move(iso->second);
        return out;
    }
    out.status = MinimalizeStatus::insufficient_fillers;
    out.diagnostic = truncated ? "automorphism filler search exhausted its budget"
                               : "no global trivialization exists";
    return out;
}

BundleExtension extend_bundle_staged(const SimplicialMap& pi, int N, int d, Budget budget)
{
    BundleExtension out;
    BundleAtlas atlas = is_f_bundle(pi, d, budget);
    if (!atlas.is_bundle) {
        out.diagnostic = "not an F-bundle: " + atlas.diagnostic;
        return out;
    }
    const Presentation& Y = pi.target();
    FibrantApproxStage approx = fibrant_approx_staged(Y, N, d, budget);
    TraceReplay rep = replay_anodyne(approx.trace);
    if (!rep.accepted) {
        out.diagnostic = "fibrant approximation trace failed to replay";
        return out;
    }
    out.base_incl = rep.inclusion;
    bool discrete = atlas.fiber.dim() <= 0;

    SimplicialMap pi_cur = pi;
    SimplicialMap total_incl = identity_map(pi.source());
    AnodyneTrace etrace;
    etrace.name = "bundle_ext";
    etrace.start = pi.source();
    bool trace_ok = discrete;

    std::size_t pushout_index = 0;
    for (const TraceStage& ystage : approx.trace.stages) {
        if (ystage.cells.empty()) continue;
        const Presentation& Yn = rep.stage_objects[pushout_index];
        const SimplicialMap& y_incl = rep.stage_inclusions[pushout_index];
        const SimplicialMap& y_cells = rep.stage_cells[pushout_index];
        const auto& y_inj = rep.stage_cell_injections[pushout_index];
        ++pushout_index;

        std::vector<Presentation> horn_parts, cell_parts;
        std::vector<Product> cell_products;
        std::vector<SimplicialMap> attaches;  // horn x F_q -> E_{n-1}
        TraceStage estage;
        for (const HornCell& cell : ystage.cells) {
            Pullback pb = pullback(pi_cur, cell.attach);
            HornTrivialization triv = trivialize_over_horn(pb.to_right, cell.p, cell.k, budget);
            if (triv.status != MinimalizeStatus::ok) {
                out.status = triv.status;
                out.diagnostic = "horn trivialization failed: " + triv.diagnostic;
                return out;
            }
            SimplicialMap attach_piece = compose(pb.to_left, triv.inverse);
            attach_piece.rename("glue");
            Product hq = product(standard_horn(cell.p, cell.k), triv.fiber);
            Product tq = product(standard_simplex(cell.p), triv.fiber);
            if (discrete) {
                // one horn cell per fiber sheet
                auto [flo, fhi] = triv.fiber.degree_range(0);
                for (GenId fv = flo; fv < fhi; ++fv) {
                    std::vector<NormalSimplex> sheet_images;
                    const Presentation& hp = hq.left;
                    for (GenId t = 0; t < hp.gen_count(); ++t)
                        sheet_images.push_back(hq.pair(
                            {{}, t}, degenerate_vertex(hq.right, fv, hp.gen(t).degree)));
                    SimplicialMap sheet("sheet", hq.left, hq.object, std::move(sheet_images));
                    estage.cells.push_back({cell.p, cell.k, compose(attach_piece, sheet)});
                }
            }
            horn_parts.push_back(hq.object);
            cell_parts.push_back(tq.object);
            cell_products.push_back(std::move(tq));
            attaches.push_back(std::move(attach_piece));
        }
        Coproduct ch = coproduct(horn_parts);
        Coproduct cd = coproduct(cell_parts);
        SimplicialMap gen_incl = inclusion_by_names(ch.object, cd.object);
        std::vector<NormalSimplex> attach_images(static_cast<std::size_t>(ch.object.gen_count()));
        for (std::size_t q = 0; q < attaches.size(); ++q)
            for (GenId g = 0; g < attaches[q].source().gen_count(); ++g)
                attach_images[static_cast<std::size_t>(ch.injections[q].image_of(g).base)] =
                    attaches[q].image_of(g);
        SimplicialMap attach_all("attach", ch.object, pi_cur.source(), std::move(attach_images));
        Pushout po = pushout(attach_all, gen_incl);
        // projection to the new base: old part through y_incl, cells through
        // the base cells leg
        std::vector<NormalSimplex> v_images(static_cast<std::size_t>(cd.object.gen_count()));
        for (std::size_t q = 0; q < cell_products.size(); ++q) {
            const Product& tq = cell_products[q];
            for (GenId g = 0; g < tq.object.gen_count(); ++g) {
                const auto& [s_part, f_part] = tq.components[static_cast<std::size_t>(g)];
                (void)f_part;
                v_images[static_cast<std::size_t>(cd.injections[q].image_of(g).base)] =
                    y_cells.apply(y_inj[q].apply(s_part));
            }
        }
        SimplicialMap v("cells_to_base", cd.object, Yn, std::move(v_images));
        SimplicialMap u = compose(y_incl, pi_cur);
        pi_cur = pushout_mediator(po, u, v);
        pi_cur.rename("pi_ext");
        total_incl = compose(po.from_left, total_incl);
        if (discrete) etrace.stages.push_back(std::move(estage));
    }

    out.status = MinimalizeStatus::ok;
    out.extended = pi_cur;
    out.total_incl = total_incl;
    if (trace_ok) out.total_trace = std::move(etrace);

    // degreewise cartesianness of the extension square
    Pullback pbk = pullback(pi_cur, rep.inclusion);
    SimplicialMap med = pullback_mediator(pbk, out.total_incl, pi);
    bool cart = validate_map(med).ok() && inverse_iso(med).has_value();
    out.cartesian.verdict = cart ? Verdict::holds : Verdict::fails;
    out.cartesian.bound = d;
    if (!cart) out.cartesian.witness = "mediator into the pullback is not an isomorphism";
    return out;
}

}  // namespace sset
