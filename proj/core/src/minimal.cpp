#include "sset/minimal.hpp"

#include <algorithm>
#include <map>

#include "sset/standard.hpp"

namespace sset {

namespace {

// the monotone map underlying a simplex of a standard-simplex presentation
MonoMap mono_of(const Presentation& std_like, const NormalSimplex& u, int cod)
{
    return {cod, simplex_to_tuple(std_like, u)};
}

}  // namespace

PRelated are_p_related(const SimplicialMap& f, const NormalSimplex& z, const NormalSimplex& w,
                       Budget budget)
{
    const Presentation& X = f.source();
    int n = X.degree_of(z);
    if (X.degree_of(w) != n) throw error("are_p_related: degree mismatch");
    for (int i = 0; i <= n && n >= 1; ++i)
        if (X.face(z, i) != X.face(w, i)) throw error("are_p_related: boundaries differ");
    if (f.apply(z) != f.apply(w)) throw error("are_p_related: images differ");

    Product prism = product(standard_simplex(n), interval());
    MapSearchProblem prob;
    prob.source = &prism.object;
    prob.target = &X;
    PostCondition post;
    post.q = &f;
    for (GenId g = 0; g < prism.object.gen_count(); ++g) {
        const auto& [u, v] = prism.components[static_cast<std::size_t>(g)];
        MonoMap um = mono_of(prism.left, u, n);
        NormalSimplex zu = X.act(z, um);
        post.expected.push_back(f.apply(zu));
        if (prism.left.gen(u.base).degree < n) {
            prob.pin(g, zu);  // rel boundary: constant in the I direction
        } else if (prism.right.gen(v.base).degree == 0) {
            bool at_zero = prism.right.gen(v.base).name == "0";
            prob.pin(g, at_zero ? zu : X.act(w, um));
        }
    }
    prob.posts.push_back(std::move(post));
    SearchResult sr = find_first_map(prob, budget, "p_rel");
    PRelated out;
    if (sr.map.has_value()) {
        out.outcome = LiftOutcome::found;
        out.witness = std::move(sr.map);
    } else {
        out.outcome =
            sr.status == SearchStatus::complete ? LiftOutcome::none : LiftOutcome::inconclusive;
    }
    return out;
}

namespace {

struct MinimalizeContext {
    const SimplicialMap& f;
    const Presentation& X;
    Cylinder cyl;
    Budget& budget;
    std::vector<std::optional<NormalSimplex>> R_images;
    std::vector<NormalSimplex> ir_images;   // i o r, valued in X
    std::vector<char> in_E;
    std::vector<std::vector<GenId>> groups;  // X gen -> product gens with that left base
    std::map<int, Product> prisms;

    explicit MinimalizeContext(const SimplicialMap& f_, Budget& b)
        : f(f_), X(f_.source()), cyl(cylinder(f_.source())), budget(b)
    {
        R_images.resize(static_cast<std::size_t>(cyl.prod.object.gen_count()));
        ir_images.resize(static_cast<std::size_t>(X.gen_count()));
        in_E.assign(static_cast<std::size_t>(X.gen_count()), 0);
        groups.resize(static_cast<std::size_t>(X.gen_count()));
        for (GenId g = 0; g < cyl.prod.object.gen_count(); ++g)
            groups[static_cast<std::size_t>(cyl.prod.components[static_cast<std::size_t>(g)]
                                                .first.base)]
                .push_back(g);
    }

    const Product& prism(int n)
    {
        auto it = prisms.find(n);
        if (it == prisms.end())
            it = prisms.emplace(n, product(standard_simplex(n), interval())).first;
        return it->second;
    }

    // evaluate the partially built R on a simplex of X x I
    NormalSimplex eval_R(const NormalSimplex& z)
    {
        const auto& img = R_images[static_cast<std::size_t>(z.base)];
        if (!img.has_value()) throw error("internal: R not yet defined where required");
        if (z.word.empty()) return *img;
        return X.act(*img,
                     word_to_surj(z.word, cyl.prod.object.gen(z.base).degree));
    }

    NormalSimplex eval_ir(const NormalSimplex& z)
    {
        if (z.word.empty()) return ir_images[static_cast<std::size_t>(z.base)];
        return X.act(ir_images[static_cast<std::size_t>(z.base)],
                     word_to_surj(z.word, X.gen(z.base).degree));
    }

    // search the corrected deformation of generator x onto a candidate
    // endpoint e: h|0 = x, h|1 = e, h rel the already retracted boundary,
    // vertical over the base
    std::optional<SimplicialMap> deform(GenId x, const NormalSimplex& e, bool& truncated)
    {
        int n = X.gen(x).degree;
        const Product& pr = prism(n);
        MapSearchProblem prob;
        prob.source = &pr.object;
        prob.target = &X;
        PostCondition post;
        post.q = &f;
        for (GenId g = 0; g < pr.object.gen_count(); ++g) {
            const auto& [u, v] = pr.components[static_cast<std::size_t>(g)];
            MonoMap um = mono_of(pr.left, u, n);
            NormalSimplex xu = X.act_gen(x, um);
            post.expected.push_back(f.apply(xu));
            if (pr.left.gen(u.base).degree < n) {
                prob.pin(g, eval_R(cyl.prod.pair(xu, v)));
            } else if (pr.right.gen(v.base).degree == 0) {
                bool at_zero = pr.right.gen(v.base).name == "0";
                prob.pin(g, at_zero ? xu : X.act(e, um));
            }
        }
        prob.posts.push_back(std::move(post));
        std::optional<SimplicialMap> found;
        SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& im) {
            found = SimplicialMap("h", pr.object, X, im);
            return false;
        });
        if (st == SearchStatus::truncated && !found.has_value()) truncated = true;
        return found;
    }

    // install R on the generators with left base x from the solved prism
    void install(GenId x, const SimplicialMap& h)
    {
        int n = X.gen(x).degree;
        const Product& pr = prism(n);
        GenId top = -1;
        for (GenId g = 0; g < pr.left.gen_count(); ++g)
            if (pr.left.gen(g).degree == n) top = g;
        for (GenId g : groups[static_cast<std::size_t>(x)]) {
            const auto& [u, v] = cyl.prod.components[static_cast<std::size_t>(g)];
            NormalSimplex pg = pr.pair({u.word, top}, v);
            R_images[static_cast<std::size_t>(g)] = h.apply(pg);
        }
    }
};

}  // namespace

MinimalizationResult minimal_subfibration(const SimplicialMap& f, int d, Budget budget,
                                          TruncationWaiver waiver)
{
    MinimalizationResult out;
    out.waiver = waiver;
    if (!waiver.declared) {
        Checked<LiftingSquare> cert = is_kan_fibration_up_to(f, d, budget);
        if (!cert.holds())
            throw error("minimal_subfibration: no fibration certificate up to the bound "
                        "and no truncation waiver");
    }
    const Presentation& X = f.source();
    MinimalizeContext ctx(f, budget);
    int D = X.dim();
    out.classes.by_degree.resize(static_cast<std::size_t>(std::max(D, -1) + 1));

    for (int n = 0; n <= D; ++n) {
        // candidates: degree-n simplices with every face already in E
        std::vector<NormalSimplex> cands;
        for (const NormalSimplex& z : X.enumerate_degree(n)) {
            bool ok = true;
            for (int i = 0; i <= n && n >= 1; ++i)
                if (!ctx.in_E[static_cast<std::size_t>(X.face(z, i).base)]) ok = false;
            if (ok) cands.push_back(z);
        }
        // bucket by (boundary, image) and relate within buckets
        std::map<std::pair<std::vector<NormalSimplex>, NormalSimplex>, std::vector<int>> buckets;
        for (std::size_t t = 0; t < cands.size(); ++t) {
            std::vector<NormalSimplex> faces;
            for (int i = 0; i <= n && n >= 1; ++i) faces.push_back(X.face(cands[t], i));
            buckets[{std::move(faces), f.apply(cands[t])}].push_back(static_cast<int>(t));
        }
        std::vector<int> parent(cands.size());
        for (std::size_t t = 0; t < cands.size(); ++t) parent[t] = static_cast<int>(t);
        std::function<int(int)> find = [&](int a) {
            while (parent[static_cast<std::size_t>(a)] != a)
                a = parent[static_cast<std::size_t>(a)];
            return a;
        };
        for (auto& [key, members] : buckets) {
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    int a = find(members[i]), b = find(members[j]);
                    if (a == b) continue;
                    PRelated rel = are_p_related(f, cands[static_cast<std::size_t>(members[i])],
                                                 cands[static_cast<std::size_t>(members[j])],
                                                 budget);
                    if (rel.outcome == LiftOutcome::inconclusive) {
                        out.status = MinimalizeStatus::insufficient_fillers;
                        out.diagnostic = "p-relatedness search truncated in degree " +
                                         std::to_string(n);
                        return out;
                    }
                    if (rel.outcome == LiftOutcome::found)
                        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                }
            }
        }
        // choose representatives; new generators enter E
        std::map<int, std::vector<int>> classes;
        for (std::size_t t = 0; t < cands.size(); ++t)
            classes[find(static_cast<int>(t))].push_back(static_cast<int>(t));
        int cls_id = 0;
        for (auto& [root, members] : classes) {
            int e_members = 0;
            for (int t : members) {
                const NormalSimplex& z = cands[static_cast<std::size_t>(t)];
                if (!z.word.empty() && ctx.in_E[static_cast<std::size_t>(z.base)]) ++e_members;
            }
            if (e_members > 1) {
                out.status = MinimalizeStatus::insufficient_fillers;
                out.diagnostic = "two distinct degeneracies of the chosen subcomplex are "
                                 "p-related in degree " + std::to_string(n);
                return out;
            }
            if (e_members == 0) {
                // least member is nondegenerate: a fresh generator of E
                const NormalSimplex& rep = cands[static_cast<std::size_t>(members.front())];
                ctx.in_E[static_cast<std::size_t>(rep.base)] = 1;
            }
            for (int t : members)
                out.classes.by_degree[static_cast<std::size_t>(n)].push_back(
                    {cands[static_cast<std::size_t>(t)], cls_id});
            ++cls_id;
        }
        // witnesses for the degree-n generators
        auto [lo, hi] = X.degree_range(n);
        for (GenId x = lo; x < hi; ++x) {
            if (ctx.in_E[static_cast<std::size_t>(x)]) {
                ctx.ir_images[static_cast<std::size_t>(x)] = {{}, x};
                for (GenId g : ctx.groups[static_cast<std::size_t>(x)])
                    ctx.R_images[static_cast<std::size_t>(g)] =
                        ctx.cyl.prod.components[static_cast<std::size_t>(g)].first;
                continue;
            }
            // required retracted boundary and image
            std::vector<NormalSimplex> req(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n && n >= 1; ++i)
                req[static_cast<std::size_t>(i)] = ctx.eval_ir(X.face_of_gen(x, i));
            NormalSimplex fx = f.image_of(x);
            bool solved = false, truncated = false;
            for (const NormalSimplex& e : X.enumerate_degree(n)) {
                if (!ctx.in_E[static_cast<std::size_t>(e.base)]) continue;
                if (f.apply(e) != fx) continue;
                bool match = true;
                for (int i = 0; i <= n && n >= 1; ++i)
                    if (X.face(e, i) != req[static_cast<std::size_t>(i)]) match = false;
                if (!match) continue;
                if (auto h = ctx.deform(x, e, truncated)) {
                    ctx.ir_images[static_cast<std::size_t>(x)] = e;
                    ctx.install(x, *h);
                    solved = true;
                    break;
                }
            }
            if (!solved) {
                out.status = MinimalizeStatus::insufficient_fillers;
                out.diagnostic = std::string(truncated ? "budget-truncated" : "exhausted") +
                                 " deformation search at generator '" + X.gen(x).name + "'";
                return out;
            }
        }
    }

    // assemble E, i, r, R
    std::vector<NormalSimplex> chosen;
    for (GenId g = 0; g < X.gen_count(); ++g)
        if (ctx.in_E[static_cast<std::size_t>(g)]) chosen.push_back({{}, g});
    Subcomplex sub = subcomplex_generated(X, chosen);
    out.E = sub.object;
    out.E.rename("min_" + X.name());
    out.inclusion = inclusion_by_names(out.E, X);
    std::vector<NormalSimplex> r_images;
    for (GenId g = 0; g < X.gen_count(); ++g) {
        const NormalSimplex& ir = ctx.ir_images[static_cast<std::size_t>(g)];
        r_images.push_back({ir.word, out.E.require(X.gen(ir.base).name)});
    }
    out.retraction = SimplicialMap("r", X, out.E, std::move(r_images));
    std::vector<NormalSimplex> R_final;
    for (auto& img : ctx.R_images) {
        if (!img.has_value()) throw error("internal: incomplete vertical homotopy");
        R_final.push_back(*img);
    }
    out.homotopy = SimplicialMap("R", ctx.cyl.prod.object, X, std::move(R_final));
    out.status = MinimalizeStatus::ok;

    // verify the witness identities exactly
    const Cylinder& cyl = ctx.cyl;
    bool ok = compose(out.retraction, out.inclusion).same_map(identity_map(out.E)) &&
              compose(out.homotopy, cyl.e0).same_map(identity_map(X)) &&
              compose(out.homotopy, cyl.e1)
                  .same_map(compose(out.inclusion, out.retraction)) &&
              compose(f, out.homotopy).same_map(compose(f, cyl.proj)) &&
              validate_map(out.homotopy).ok();
    if (!ok) {
        out.status = MinimalizeStatus::insufficient_fillers;
        out.diagnostic = "constructed witnesses failed re-verification";
    }
    return out;
}

Checked<std::pair<NormalSimplex, NormalSimplex>> is_minimal(const SimplicialMap& f, int d,
                                                            Budget budget)
{
    Checked<std::pair<NormalSimplex, NormalSimplex>> res;
    res.bound = d;
    const Presentation& X = f.source();
    bool truncated = false;
    for (int n = 0; n <= std::min(d, X.dim()); ++n) {
        std::vector<NormalSimplex> elems = X.enumerate_degree(n);
        std::map<std::pair<std::vector<NormalSimplex>, NormalSimplex>, std::vector<int>> buckets;
        for (std::size_t t = 0; t < elems.size(); ++t) {
            std::vector<NormalSimplex> faces;
            for (int i = 0; i <= n && n >= 1; ++i) faces.push_back(X.face(elems[t], i));
            buckets[{std::move(faces), f.apply(elems[t])}].push_back(static_cast<int>(t));
        }
        for (auto& [key, members] : buckets) {
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    PRelated rel =
                        are_p_related(f, elems[static_cast<std::size_t>(members[i])],
                                      elems[static_cast<std::size_t>(members[j])], budget);
                    if (rel.outcome == LiftOutcome::found) {
                        res.verdict = Verdict::fails;
                        res.witness = {elems[static_cast<std::size_t>(members[i])],
                                       elems[static_cast<std::size_t>(members[j])]};
                        return res;
                    }
                    if (rel.outcome == LiftOutcome::inconclusive) truncated = true;
                }
            }
        }
    }
    res.verdict = truncated ? Verdict::inconclusive : Verdict::holds;
    return res;
}

HomotopyGroupReport fiber_homotopy_table(const Presentation& M, GenId m, int n, Budget budget)
{
    (void)budget;
    if (m < 0 || m >= M.gen_count() || M.gen(m).degree != 0)
        throw error("fiber_homotopy_table: base point is not a vertex");
    HomotopyGroupReport rep;
    rep.base = m;
    rep.degree = n;
    if (n == 0) {
        auto [lo, hi] = M.degree_range(0);
        for (GenId v = lo; v < hi; ++v) rep.entries.push_back({{}, v});
        rep.trivial = (hi - lo) == 1;
        return rep;
    }
    NormalSimplex base = degenerate_vertex(M, m, n - 1);
    for (const NormalSimplex& z : M.enumerate_degree(n)) {
        bool concentrated = true;
        for (int i = 0; i <= n; ++i)
            if (M.face(z, i) != base) concentrated = false;
        if (concentrated) rep.entries.push_back(z);
    }
    rep.trivial = rep.entries.size() == 1 &&
                  rep.entries.front() == degenerate_vertex(M, m, n);
    return rep;
}

}  // namespace sset
