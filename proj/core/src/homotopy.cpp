#include "sset/homotopy.hpp"

#include <algorithm>
#include <deque>

#include "sset/standard.hpp"

namespace sset {

Cylinder cylinder(const Presentation& X)
{
    Cylinder cyl;
    cyl.prod = product(X, interval());
    const Presentation& I = cyl.prod.right;
    GenId v0 = I.require("0");
    GenId v1 = I.require("1");
    std::vector<NormalSimplex> im0, im1;
    for (GenId g = 0; g < X.gen_count(); ++g) {
        int n = X.gen(g).degree;
        im0.push_back(cyl.prod.pair({{}, g}, degenerate_vertex(I, v0, n)));
        im1.push_back(cyl.prod.pair({{}, g}, degenerate_vertex(I, v1, n)));
    }
    cyl.e0 = SimplicialMap("e0", X, cyl.prod.object, std::move(im0));
    cyl.e1 = SimplicialMap("e1", X, cyl.prod.object, std::move(im1));
    cyl.proj = cyl.prod.proj_left();
    cyl.proj.rename("proj");
    return cyl;
}

SimplicialMap product_map(const Product& dst, const SimplicialMap& fl, const SimplicialMap& fr,
                          const Product& src)
{
    std::vector<NormalSimplex> images;
    for (const auto& [a, b] : src.components)
        images.push_back(dst.pair(fl.apply(a), fr.apply(b)));
    return {"(" + fl.name() + "x" + fr.name() + ")", src.object, dst.object, std::move(images)};
}

namespace {

// pins making h : X x I -> Y restrict to f at 0 and g at 1
void pin_endpoints(MapSearchProblem& prob, const Cylinder& cyl, const SimplicialMap& f,
                   const SimplicialMap& g)
{
    const Presentation& X = f.source();
    for (GenId x = 0; x < X.gen_count(); ++x) {
        prob.pin(cyl.e0.image_of(x).base, f.image_of(x));
        prob.pin(cyl.e1.image_of(x).base, g.image_of(x));
    }
}

std::optional<SimplicialMap> one_step_homotopy(const Cylinder& cyl, const SimplicialMap& f,
                                               const SimplicialMap& g, Budget& budget,
                                               bool& truncated)
{
    MapSearchProblem prob;
    prob.source = &cyl.prod.object;
    prob.target = &f.target();
    pin_endpoints(prob, cyl, f, g);
    std::optional<SimplicialMap> found;
    SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& im) {
        found = SimplicialMap("h", cyl.prod.object, f.target(), im);
        return false;
    });
    if (st == SearchStatus::truncated && !found.has_value()) truncated = true;
    return found;
}

}  // namespace

HomotopyResult are_homotopic(const SimplicialMap& f, const SimplicialMap& g, Budget budget)
{
    if (!f.source().same_structure(g.source()) || !f.target().same_structure(g.target()))
        throw error("are_homotopic: maps must share source and target");
    Cylinder cyl = cylinder(f.source());
    HomotopyResult res;
    bool truncated = false;
    if (auto h = one_step_homotopy(cyl, f, g, budget, truncated)) {
        res.outcome = LiftOutcome::found;
        res.witness = HomotopyWitness{std::move(*h), true};
        return res;
    }
    if (auto h = one_step_homotopy(cyl, g, f, budget, truncated)) {
        res.outcome = LiftOutcome::found;
        res.witness = HomotopyWitness{std::move(*h), false};
        return res;
    }
    res.outcome = truncated ? LiftOutcome::inconclusive : LiftOutcome::none;
    return res;
}

int HomotopyClassTable::index_of(const SimplicialMap& f) const
{
    for (std::size_t t = 0; t < maps.size(); ++t)
        if (maps[t].images() == f.images()) return static_cast<int>(t);
    return -1;
}

std::optional<HomotopyChain> HomotopyClassTable::connect(int i, int j) const
{
    if (i == j) return HomotopyChain{};
    if (class_of[static_cast<std::size_t>(i)] != class_of[static_cast<std::size_t>(j)])
        return std::nullopt;
    // BFS over recorded one-step edges, traversed in either direction
    std::vector<int> prev_edge(maps.size(), -1), prev_node(maps.size(), -1);
    std::vector<char> seen(maps.size(), 0);
    std::deque<int> queue{i};
    seen[static_cast<std::size_t>(i)] = 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == j) break;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            int nxt = -1;
            if (edges[e].from == cur) nxt = edges[e].to;
            else if (edges[e].to == cur) nxt = edges[e].from;
            if (nxt < 0 || seen[static_cast<std::size_t>(nxt)]) continue;
            seen[static_cast<std::size_t>(nxt)] = 1;
            prev_edge[static_cast<std::size_t>(nxt)] = static_cast<int>(e);
            prev_node[static_cast<std::size_t>(nxt)] = cur;
            queue.push_back(nxt);
        }
    }
    if (!seen[static_cast<std::size_t>(j)]) return std::nullopt;
    HomotopyChain chain;
    for (int at = j; at != i; at = prev_node[static_cast<std::size_t>(at)]) {
        const Edge& e = edges[static_cast<std::size_t>(prev_edge[static_cast<std::size_t>(at)])];
        chain.steps.push_back({e.h, e.to == at});
    }
    std::reverse(chain.steps.begin(), chain.steps.end());
    return chain;
}

bool HomotopyClassTable::one_step_is_equivalence() const
{
    std::size_t m = maps.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (one_step[i][j] >= 0 && one_step[j][i] < 0) return false;
            for (std::size_t k = 0; k < m; ++k)
                if (one_step[i][j] >= 0 && one_step[j][k] >= 0 && one_step[i][k] < 0)
                    return false;
        }
    }
    return true;
}

HomotopyClassTable homotopy_set(const Presentation& X, const Presentation& Z, Budget budget)
{
    HomotopyClassTable table;
    table.X = X;
    table.Z = Z;
    MapList maps = enumerate_maps(X, Z, budget);
    table.complete = maps.complete;
    table.maps = std::move(maps.maps);
    std::size_t m = table.maps.size();
    table.one_step.assign(m, std::vector<int>(m, -1));

    Cylinder cyl = cylinder(X);
    std::vector<int> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
        return a;
    };

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) {
                // constant homotopy f o proj
                SimplicialMap h = compose(table.maps[i], cyl.proj);
                table.one_step[i][j] = static_cast<int>(table.edges.size());
                table.edges.push_back({static_cast<int>(i), static_cast<int>(j), std::move(h)});
                continue;
            }
            bool truncated = false;
            auto h = one_step_homotopy(cyl, table.maps[i], table.maps[j], budget, truncated);
            if (truncated) table.complete = false;
            if (h.has_value()) {
                table.one_step[i][j] = static_cast<int>(table.edges.size());
                table.edges.push_back({static_cast<int>(i), static_cast<int>(j), std::move(*h)});
                int a = find(static_cast<int>(i));
                int b = find(static_cast<int>(j));
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
    }
    table.class_of.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        int root = find(static_cast<int>(i));
        if (root == static_cast<int>(i)) {
            table.class_of[i] = static_cast<int>(table.representatives.size());
            table.representatives.push_back(static_cast<int>(i));
        } else {
            table.class_of[i] = table.class_of[static_cast<std::size_t>(root)];
        }
    }
    return table;
}

Pi0 pi_zero(const Presentation& X)
{
    Pi0 p;
    auto [vlo, vhi] = X.degree_range(0);
    int nverts = vhi - vlo;
    std::vector<int> parent(static_cast<std::size_t>(nverts));
    for (int i = 0; i < nverts; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
        return a;
    };
    auto [elo, ehi] = X.degree_range(1);
    for (GenId e = elo; e < ehi; ++e) {
        int a = X.face_of_gen(e, 0).base - vlo;
        int b = X.face_of_gen(e, 1).base - vlo;
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    p.component_of.resize(static_cast<std::size_t>(nverts));
    for (int i = 0; i < nverts; ++i) {
        int root = find(i);
        if (root == i) {
            p.component_of[static_cast<std::size_t>(i)] =
                static_cast<int>(p.representatives.size());
            p.representatives.push_back(vlo + i);
        } else {
            p.component_of[static_cast<std::size_t>(i)] =
                p.component_of[static_cast<std::size_t>(root)];
        }
    }
    return p;
}

int FunctionComplexView::index_in_degree(int n, const SimplicialMap& m) const
{
    const auto& lst = elements[static_cast<std::size_t>(n)];
    for (std::size_t t = 0; t < lst.size(); ++t)
        if (lst[t].images() == m.images()) return static_cast<int>(t);
    return -1;
}

int FunctionComplexView::element_face(int n, int idx, int i) const
{
    if (n < 1 || n > degree_bound()) throw error("element_face: degree out of range");
    const SimplicialMap& m = elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(idx)];
    SimplicialMap di = standard_map(standard_simplex(n - 1), standard_simplex(n),
                                    mono_delta(i, n));
    SimplicialMap incl = product_map(products[static_cast<std::size_t>(n)], identity_map(A), di,
                                     products[static_cast<std::size_t>(n - 1)]);
    return index_in_degree(n - 1, compose(m, incl));
}

int FunctionComplexView::element_degeneracy(int n, int idx, int i) const
{
    if (n + 1 > degree_bound()) throw error("element_degeneracy: degree out of range");
    const SimplicialMap& m = elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(idx)];
    SimplicialMap si = standard_map(standard_simplex(n + 1), standard_simplex(n),
                                    mono_sigma(i, n));
    SimplicialMap pr = product_map(products[static_cast<std::size_t>(n)], identity_map(A), si,
                                   products[static_cast<std::size_t>(n + 1)]);
    return index_in_degree(n + 1, compose(m, pr));
}

FunctionComplexView function_complex(const Presentation& A, const Presentation& X, int d,
                                     Budget budget)
{
    FunctionComplexView view;
    view.A = A;
    view.X = X;
    for (int n = 0; n <= d; ++n) {
        view.products.push_back(product(A, standard_simplex(n)));
        MapList lst = enumerate_maps(view.products.back().object, X, budget);
        view.complete_at.push_back(lst.complete);
        view.elements.push_back(std::move(lst.maps));
    }
    return view;
}

HomotopyInverse find_homotopy_inverse(const SimplicialMap& f, Budget budget)
{
    const Presentation& X = f.source();
    const Presentation& Y = f.target();
    HomotopyInverse out;
    MapList candidates = enumerate_maps(Y, X, budget);
    HomotopyClassTable tx = homotopy_set(X, X, budget);
    HomotopyClassTable ty = homotopy_set(Y, Y, budget);
    bool complete = candidates.complete && tx.complete && ty.complete;
    int idx = tx.index_of(identity_map(X));
    int idy = ty.index_of(identity_map(Y));
    if (idx < 0 || idy < 0) throw error("find_homotopy_inverse: identity not enumerated");
    for (const SimplicialMap& g : candidates.maps) {
        int gf = tx.index_of(compose(g, f));
        int fg = ty.index_of(compose(f, g));
        if (gf < 0 || fg < 0) continue;  // only possible under truncation
        if (tx.class_of[static_cast<std::size_t>(gf)] ==
                tx.class_of[static_cast<std::size_t>(idx)] &&
            ty.class_of[static_cast<std::size_t>(fg)] ==
                ty.class_of[static_cast<std::size_t>(idy)]) {
            out.outcome = LiftOutcome::found;
            out.inverse = g;
            out.gf_to_id = *tx.connect(gf, idx);
            out.fg_to_id = *ty.connect(fg, idy);
            return out;
        }
    }
    out.outcome = complete ? LiftOutcome::none : LiftOutcome::inconclusive;
    return out;
}

KanTarget certify_kan(const Presentation& Z, int d, Budget budget)
{
    KanTarget t;
    t.Z = Z;
    t.certified_dim = is_kan_complex_up_to(Z, d, budget).holds() ? d : -1;
    return t;
}

WeqReport is_weak_equivalence_against(const SimplicialMap& f,
                                      const std::vector<KanTarget>& targets, Budget budget)
{
    const Presentation& X = f.source();
    const Presentation& Y = f.target();
    WeqReport report;
    report.note = "family-relative verdict: consistency with the weak-equivalence "
                  "definition is checked over the supplied targets only";
    bool all_hold = true, any_fail = false, any_inconclusive = false;
    int needed = std::max(X.dim(), Y.dim()) + 1;
    for (const KanTarget& t : targets) {
        WeqTargetReport tr;
        tr.target = t.Z.name();
        if (t.certified_dim < needed) {
            tr.rejected = true;
            tr.note = "rejected: Kan certificate up to degree " + std::to_string(needed) +
                      " required";
            any_inconclusive = true;
            report.targets.push_back(std::move(tr));
            continue;
        }
        HomotopyClassTable ty = homotopy_set(Y, t.Z, budget);
        HomotopyClassTable tx = homotopy_set(X, t.Z, budget);
        tr.classes_target = ty.class_count();
        tr.classes_source = tx.class_count();
        if (!ty.complete || !tx.complete) {
            tr.bijective = Verdict::inconclusive;
            any_inconclusive = true;
            report.targets.push_back(std::move(tr));
            continue;
        }
        // f# : [Y,Z] -> [X,Z] on class representatives
        std::vector<int> image_class(static_cast<std::size_t>(ty.class_count()));
        bool ok = true;
        for (int c = 0; c < ty.class_count(); ++c) {
            const SimplicialMap& rep =
                ty.maps[static_cast<std::size_t>(ty.representatives[static_cast<std::size_t>(c)])];
            int i = tx.index_of(compose(rep, f));
            if (i < 0) throw error("is_weak_equivalence_against: missing composite");
            image_class[static_cast<std::size_t>(c)] = tx.class_of[static_cast<std::size_t>(i)];
        }
        std::vector<char> hit(static_cast<std::size_t>(tx.class_count()), 0);
        for (int c = 0; c < ty.class_count(); ++c) {
            if (hit[static_cast<std::size_t>(image_class[static_cast<std::size_t>(c)])]) ok = false;
            hit[static_cast<std::size_t>(image_class[static_cast<std::size_t>(c)])] = 1;
        }
        for (char h : hit)
            if (!h) ok = false;
        tr.bijective = ok ? Verdict::holds : Verdict::fails;
        if (!ok) any_fail = true;
        if (tr.bijective != Verdict::holds) all_hold = false;
        report.targets.push_back(std::move(tr));
    }
    if (any_fail) report.overall = Verdict::fails;
    else if (any_inconclusive || report.targets.empty()) report.overall = Verdict::inconclusive;
    else report.overall = all_hold ? Verdict::holds : Verdict::inconclusive;
    return report;
}

}  // namespace sset
