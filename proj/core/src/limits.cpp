#include "sset/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sset {

std::vector<int> flat_set(const Presentation& X, const NormalSimplex& z)
{
    MonoMap s = word_to_surj(z.word, X.gen(z.base).degree);
    std::vector<int> flats;
    for (std::size_t t = 0; t + 1 < s.vals.size(); ++t)
        if (s.vals[t] == s.vals[t + 1]) flats.push_back(static_cast<int>(t));
    return flats;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// surjection [m] -> [m - |flats|] flat exactly at `flats`
MonoMap surj_with_flats(int m, const std::vector<int>& flats)
{
    MonoMap s;
    s.cod = m - static_cast<int>(flats.size());
    s.vals.reserve(static_cast<std::size_t>(m) + 1);
    int v = 0;
    std::size_t fi = 0;
    for (int t = 0; t <= m; ++t) {
        s.vals.push_back(v);
        bool flat = fi < flats.size() && flats[fi] == t;
        if (flat) ++fi;
        else ++v;
    }
    return s;
}

// minimal section of a surjection (first preimage of each value)
MonoMap min_section(const MonoMap& surj)
{
    MonoMap sec;
    sec.cod = surj.dom();
    sec.vals.reserve(static_cast<std::size_t>(surj.cod) + 1);
    int want = 0;
    for (int t = 0; t <= surj.dom(); ++t) {
        if (surj.vals[static_cast<std::size_t>(t)] == want) {
            sec.vals.push_back(t);
            ++want;
        }
    }
    return sec;
}

struct PairKey {
    NormalSimplex a, b;
    auto operator<=>(const PairKey&) const = default;
};

std::string pair_name(const Presentation& X, const Presentation& Y, const PairKey& k)
{
    return "(" + X.repr(k.a) + "|" + Y.repr(k.b) + ")";
}

// shared engine for product and pullback: the sub-complex of X x Y spanned by
// coordinate pairs passing `keep` (which must be closed under the action)
struct PairComplex {
    Presentation object;
    Presentation X, Y;
    std::vector<std::pair<NormalSimplex, NormalSimplex>> components;

    NormalSimplex pair(const NormalSimplex& a, const NormalSimplex& b) const
    {
        std::vector<int> common = intersect_sorted(flat_set(X, a), flat_set(Y, b));
        int m = X.degree_of(a);
        if (common.empty()) {
            GenId g = object.find(pair_name(X, Y, {a, b}));
            if (g < 0) throw error("pair outside the constructed pair complex");
            return {{}, g};
        }
        MonoMap tau = surj_with_flats(m, common);
        MonoMap sec = min_section(tau);
        NormalSimplex a2 = X.act(a, sec);
        NormalSimplex b2 = Y.act(b, sec);
        GenId g = object.find(pair_name(X, Y, {a2, b2}));
        if (g < 0) throw error("pair outside the constructed pair complex");
        return {surj_to_word(tau), g};
    }
};

PairComplex build_pair_complex(
    const std::string& name, const Presentation& X, const Presentation& Y,
    const std::function<bool(const NormalSimplex&, const NormalSimplex&)>& keep)
{
    PairComplex pc;
    pc.X = X;
    pc.Y = Y;
    int top = X.dim() + Y.dim();  // nondegenerate pairs cannot exceed this
    Builder b(name);
    std::map<std::string, PairKey> keys;
    for (int n = 0; n <= top; ++n) {
        auto xs = X.enumerate_degree(n);
        auto ys = Y.enumerate_degree(n);
        std::vector<std::vector<int>> xflats(xs.size()), yflats(ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i) xflats[i] = flat_set(X, xs[i]);
        for (std::size_t j = 0; j < ys.size(); ++j) yflats[j] = flat_set(Y, ys[j]);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = 0; j < ys.size(); ++j) {
                if (!intersect_sorted(xflats[i], yflats[j]).empty()) continue;
                if (!keep(xs[i], ys[j])) continue;
                PairKey k{xs[i], ys[j]};
                std::string nm = pair_name(X, Y, k);
                b.add_generator(nm, n);
                keys.emplace(nm, k);
            }
        }
    }
    // face of a pair generator: componentwise face, then the common-flat
    // factorization gives its normal form over a lower pair generator
    for (auto& [nm, k] : keys) {
        int n = X.degree_of(k.a);
        if (n == 0) continue;
        for (int i = 0; i <= n; ++i) {
            NormalSimplex fa = X.face(k.a, i);
            NormalSimplex fb = Y.face(k.b, i);
            std::vector<int> common = intersect_sorted(flat_set(X, fa), flat_set(Y, fb));
            if (common.empty()) {
                b.set_face(nm, i, {}, pair_name(X, Y, {fa, fb}));
            } else {
                MonoMap tau = surj_with_flats(n - 1, common);
                MonoMap sec = min_section(tau);
                NormalSimplex a2 = X.act(fa, sec);
                NormalSimplex b2 = Y.act(fb, sec);
                b.set_face(nm, i, surj_to_word(tau), pair_name(X, Y, {a2, b2}));
            }
        }
    }
    pc.object = std::move(b).build();
    pc.components.resize(static_cast<std::size_t>(pc.object.gen_count()));
    for (auto& [nm, k] : keys)
        pc.components[static_cast<std::size_t>(pc.object.require(nm))] = {k.a, k.b};
    return pc;
}

}  // namespace

SimplicialMap Product::proj_left() const
{
    std::vector<NormalSimplex> images;
    for (const auto& [a, b] : components) images.push_back(a);
    return {"pr1", object, left, std::move(images)};
}

SimplicialMap Product::proj_right() const
{
    std::vector<NormalSimplex> images;
    for (const auto& [a, b] : components) images.push_back(b);
    return {"pr2", object, right, std::move(images)};
}

NormalSimplex Product::pair(const NormalSimplex& a, const NormalSimplex& b) const
{
    if (left.degree_of(a) != right.degree_of(b)) throw error("pair: degree mismatch");
    PairComplex pc;
    pc.object = object;
    pc.X = left;
    pc.Y = right;
    return pc.pair(a, b);
}

SimplicialMap Product::pairing(const SimplicialMap& f, const SimplicialMap& g) const
{
    if (!f.source().same_structure(g.source())) throw error("pairing: source mismatch");
    if (!f.target().same_structure(left) || !g.target().same_structure(right))
        throw error("pairing: target mismatch");
    std::vector<NormalSimplex> images;
    for (GenId z = 0; z < f.source().gen_count(); ++z)
        images.push_back(pair(f.image_of(z), g.image_of(z)));
    return {"<" + f.name() + "," + g.name() + ">", f.source(), object, std::move(images)};
}

Product product(const Presentation& X, const Presentation& Y)
{
    PairComplex pc = build_pair_complex(
        "(" + X.name() + "x" + Y.name() + ")", X, Y,
        [](const NormalSimplex&, const NormalSimplex&) { return true; });
    Product p;
    p.object = std::move(pc.object);
    p.left = X;
    p.right = Y;
    p.components = std::move(pc.components);
    return p;
}

Coproduct coproduct(const std::vector<Presentation>& parts)
{
    Builder b("coprod");
    for (std::size_t t = 0; t < parts.size(); ++t) {
        std::string tag = "i" + std::to_string(t) + ":";
        for (GenId g = 0; g < parts[t].gen_count(); ++g)
            b.add_generator(tag + parts[t].gen(g).name, parts[t].gen(g).degree);
        for (GenId g = 0; g < parts[t].gen_count(); ++g) {
            const Generator& gen = parts[t].gen(g);
            for (int i = 0; i <= gen.degree && gen.degree >= 1; ++i) {
                const NormalSimplex& f = gen.faces[static_cast<std::size_t>(i)];
                b.set_face(tag + gen.name, i, f.word, tag + parts[t].gen(f.base).name);
            }
        }
    }
    Coproduct c;
    c.object = std::move(b).build();
    // one shared copy of the coproduct object across all injections
    auto shared_obj = std::make_shared<const Presentation>(c.object);
    for (std::size_t t = 0; t < parts.size(); ++t) {
        std::string tag = "i" + std::to_string(t) + ":";
        std::vector<NormalSimplex> images;
        for (GenId g = 0; g < parts[t].gen_count(); ++g)
            images.push_back({{}, c.object.require(tag + parts[t].gen(g).name)});
        c.injections.push_back({"inj" + std::to_string(t),
                                std::make_shared<const Presentation>(parts[t]), shared_obj,
                                std::move(images)});
    }
    return c;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// element of B (tag 0) or C (tag 1)
struct Tagged {
    int tag;
    NormalSimplex z;
    auto operator<=>(const Tagged&) const = default;
};

struct QuotientData {
    const Presentation* home[2];
    // per degree: sorted element lists and union-find over their indices
    std::vector<std::vector<Tagged>> elems;
    std::vector<UnionFind> uf;
    std::map<std::pair<int, Tagged>, NormalSimplex> nf_cache;
    // class generator names resolved to their id and degree in the final
    // (degree, name)-sorted presentation, available before it is built
    std::map<std::string, std::pair<GenId, int>> genmap;

    int index_of(int degree, const Tagged& t) const
    {
        const auto& v = elems[static_cast<std::size_t>(degree)];
        auto it = std::lower_bound(v.begin(), v.end(), t);
        if (it == v.end() || !(*it == t)) throw error("quotient: element not found");
        return static_cast<int>(it - v.begin());
    }

    std::vector<Tagged> class_members(int degree, int root)
    {
        std::vector<Tagged> ms;
        const auto& groups = grouped(degree);
        auto it = groups.find(root);
        if (it != groups.end()) ms = it->second;
        return ms;
    }

    std::vector<std::map<int, std::vector<Tagged>>> groups_cache;

    const std::map<int, std::vector<Tagged>>& grouped(int degree)
    {
        if (groups_cache.size() <= static_cast<std::size_t>(degree))
            groups_cache.resize(static_cast<std::size_t>(degree) + 1);
        auto& g = groups_cache[static_cast<std::size_t>(degree)];
        if (g.empty() && !elems[static_cast<std::size_t>(degree)].empty()) {
            auto& v = elems[static_cast<std::size_t>(degree)];
            for (std::size_t i = 0; i < v.size(); ++i)
                g[uf[static_cast<std::size_t>(degree)].find(static_cast<int>(i))].push_back(v[i]);
        }
        return g;
    }

    std::string class_gen_name(const Tagged& least) const
    {
        return (least.tag == 0 ? "l:" : "r:") + home[least.tag]->repr(least.z);
    }

    // normal form in the quotient of the class of (tag, z)
    NormalSimplex class_nf(int degree, const Tagged& t)
    {
        int root = uf[static_cast<std::size_t>(degree)].find(index_of(degree, t));
        Tagged rootelem = elems[static_cast<std::size_t>(degree)][static_cast<std::size_t>(root)];
        auto key = std::make_pair(degree, rootelem);
        auto it = nf_cache.find(key);
        if (it != nf_cache.end()) return it->second;

        std::vector<Tagged> ms = class_members(degree, root);
        NormalSimplex result;
        const Tagged* degen = nullptr;
        for (const Tagged& m : ms)
            if (!m.z.word.empty()) {
                degen = &m;
                break;
            }
        if (degen == nullptr) {
            result = {{}, genmap.at(class_gen_name(ms.front())).first};
        } else {
            const Presentation& H = *home[degen->tag];
            int base_deg = H.gen(degen->z.base).degree;
            NormalSimplex lower = class_nf(base_deg, {degen->tag, {{}, degen->z.base}});
            int lower_gen_deg = base_deg - lower.word.size();
            MonoMap comp = mono_compose(word_to_surj(lower.word, lower_gen_deg),
                                        word_to_surj(degen->z.word, base_deg));
            result = {surj_to_word(comp), lower.base};
        }
        nf_cache.emplace(key, result);
        return result;
    }
};

}  // namespace

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g)
{
    if (!f.source().same_structure(g.source())) throw error("pushout: sources do not match");
    const Presentation& A = f.source();
    const Presentation& B = f.target();
    const Presentation& C = g.target();

    QuotientData q;
    q.home[0] = &B;
    q.home[1] = &C;
    int D = std::max(B.dim(), C.dim());
    for (int n = 0; n <= D; ++n) {
        std::vector<Tagged> v;
        for (const NormalSimplex& z : B.enumerate_degree(n)) v.push_back({0, z});
        for (const NormalSimplex& z : C.enumerate_degree(n)) v.push_back({1, z});
        std::sort(v.begin(), v.end());
        q.elems.push_back(std::move(v));
        q.uf.emplace_back(q.elems.back().size());
        for (const NormalSimplex& a : A.enumerate_degree(n)) {
            Tagged tb{0, f.apply(a)};
            Tagged tc{1, g.apply(a)};
            q.uf.back().unite(q.index_of(n, tb), q.index_of(n, tc));
        }
    }

    // generator classes: those whose members are all nondegenerate
    std::vector<std::pair<int, Tagged>> class_gens;  // (degree, least member)
    for (int n = 0; n <= D; ++n) {
        for (const auto& [root, ms] : q.grouped(n)) {
            bool nondeg = std::all_of(ms.begin(), ms.end(),
                                      [](const Tagged& t) { return t.z.word.empty(); });
            if (nondeg) class_gens.push_back({n, ms.front()});
        }
    }
    // resolve final generator ids ((degree, name)-sorted) before building
    std::vector<std::pair<int, std::string>> order;
    for (auto& [deg, least] : class_gens) order.push_back({deg, q.class_gen_name(least)});
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i)
        q.genmap[order[i].second] = {static_cast<GenId>(i), order[i].first};

    Builder b("pushout");
    for (auto& [deg, nm] : order) b.add_generator(nm, deg);
    for (auto& [n, least] : class_gens) {
        if (n == 0) continue;
        const Presentation& H = *q.home[least.tag];
        for (int i = 0; i <= n; ++i) {
            NormalSimplex fz = H.face(least.z, i);
            int bdeg = H.gen(fz.base).degree;
            NormalSimplex lower = q.class_nf(bdeg, {least.tag, {{}, fz.base}});
            int lower_gen_deg = bdeg - lower.word.size();
            MonoMap comp = mono_compose(word_to_surj(lower.word, lower_gen_deg),
                                        word_to_surj(fz.word, bdeg));
            NormalSimplex nf{surj_to_word(comp), lower.base};
            b.set_face(q.class_gen_name(least), i, nf.word, order[static_cast<std::size_t>(nf.base)].second);
        }
    }
    Presentation P = std::move(b).build();

    auto leg = [&](int tag, const Presentation& H, const std::string& nm) {
        std::vector<NormalSimplex> images;
        for (GenId x = 0; x < H.gen_count(); ++x)
            images.push_back(q.class_nf(H.gen(x).degree, {tag, {{}, x}}));
        return SimplicialMap(nm, H, P, std::move(images));
    };
    Pushout out;
    out.from_left = leg(0, B, "po_left");
    out.from_right = leg(1, C, "po_right");
    out.object = std::move(P);
    return out;
}

SimplicialMap pushout_mediator(const Pushout& po, const SimplicialMap& u, const SimplicialMap& v)
{
    const Presentation& P = po.object;
    std::vector<NormalSimplex> images(static_cast<std::size_t>(P.gen_count()));
    // each generator class name is "l:<repr>" or "r:<repr>" of a nondegenerate member
    for (GenId g = 0; g < P.gen_count(); ++g) {
        const std::string& nm = P.gen(g).name;
        bool left = nm[0] == 'l';
        const SimplicialMap& side = left ? u : v;
        const Presentation& H = left ? po.from_left.source() : po.from_right.source();
        GenId h = H.require(nm.substr(2));
        images[static_cast<std::size_t>(g)] = side.image_of(h);
    }
    return {"mediator", P, u.target(), std::move(images)};
}

Pullback pullback(const SimplicialMap& f, const SimplicialMap& g)
{
    if (!f.target().same_structure(g.target())) throw error("pullback: targets do not match");
    const Presentation& X = f.source();
    const Presentation& Z = g.source();
    PairComplex pc = build_pair_complex(
        "pb(" + X.name() + "," + Z.name() + ")", X, Z,
        [&](const NormalSimplex& a, const NormalSimplex& b) { return f.apply(a) == g.apply(b); });
    Pullback pb;
    std::vector<NormalSimplex> limg, rimg;
    for (const auto& [a, b] : pc.components) {
        limg.push_back(a);
        rimg.push_back(b);
    }
    pb.to_left = {"pb_pr1", pc.object, X, std::move(limg)};
    pb.to_right = {"pb_pr2", pc.object, Z, std::move(rimg)};
    pb.object = std::move(pc.object);
    return pb;
}

SimplicialMap pullback_mediator(const Pullback& pb, const SimplicialMap& u, const SimplicialMap& v)
{
    PairComplex pc;
    pc.object = pb.object;
    pc.X = pb.to_left.target();
    pc.Y = pb.to_right.target();
    std::vector<NormalSimplex> images;
    for (GenId t = 0; t < u.source().gen_count(); ++t)
        images.push_back(pc.pair(u.image_of(t), v.image_of(t)));
    return {"pb_mediator", u.source(), pb.object, std::move(images)};
}

Subcomplex subcomplex_generated(const Presentation& X, const std::vector<NormalSimplex>& S)
{
    std::set<GenId> keep;
    std::vector<GenId> work;
    for (const NormalSimplex& z : S)
        if (keep.insert(z.base).second) work.push_back(z.base);
    while (!work.empty()) {
        GenId g = work.back();
        work.pop_back();
        const Generator& gen = X.gen(g);
        for (const NormalSimplex& f : gen.faces)
            if (keep.insert(f.base).second) work.push_back(f.base);
    }
    Builder b(X.name() + ".sub");
    for (GenId g : keep) b.add_generator(X.gen(g).name, X.gen(g).degree);
    for (GenId g : keep) {
        const Generator& gen = X.gen(g);
        for (int i = 0; i <= gen.degree && gen.degree >= 1; ++i) {
            const NormalSimplex& f = gen.faces[static_cast<std::size_t>(i)];
            b.set_face(gen.name, i, f.word, X.gen(f.base).name);
        }
    }
    Subcomplex sc;
    sc.object = std::move(b).build();
    sc.inclusion = inclusion_by_names(sc.object, X);
    return sc;
}

Subcomplex image_subcomplex(const SimplicialMap& f)
{
    std::vector<NormalSimplex> gens;
    for (GenId g = 0; g < f.source().gen_count(); ++g) gens.push_back(f.image_of(g));
    Subcomplex sc = subcomplex_generated(f.target(), gens);
    sc.object.rename("im_" + f.name());
    return sc;
}

}  // namespace sset
