#include "sset/smap.hpp"

#include <algorithm>
#include <map>

namespace sset {

SimplicialMap::SimplicialMap()
    : src_(std::make_shared<const Presentation>()), tgt_(std::make_shared<const Presentation>())
{
}

SimplicialMap::SimplicialMap(std::string name, Presentation src, Presentation tgt,
                             std::vector<NormalSimplex> images)
    : SimplicialMap(std::move(name), std::make_shared<const Presentation>(std::move(src)),
                    std::make_shared<const Presentation>(std::move(tgt)), std::move(images))
{
}

SimplicialMap::SimplicialMap(std::string name, PresPtr src, PresPtr tgt,
                             std::vector<NormalSimplex> images)
    : name_(std::move(name)), src_(std::move(src)), tgt_(std::move(tgt)),
      images_(std::move(images))
{
    if (static_cast<int>(images_.size()) != src_->gen_count())
        throw error("map '" + name_ + "': one image per source generator required");
    for (GenId g = 0; g < src_->gen_count(); ++g) {
        const NormalSimplex& img = images_[static_cast<std::size_t>(g)];
        if (img.base < 0 || img.base >= tgt_->gen_count())
            throw error("map '" + name_ + "': image base out of range");
        if (tgt_->degree_of(img) != src_->gen(g).degree)
            throw error("map '" + name_ + "': image of '" + src_->gen(g).name +
                        "' has wrong degree");
    }
}

NormalSimplex SimplicialMap::apply(const NormalSimplex& z) const
{
    const NormalSimplex& img = images_[static_cast<std::size_t>(z.base)];
    if (z.word.empty()) return img;
    return tgt_->act(img, word_to_surj(z.word, src_->gen(z.base).degree));
}

bool SimplicialMap::same_map(const SimplicialMap& other) const
{
    return src_->same_structure(*other.src_) && tgt_->same_structure(*other.tgt_) &&
           images_ == other.images_;
}

SimplicialMap identity_map(const Presentation& X)
{
    std::vector<NormalSimplex> images;
    images.reserve(static_cast<std::size_t>(X.gen_count()));
    for (GenId g = 0; g < X.gen_count(); ++g) images.push_back({{}, g});
    return {"id_" + X.name(), X, X, std::move(images)};
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (!f.target().same_structure(g.source()))
        throw error("compose: middle objects do not match");
    std::vector<NormalSimplex> images;
    images.reserve(f.images().size());
    for (const NormalSimplex& img : f.images()) images.push_back(g.apply(img));
    return {g.name() + "." + f.name(), f.source_ptr(), g.target_ptr(), std::move(images)};
}

NormalSimplex degenerate_vertex(const Presentation& X, GenId vertex, int degree)
{
    if (X.gen(vertex).degree != 0) throw error("degenerate_vertex: not a vertex");
    Word w;
    for (int j = degree - 1; j >= 0; --j) w.idx.push_back(j);
    return {std::move(w), vertex};
}

SimplicialMap terminal_map(const Presentation& X, const Presentation& point)
{
    if (point.gen_count() != 1 || point.gen(0).degree != 0)
        throw error("terminal_map: target is not a point");
    std::vector<NormalSimplex> images;
    for (GenId g = 0; g < X.gen_count(); ++g)
        images.push_back(degenerate_vertex(point, 0, X.gen(g).degree));
    return {"to_pt", X, point, std::move(images)};
}

SimplicialMap map_from_empty(const Presentation& Y)
{
    Presentation e;
    Builder b("empty");
    e = std::move(b).build();
    return {"from_empty", e, Y, {}};
}

SimplicialMap constant_map(const Presentation& X, const Presentation& Y, GenId vertex)
{
    std::vector<NormalSimplex> images;
    for (GenId g = 0; g < X.gen_count(); ++g)
        images.push_back(degenerate_vertex(Y, vertex, X.gen(g).degree));
    return {"const_" + Y.gen(vertex).name, X, Y, std::move(images)};
}

SimplicialMap inclusion_by_names(const Presentation& sub, const Presentation& whole)
{
    std::vector<NormalSimplex> images;
    for (GenId g = 0; g < sub.gen_count(); ++g)
        images.push_back({{}, whole.require(sub.gen(g).name)});
    return {"incl_" + sub.name(), sub, whole, std::move(images)};
}

ValidationReport validate_map(const SimplicialMap& f, int degeneracy_check_bound)
{
    ValidationReport rep;
    rep.degree_bound = degeneracy_check_bound;
    const Presentation& X = f.source();
    const Presentation& Y = f.target();
    for (GenId g = 0; g < X.gen_count(); ++g) {
        int n = X.gen(g).degree;
        for (int i = 0; i <= n && n >= 1; ++i) {
            NormalSimplex lhs = f.apply(X.face_of_gen(g, i));
            NormalSimplex rhs = Y.face(f.image_of(g), i);
            if (lhs != rhs)
                rep.issues.push_back({X.gen(g).name,
                                      "face " + std::to_string(i) + " does not commute"});
        }
    }
    for (int n = 0; n <= degeneracy_check_bound; ++n) {
        for (const NormalSimplex& z : X.enumerate_degree(n)) {
            for (int i = 0; i <= n; ++i) {
                if (f.apply(X.degeneracy(z, i)) != Y.degeneracy(f.apply(z), i))
                    rep.issues.push_back({X.repr(z),
                                          "degeneracy " + std::to_string(i) + " does not commute"});
            }
        }
    }
    return rep;
}

Checked<std::pair<NormalSimplex, NormalSimplex>> is_degreewise_injective(const SimplicialMap& f,
                                                                         int d)
{
    Checked<std::pair<NormalSimplex, NormalSimplex>> res;
    res.bound = d;
    const Presentation& X = f.source();
    const Presentation& Y = f.target();
    // a degenerate generator image forces a collision with s_i d_i of the generator
    for (GenId g = 0; g < X.gen_count(); ++g) {
        const NormalSimplex& img = f.image_of(g);
        if (!img.nondegenerate()) {
            int n = X.gen(g).degree;
            for (int i = 0; i < n; ++i) {
                NormalSimplex folded = X.degeneracy(X.face_of_gen(g, i), i);
                if (f.apply(folded) == img && !(folded == NormalSimplex{{}, g})) {
                    res.verdict = Verdict::fails;
                    res.witness = {NormalSimplex{{}, g}, folded};
                    return res;
                }
            }
        }
    }
    // pairwise distinctness per degree
    std::map<std::pair<int, NormalSimplex>, GenId> seen;
    for (GenId g = 0; g < X.gen_count(); ++g) {
        auto key = std::make_pair(X.gen(g).degree, f.image_of(g));
        auto [it, fresh] = seen.emplace(key, g);
        if (!fresh) {
            res.verdict = Verdict::fails;
            res.witness = {NormalSimplex{{}, it->second}, NormalSimplex{{}, g}};
            return res;
        }
    }
    // brute confirmation in low degrees (also catches word-level collisions)
    for (int n = 0; n <= std::min(d, X.dim() + 1); ++n) {
        std::map<NormalSimplex, NormalSimplex> images;
        for (const NormalSimplex& z : X.enumerate_degree(n)) {
            auto [it, fresh] = images.emplace(f.apply(z), z);
            if (!fresh) {
                res.verdict = Verdict::fails;
                res.witness = {it->second, z};
                return res;
            }
        }
    }
    (void)Y;
    res.verdict = Verdict::holds;
    return res;
}

std::optional<SimplicialMap> inverse_iso(const SimplicialMap& f)
{
    const Presentation& X = f.source();
    const Presentation& Y = f.target();
    if (X.gen_count() != Y.gen_count()) return std::nullopt;
    std::vector<NormalSimplex> inv(static_cast<std::size_t>(Y.gen_count()), NormalSimplex{});
    std::vector<char> hit(static_cast<std::size_t>(Y.gen_count()), 0);
    for (GenId g = 0; g < X.gen_count(); ++g) {
        const NormalSimplex& img = f.image_of(g);
        if (!img.nondegenerate()) return std::nullopt;
        if (hit[static_cast<std::size_t>(img.base)]) return std::nullopt;
        hit[static_cast<std::size_t>(img.base)] = 1;
        inv[static_cast<std::size_t>(img.base)] = {{}, g};
    }
    SimplicialMap g("inv_" + f.name(), Y, X, std::move(inv));
    if (!validate_map(g).ok()) return std::nullopt;
    return g;
}

}  // namespace sset
