#include "sset/standard.hpp"

#include <algorithm>
#include <functional>

namespace sset {

std::string tuple_name(const std::vector<int>& vertices)
{
    bool wide = false;
    for (int v : vertices)
        if (v > 9) wide = true;
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (wide && i) s += '_';
        s += std::to_string(vertices[i]);
    }
    return s;
}

namespace {

// all strictly increasing (size)-subsets of {0..p}
void subsets(int p, int size, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    int start = cur.empty() ? 0 : cur.back() + 1;
    for (int v = start; v <= p; ++v) {
        cur.push_back(v);
        subsets(p, size, cur, out);
        cur.pop_back();
    }
}

Presentation from_tuples(const std::string& name, const std::vector<std::vector<int>>& tuples)
{
    Builder b(name);
    for (const auto& t : tuples) b.add_generator(tuple_name(t), static_cast<int>(t.size()) - 1);
    for (const auto& t : tuples) {
        if (t.size() == 1) continue;
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::vector<int> f = t;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            b.set_face(tuple_name(t), static_cast<int>(i), {}, tuple_name(f));
        }
    }
    return std::move(b).build();
}

bool contained_in_some_face(const std::vector<int>& t, int p, int skip_face)
{
    // t lies in face i of Delta^p iff vertex i is absent from t
    for (int i = 0; i <= p; ++i) {
        if (i == skip_face) continue;
        if (std::find(t.begin(), t.end(), i) == t.end()) return true;
    }
    return false;
}

}  // namespace

Presentation standard_simplex(int p)
{
    if (p < 0) throw error("standard_simplex: p must be >= 0");
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    for (int n = 0; n <= p; ++n) subsets(p, n + 1, cur, tuples);
    return from_tuples("Delta" + std::to_string(p), tuples);
}

Presentation standard_boundary(int p)
{
    if (p < 0) throw error("standard_boundary: p must be >= 0");
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    for (int n = 0; n < p; ++n) subsets(p, n + 1, cur, tuples);
    return from_tuples("bdDelta" + std::to_string(p), tuples);
}

Presentation standard_horn(int p, int k)
{
    if (p < 1 || k < 0 || k > p) throw error("standard_horn: need p >= 1 and 0 <= k <= p");
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    for (int n = 0; n < p; ++n) subsets(p, n + 1, cur, all);
    std::vector<std::vector<int>> tuples;
    for (auto& t : all)
        if (contained_in_some_face(t, p, k)) tuples.push_back(std::move(t));
    return from_tuples("Horn" + std::to_string(p) + "_" + std::to_string(k), tuples);
}

Presentation interval()
{
    Presentation p = standard_simplex(1);
    p.rename("I");
    return p;
}

Presentation interval_boundary()
{
    Presentation p = standard_boundary(1);
    p.rename("bdI");
    return p;
}

Presentation terminal_point()
{
    Builder b("pt");
    b.add_generator("0", 0);
    return std::move(b).build();
}

Presentation empty_sset()
{
    return std::move(Builder("empty")).build();
}

Presentation discrete_set(int n)
{
    if (n < 0) throw error("discrete_set: n must be >= 0");
    Builder b("disc" + std::to_string(n));
    for (int i = 0; i < n; ++i) b.add_generator("a" + std::to_string(i), 0);
    return std::move(b).build();
}

Presentation pair_groupoid_nerve(int objects, int dim)
{
    if (objects < 1 || objects > 26) throw error("pair_groupoid_nerve: 1..26 objects");
    if (dim < 0) throw error("pair_groupoid_nerve: dim must be >= 0");
    auto name_of = [](const std::vector<int>& word) {
        std::string s;
        for (int x : word) s += static_cast<char>('a' + x);
        return s;
    };
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int len) {
        if (static_cast<int>(cur.size()) == len) {
            words.push_back(cur);
            return;
        }
        for (int x = 0; x < objects; ++x) {
            if (!cur.empty() && cur.back() == x) continue;
            cur.push_back(x);
            gen(len);
            cur.pop_back();
        }
    };
    for (int len = 1; len <= dim + 1; ++len) gen(len);
    Builder b("E" + std::to_string(objects) + "le" + std::to_string(dim));
    for (auto& w : words) b.add_generator(name_of(w), static_cast<int>(w.size()) - 1);
    for (auto& w : words) {
        if (w.size() == 1) continue;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::vector<int> fw = w;
            fw.erase(fw.begin() + static_cast<std::ptrdiff_t>(i));
            // collapse consecutive repeats into a degeneracy word
            std::vector<int> base;
            MonoMap surj;
            for (int x : fw) {
                if (base.empty() || base.back() != x) base.push_back(x);
                surj.vals.push_back(static_cast<int>(base.size()) - 1);
            }
            surj.cod = static_cast<int>(base.size()) - 1;
            b.set_face(name_of(w), static_cast<int>(i), surj_to_word(surj), name_of(base));
        }
    }
    return std::move(b).build();
}

Presentation generate_standard(StandardKind kind, int p, int k)
{
    switch (kind) {
        case StandardKind::simplex: return standard_simplex(p);
        case StandardKind::boundary: return standard_boundary(p);
        case StandardKind::horn: return standard_horn(p, k);
        case StandardKind::interval: return interval();
        case StandardKind::interval_boundary: return interval_boundary();
    }
    throw error("generate_standard: unknown kind");
}

std::vector<int> simplex_to_tuple(const Presentation& std_like, const NormalSimplex& z)
{
    const std::string& nm = std_like.gen(z.base).name;
    std::vector<int> base_tuple;
    if (nm.find('_') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < nm.size()) {
            std::size_t end = nm.find('_', pos);
            if (end == std::string::npos) end = nm.size();
            base_tuple.push_back(std::stoi(nm.substr(pos, end - pos)));
            pos = end + 1;
        }
    } else {
        for (char c : nm) base_tuple.push_back(c - '0');
    }
    MonoMap s = word_to_surj(z.word, std_like.gen(z.base).degree);
    std::vector<int> out;
    out.reserve(s.vals.size());
    for (int v : s.vals) out.push_back(base_tuple[static_cast<std::size_t>(v)]);
    return out;
}

SimplicialMap standard_map(const Presentation& from, const Presentation& to,
                           const MonoMap& alpha)
{
    std::vector<NormalSimplex> images;
    for (GenId g = 0; g < from.gen_count(); ++g) {
        std::vector<int> t = simplex_to_tuple(from, {{}, g});
        for (int& v : t) v = alpha.vals[static_cast<std::size_t>(v)];
        images.push_back(tuple_to_simplex(to, t));
    }
    return {"std_map", from, to, std::move(images)};
}

SimplicialMap yoneda_map(const Presentation& X, const NormalSimplex& z)
{
    int n = X.degree_of(z);
    Presentation dn = standard_simplex(n);
    std::vector<NormalSimplex> images;
    for (GenId g = 0; g < dn.gen_count(); ++g) {
        std::vector<int> t = simplex_to_tuple(dn, {{}, g});
        images.push_back(X.act(z, MonoMap{n, t}));
    }
    return {"ev_" + X.repr(z), std::move(dn), X, std::move(images)};
}

NormalSimplex tuple_to_simplex(const Presentation& std_like, const std::vector<int>& tuple)
{
    if (tuple.empty()) throw error("tuple_to_simplex: empty tuple");
    std::vector<int> distinct;
    for (int v : tuple)
        if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
    // surjection of the tuple onto its distinct values
    MonoMap surj;
    surj.cod = static_cast<int>(distinct.size()) - 1;
    for (int v : tuple) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
        surj.vals.push_back(static_cast<int>(it - distinct.begin()));
    }
    GenId g = std_like.require(tuple_name(distinct));
    return {surj_to_word(surj), g};
}

}  // namespace sset
