#include "sset/delta.hpp"

#include <algorithm>

namespace sset {

MonoMap mono_identity(int n)
{
    MonoMap m;
    m.cod = n;
    m.vals.resize(n + 1);
    for (int i = 0; i <= n; ++i) m.vals[i] = i;
    return m;
}

MonoMap mono_delta(int i, int n)
{
    if (n < 1 || i < 0 || i > n) throw error("mono_delta: index out of range");
    MonoMap m;
    m.cod = n;
    m.vals.reserve(n);
    for (int t = 0; t < n; ++t) m.vals.push_back(t < i ? t : t + 1);
    return m;
}

MonoMap mono_sigma(int i, int n)
{
    if (n < 0 || i < 0 || i > n) throw error("mono_sigma: index out of range");
    MonoMap m;
    m.cod = n;
    m.vals.reserve(n + 2);
    for (int t = 0; t <= n + 1; ++t) m.vals.push_back(t <= i ? t : t - 1);
    return m;
}

MonoMap mono_compose(const MonoMap& after, const MonoMap& before)
{
    if (before.cod != after.dom()) throw error("mono_compose: domain mismatch");
    MonoMap m;
    m.cod = after.cod;
    m.vals.reserve(before.vals.size());
    for (int v : before.vals) m.vals.push_back(after.vals[static_cast<std::size_t>(v)]);
    return m;
}

bool mono_is_surjective(const MonoMap& m)
{
    int expect = 0;
    for (int v : m.vals) {
        if (v == expect) ++expect;
        else if (v > expect) return false;
    }
    return expect == m.cod + 1;
}

bool mono_is_injective(const MonoMap& m)
{
    for (std::size_t t = 1; t < m.vals.size(); ++t)
        if (m.vals[t] == m.vals[t - 1]) return false;
    return true;
}

EpiMono mono_factor(const MonoMap& m)
{
    std::vector<int> image;
    for (int v : m.vals)
        if (image.empty() || image.back() != v) image.push_back(v);
    EpiMono em;
    em.inj.cod = m.cod;
    em.inj.vals = image;
    em.surj.cod = static_cast<int>(image.size()) - 1;
    em.surj.vals.reserve(m.vals.size());
    for (int v : m.vals) {
        auto it = std::lower_bound(image.begin(), image.end(), v);
        em.surj.vals.push_back(static_cast<int>(it - image.begin()));
    }
    return em;
}

bool word_valid(const Word& w, int base_degree)
{
    int r = w.size();
    for (int k = 0; k < r; ++k) {
        if (k + 1 < r && w.idx[k] <= w.idx[k + 1]) return false;
        // s_{w.idx[k]} is applied to a simplex of degree base_degree + r - k - 1
        if (w.idx[k] < 0 || w.idx[k] > base_degree + r - k - 1) return false;
    }
    return true;
}

MonoMap word_to_surj(const Word& w, int base_degree)
{
    if (!word_valid(w, base_degree)) throw error("word_to_surj: invalid word");
    int m = base_degree + w.size();
    MonoMap s;
    s.cod = base_degree;
    s.vals.reserve(m + 1);
    for (int t = 0; t <= m; ++t) {
        int u = t;
        for (int j : w.idx) u = (u <= j) ? u : u - 1;
        s.vals.push_back(u);
    }
    return s;
}

Word surj_to_word(const MonoMap& surj)
{
    Word w;
    std::vector<int> v = surj.vals;
    for (;;) {
        int pos = -1;
        for (int t = static_cast<int>(v.size()) - 2; t >= 0; --t) {
            if (v[t] == v[t + 1]) {
                pos = t;
                break;
            }
        }
        if (pos < 0) break;
        w.idx.push_back(pos);
        v.erase(v.begin() + pos + 1);
    }
    return w;
}

}  // namespace sset
