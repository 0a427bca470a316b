#include "sset/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace sset {

int Presentation::dim() const
{
    return gens_.empty() ? -1 : gens_.back().degree;
}

std::pair<GenId, GenId> Presentation::degree_range(int degree) const
{
    auto lo = std::lower_bound(gens_.begin(), gens_.end(), degree,
                               [](const Generator& g, int d) { return g.degree < d; });
    auto hi = std::upper_bound(gens_.begin(), gens_.end(), degree,
                               [](int d, const Generator& g) { return d < g.degree; });
    return {static_cast<GenId>(lo - gens_.begin()), static_cast<GenId>(hi - gens_.begin())};
}

GenId Presentation::find(const std::string& gen_name) const
{
    auto it = index_.find(gen_name);
    return it == index_.end() ? -1 : it->second;
}

GenId Presentation::require(const std::string& gen_name) const
{
    GenId g = find(gen_name);
    if (g < 0) throw error("unknown generator '" + gen_name + "' in '" + name_ + "'");
    return g;
}

const NormalSimplex& Presentation::face_of_gen(GenId g, int i) const
{
    const Generator& gen_ = gens_[static_cast<std::size_t>(g)];
    if (i < 0 || i > gen_.degree || gen_.degree == 0)
        throw error("face index out of range on '" + gen_.name + "'");
    return gen_.faces[static_cast<std::size_t>(i)];
}

NormalSimplex Presentation::act(const NormalSimplex& z, const MonoMap& op) const
{
    if (op.cod != degree_of(z)) throw error("act: operator codomain mismatch");
    MonoMap beta = mono_compose(word_to_surj(z.word, gen(z.base).degree), op);
    return act_gen(z.base, beta);
}

NormalSimplex Presentation::act_gen(GenId g, const MonoMap& op) const
{
    MonoMap beta = op;
    for (;;) {
        if (beta.cod != gen(g).degree) throw error("act_gen: operator codomain mismatch");
        if (mono_is_surjective(beta)) return {surj_to_word(beta), g};
        // strip the largest missing index as a face of the base generator
        std::vector<char> hit(static_cast<std::size_t>(beta.cod) + 1, 0);
        for (int v : beta.vals) hit[static_cast<std::size_t>(v)] = 1;
        int j = beta.cod;
        while (hit[static_cast<std::size_t>(j)]) --j;
        MonoMap reduced;
        reduced.cod = beta.cod - 1;
        reduced.vals.reserve(beta.vals.size());
        for (int v : beta.vals) reduced.vals.push_back(v < j ? v : v - 1);
        const NormalSimplex& f = face_of_gen(g, j);
        beta = mono_compose(word_to_surj(f.word, gen(f.base).degree), reduced);
        g = f.base;
    }
}

NormalSimplex Presentation::face(const NormalSimplex& z, int i) const
{
    int n = degree_of(z);
    if (n == 0) throw error("face: vertex has no faces");
    if (i < 0 || i > n) throw error("face: index out of range");
    return act(z, mono_delta(i, n));
}

NormalSimplex Presentation::degeneracy(const NormalSimplex& z, int i) const
{
    int n = degree_of(z);
    if (i < 0 || i > n) throw error("degeneracy: index out of range");
    return act(z, mono_sigma(i, n));
}

namespace {

// All strictly decreasing words of length r applicable to degree m, in
// lexicographic order.
void decreasing_words(int m, int r, Word& cur, std::vector<Word>& out)
{
    if (r == 0) {
        out.push_back(cur);
        return;
    }
    // next index j at position k = cur.size(): j <= m + (total r0) - k - 1 where
    // the remaining word below must fit; bounds: j >= r-1 ensures room for the
    // strictly smaller tail, j <= m + r - 1 keeps applicability.
    int k = cur.size();
    int hi = cur.idx.empty() ? m + r - 1 : cur.idx.back() - 1;
    (void)k;
    for (int j = hi; j >= r - 1; --j) {
        cur.idx.push_back(j);
        decreasing_words(m, r - 1, cur, out);
        cur.idx.pop_back();
    }
}

}  // namespace

std::vector<NormalSimplex> Presentation::enumerate_degree(int n) const
{
    if (n < 0) throw error("enumerate_degree: negative degree");
    std::vector<NormalSimplex> out;
    for (GenId g = 0; g < gen_count(); ++g) {
        int m = gen(g).degree;
        if (m > n) break;
        std::vector<Word> words;
        Word cur;
        decreasing_words(m, n - m, cur, words);
        std::sort(words.begin(), words.end());
        for (auto& w : words) out.push_back({std::move(w), g});
    }
    return out;
}

std::uint64_t Presentation::count_degree(int n) const
{
    std::uint64_t total = 0;
    for (const Generator& g : gens_)
        if (g.degree <= n) total += binomial(n, g.degree);
    return total;
}

std::string Presentation::repr(const NormalSimplex& z) const
{
    std::ostringstream os;
    for (int j : z.word.idx) os << 's' << j;
    if (!z.word.empty()) os << '.';
    os << gen(z.base).name;
    return os.str();
}

bool Presentation::same_structure(const Presentation& other) const
{
    if (gens_.size() != other.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& a = gens_[i];
        const Generator& b = other.gens_[i];
        if (a.name != b.name || a.degree != b.degree || a.faces != b.faces) return false;
    }
    return true;
}

void Builder::add_generator(const std::string& gen_name, int degree)
{
    if (degree < 0) throw error("generator degree must be nonnegative");
    if (by_name_.count(gen_name)) throw error("duplicate generator '" + gen_name + "'");
    by_name_[gen_name] = specs_.size();
    specs_.push_back({gen_name, degree, {}});
}

bool Builder::has_generator(const std::string& gen_name) const
{
    return by_name_.count(gen_name) != 0;
}

void Builder::set_face(const std::string& of, int i, const Word& word, const std::string& base)
{
    auto it = by_name_.find(of);
    if (it == by_name_.end()) throw error("set_face: unknown generator '" + of + "'");
    specs_[it->second].faces.push_back({i, word, base});
}

Presentation Builder::build() &&
{
    std::sort(specs_.begin(), specs_.end(), [](const GenSpec& a, const GenSpec& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
    });
    Presentation p;
    p.name_ = std::move(name_);
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        p.index_[specs_[i].name] = static_cast<GenId>(i);
        p.gens_.push_back({specs_[i].name, specs_[i].degree, {}});
    }
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        GenSpec& s = specs_[i];
        Generator& g = p.gens_[i];
        if (s.degree == 0) {
            if (!s.faces.empty()) throw error("vertex '" + s.name + "' cannot have faces");
            continue;
        }
        g.faces.resize(static_cast<std::size_t>(s.degree) + 1, NormalSimplex{});
        std::vector<char> seen(static_cast<std::size_t>(s.degree) + 1, 0);
        for (FaceSpec& f : s.faces) {
            if (f.i < 0 || f.i > s.degree)
                throw error("face index " + std::to_string(f.i) + " out of range on '" + s.name + "'");
            if (seen[static_cast<std::size_t>(f.i)])
                throw error("duplicate face " + std::to_string(f.i) + " on '" + s.name + "'");
            seen[static_cast<std::size_t>(f.i)] = 1;
            auto it = p.index_.find(f.base);
            if (it == p.index_.end())
                throw error("face of '" + s.name + "' references unknown '" + f.base + "'");
            GenId b = it->second;
            if (!word_valid(f.word, p.gens_[static_cast<std::size_t>(b)].degree))
                throw error("invalid degeneracy word on face of '" + s.name + "'");
            int fdeg = p.gens_[static_cast<std::size_t>(b)].degree + f.word.size();
            if (fdeg != s.degree - 1)
                throw error("face of '" + s.name + "' has degree " + std::to_string(fdeg) +
                            ", expected " + std::to_string(s.degree - 1));
            g.faces[static_cast<std::size_t>(f.i)] = {f.word, b};
        }
        for (int i = 0; i <= s.degree; ++i)
            if (!seen[static_cast<std::size_t>(i)])
                throw error("missing face " + std::to_string(i) + " on '" + s.name + "'");
    }
    return p;
}

ValidationReport validate(const Presentation& X, int degree_bound)
{
    ValidationReport rep;
    rep.degree_bound = degree_bound;
    auto note = [&](const std::string& where, const std::string& what) {
        rep.issues.push_back({where, what});
    };

    // degeneracy criterion: no generator may satisfy z = s_i d_i z
    for (GenId g = 0; g < X.gen_count(); ++g) {
        int n = X.gen(g).degree;
        if (n == 0) continue;
        NormalSimplex z{{}, g};
        for (int i = 0; i < n; ++i) {
            if (X.degeneracy(X.face(z, i), i) == z) {
                note(X.gen(g).name, "generator equals s_" + std::to_string(i) + " d_" +
                                        std::to_string(i) + " of itself");
                break;
            }
        }
    }

    // identity families on every simplex up to the bound
    for (int n = 0; n <= degree_bound; ++n) {
        for (const NormalSimplex& z : X.enumerate_degree(n)) {
            std::string where = X.name() + "/" + X.repr(z);
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; j <= n; ++j) {
                    if (n >= 2 && i < j) {  // d_i d_j = d_{j-1} d_i
                        if (X.face(X.face(z, j), i) != X.face(X.face(z, i), j - 1))
                            note(where, "d_i d_j identity fails at i=" + std::to_string(i) +
                                            " j=" + std::to_string(j));
                    }
                    if (i <= j && j <= n && i <= n) {  // s_i s_j = s_{j+1} s_i
                        if (X.degeneracy(X.degeneracy(z, j), i) !=
                            X.degeneracy(X.degeneracy(z, i), j + 1))
                            note(where, "s_i s_j identity fails at i=" + std::to_string(i) +
                                            " j=" + std::to_string(j));
                    }
                }
            }
            // mixed identities d_i s_j
            for (int j = 0; j <= n; ++j) {
                NormalSimplex sj = X.degeneracy(z, j);
                for (int i = 0; i <= n + 1; ++i) {
                    NormalSimplex lhs = X.face(sj, i);
                    NormalSimplex rhs;
                    if (i < j) rhs = X.degeneracy(X.face(z, i), j - 1);
                    else if (i == j || i == j + 1) rhs = z;
                    else rhs = X.degeneracy(X.face(z, i - 1), j);
                    if (lhs != rhs)
                        note(where, "d_i s_j identity fails at i=" + std::to_string(i) +
                                        " j=" + std::to_string(j));
                }
            }
        }
    }
    return rep;
}

}  // namespace sset
