#include "sset/search.hpp"

#include <algorithm>

namespace sset {

const std::vector<NormalSimplex>& TargetCache::enum_degree(int n)
{
    auto it = enums.find(n);
    if (it == enums.end()) it = enums.emplace(n, target->enumerate_degree(n)).first;
    return it->second;
}

const std::vector<NormalSimplex>* TargetCache::candidates_for_faces(
    int n, const std::vector<NormalSimplex>& faces)
{
    auto& idx = face_index[n];
    if (idx.empty()) {
        for (const NormalSimplex& c : enum_degree(n)) {
            std::vector<NormalSimplex> key;
            key.reserve(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) key.push_back(target->face(c, i));
            idx[key].push_back(c);
        }
    }
    auto it = idx.find(faces);
    return it == idx.end() ? nullptr : &it->second;
}

namespace {

struct SearchContext {
    const MapSearchProblem& prob;
    Budget& budget;
    const std::function<bool(const std::vector<NormalSimplex>&)>& emit;
    TargetCache& cache;
    std::vector<NormalSimplex> assigned;
    bool stop = false;
    bool truncated = false;

    // partial image of a source simplex whose base is already assigned
    NormalSimplex partial_image(const NormalSimplex& z) const
    {
        const NormalSimplex& img = assigned[static_cast<std::size_t>(z.base)];
        if (z.word.empty()) return img;
        return prob.target->act(img,
                                word_to_surj(z.word, prob.source->gen(z.base).degree));
    }

    bool candidate_ok(GenId g, const NormalSimplex& c)
    {
        int n = prob.source->gen(g).degree;
        auto cit = prob.constraints.find(g);
        if (cit != prob.constraints.end()) {
            for (const WordConstraint& wc : cit->second) {
                NormalSimplex lhs =
                    wc.word.empty() ? c : prob.target->act(c, word_to_surj(wc.word, n));
                if (lhs != wc.required) return false;
            }
        }
        for (const PostCondition& pc : prob.posts) {
            if (pc.q->apply(c) != pc.expected[static_cast<std::size_t>(g)]) return false;
        }
        return true;
    }

    void rec(GenId g)
    {
        if (stop) return;
        if (g == prob.source->gen_count()) {
            if (!emit(assigned)) stop = true;
            return;
        }
        int n = prob.source->gen(g).degree;
        const std::vector<NormalSimplex>* cands = nullptr;
        std::vector<NormalSimplex> expected_faces;
        if (n >= 1) {
            expected_faces.reserve(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                expected_faces.push_back(partial_image(prob.source->face_of_gen(g, i)));
            cands = cache.candidates_for_faces(n, expected_faces);
        } else {
            cands = &cache.enum_degree(0);
        }
        if (cands == nullptr) return;
        auto try_one = [&](const NormalSimplex& c) {
            if (stop) return;
            if (!budget.tick()) {
                truncated = true;
                stop = true;
                return;
            }
            if (!candidate_ok(g, c)) return;
            assigned[static_cast<std::size_t>(g)] = c;
            rec(g + 1);
        };
        if (prob.reversed) {
            for (auto it = cands->rbegin(); it != cands->rend(); ++it) try_one(*it);
        } else {
            for (const NormalSimplex& c : *cands) try_one(c);
        }
    }
};

}  // namespace

SearchStatus search_maps(const MapSearchProblem& prob, Budget& budget,
                         const std::function<bool(const std::vector<NormalSimplex>&)>& emit,
                         TargetCache* cache)
{
    for (const PostCondition& pc : prob.posts)
        if (static_cast<int>(pc.expected.size()) != prob.source->gen_count())
            throw error("search_maps: postcondition size mismatch");
    TargetCache local;
    local.target = prob.target;
    if (cache == nullptr) cache = &local;
    else if (cache->target != prob.target)
        throw error("search_maps: cache does not belong to the target");
    SearchContext ctx{prob, budget, emit, *cache, {}, false, false};
    ctx.assigned.resize(static_cast<std::size_t>(prob.source->gen_count()));
    ctx.rec(0);
    return ctx.truncated ? SearchStatus::truncated : SearchStatus::complete;
}

MapList enumerate_maps(const Presentation& A, const Presentation& X, Budget budget)
{
    MapSearchProblem prob;
    prob.source = &A;
    prob.target = &X;
    auto sa = std::make_shared<const Presentation>(A);
    auto sx = std::make_shared<const Presentation>(X);
    MapList out;
    int counter = 0;
    SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& images) {
        out.maps.emplace_back("m" + std::to_string(counter++), sa, sx, images);
        return true;
    });
    out.complete = (st == SearchStatus::complete);
    return out;
}

SearchResult find_first_map(const MapSearchProblem& prob, Budget budget, const std::string& name)
{
    SearchResult res;
    SearchStatus st = search_maps(prob, budget, [&](const std::vector<NormalSimplex>& images) {
        res.map = SimplicialMap(name, *prob.source, *prob.target, images);
        return false;
    });
    res.status = st;
    res.explored = budget.used;
    // a truncated run that still found a map counts as settled
    if (res.map.has_value()) res.status = SearchStatus::complete;
    return res;
}

}  // namespace sset
