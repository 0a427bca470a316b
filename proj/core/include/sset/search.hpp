#pragma once

#include <functional>

#include "sset/smap.hpp"

namespace sset {

/// Requires act(target, img(gen), word) == required. With an empty word
/// this pins the image exactly.
struct WordConstraint {
    Word word;
    NormalSimplex required;
};

/// Requires q(img(gen)) == expected[gen] for every source generator.
struct PostCondition {
    const SimplicialMap* q;                // target -> T
    std::vector<NormalSimplex> expected;   // per source generator, simplices of T
};

/// Backtracking enumeration of simplicial maps source -> target subject to
/// image constraints. Generators are processed in (degree, name) order, so
/// all faces of a generator are determined before its image is chosen and
/// candidates can be read off a face-table index of the target.
struct MapSearchProblem {
    const Presentation* source = nullptr;
    const Presentation* target = nullptr;
    std::map<GenId, std::vector<WordConstraint>> constraints;
    std::vector<PostCondition> posts;
    bool reversed = false;  // reversed candidate order, for independent re-runs

    void pin(GenId g, const NormalSimplex& image) { constraints[g].push_back({{}, image}); }
};

enum class SearchStatus { complete, truncated };

/// Reusable per-target data: degreewise enumerations and the face-tuple
/// index. Sharing one cache across many searches into the same target
/// amortizes the dominant setup cost.
struct TargetCache {
    const Presentation* target = nullptr;
    std::map<int, std::vector<NormalSimplex>> enums;
    std::map<int, std::map<std::vector<NormalSimplex>, std::vector<NormalSimplex>>> face_index;

    const std::vector<NormalSimplex>& enum_degree(int n);
    const std::vector<NormalSimplex>* candidates_for_faces(int n,
                                                           const std::vector<NormalSimplex>& f);
};

/// Emits every solution in deterministic order; `emit` returns false to stop
/// early. The budget is consumed one unit per candidate placement attempt.
/// `cache`, when given, must belong to prob.target.
SearchStatus search_maps(const MapSearchProblem& prob, Budget& budget,
                         const std::function<bool(const std::vector<NormalSimplex>&)>& emit,
                         TargetCache* cache = nullptr);

struct MapList {
    std::vector<SimplicialMap> maps;
    bool complete = true;  // false when the budget truncated the enumeration
};

/// All simplicial maps A -> X in deterministic order.
MapList enumerate_maps(const Presentation& A, const Presentation& X, Budget budget);

/// First solution of the constrained problem, if any; nullopt with
/// status complete means a verified refutation.
struct SearchResult {
    std::optional<SimplicialMap> map;
    SearchStatus status = SearchStatus::complete;
    std::uint64_t explored = 0;
};
SearchResult find_first_map(const MapSearchProblem& prob, Budget budget,
                            const std::string& name);

}  // namespace sset
