#pragma once

#include "sset/limits.hpp"
#include "sset/search.hpp"

namespace sset {

/// Commutative square: p o top = bottom o i, with i : A -> B the left leg
/// and p : X -> Y the right leg.
struct LiftingSquare {
    SimplicialMap i, p, top, bottom;
};

bool square_commutes(const LiftingSquare& sq);

enum class LiftOutcome { found, none, inconclusive };

struct LiftResult {
    LiftOutcome outcome = LiftOutcome::inconclusive;
    std::optional<SimplicialMap> lift;  // diagonal B -> X when found
    std::uint64_t explored = 0;
    bool exhaustive = false;  // `none` is certified only when true
};

/// Exhaustive diagonal search. Throws on a non-commuting square. The first
/// lift in candidate order is returned, so results are canonical; pass
/// reversed = true for an independent re-enumeration. A shared cache for
/// the right leg's source amortizes repeated solves.
LiftResult solve_lift(const LiftingSquare& sq, Budget budget, bool reversed = false,
                      TargetCache* cache = nullptr);

/// Re-verifies both composite equations, independently of the search.
bool verify_lift(const LiftingSquare& sq, const SimplicialMap& diagonal);

/// Generating families of inclusions.
struct MapFamily {
    enum class Kind { horns, boundaries, explicit_list } kind = Kind::horns;
    int dim = 0;
    std::vector<SimplicialMap> members;  // for explicit_list

    static MapFamily horns(int dim);
    static MapFamily boundaries(int dim);
    static MapFamily explicit_list(std::vector<SimplicialMap> members);

    /// Materialized inclusions in deterministic order (dimension ascending).
    std::vector<SimplicialMap> inclusions() const;
};

/// Right lifting property of p against every square with left leg in the
/// family, dimension <= d. Fails with the first unsolvable square;
/// inconclusive when any solve or enumeration was budget-truncated.
Checked<LiftingSquare> has_rlp(const SimplicialMap& p, const MapFamily& fam, int d,
                               Budget budget);

Checked<LiftingSquare> is_kan_fibration_up_to(const SimplicialMap& f, int d, Budget budget);
Checked<LiftingSquare> is_kan_complex_up_to(const Presentation& X, int d, Budget budget);

/// One stage of an anodyne construction: horn cells attached simultaneously.
struct HornCell {
    int p = 0, k = 0;
    SimplicialMap attach;  // Horn(p,k) -> current stage object
};

struct TraceStage {
    std::vector<HornCell> cells;
};

/// Certificate that an inclusion lies in the saturation of the horn family:
/// replaying the stages rebuilds it as a composite of pushouts of coproducts
/// of horn inclusions.
struct AnodyneTrace {
    std::string name;
    Presentation start;
    std::vector<TraceStage> stages;
};

struct TraceReplay {
    bool accepted = false;
    int bad_stage = -1;      // stage index when rejected
    std::string diagnostic;
    Presentation result;
    SimplicialMap inclusion;               // start -> result
    std::vector<Presentation> stage_objects;  // after each stage
    std::vector<SimplicialMap> stage_inclusions;
    std::vector<SimplicialMap> stage_cells;    // coproduct of simplices -> stage object
    std::vector<std::vector<SimplicialMap>> stage_cell_injections;
};

TraceReplay replay_anodyne(const AnodyneTrace& tr);

/// Left lifting property of i against a corpus of fibrations: every
/// commuting square is enumerated and solved.
struct LlpEntry {
    std::string fibration;
    int squares = 0;
    int solved = 0;
    std::vector<LiftingSquare> unsolved;
    bool truncated = false;
};

struct LlpReport {
    std::vector<LlpEntry> entries;
    bool all_solved() const;
    bool any_truncated() const;
};

LlpReport check_llp_against(const SimplicialMap& i,
                            const std::vector<SimplicialMap>& fibrations, Budget budget);

}  // namespace sset
