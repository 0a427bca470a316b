#pragma once

#include "sset/homotopy.hpp"

namespace sset {

/// One enumerated square from a generating family member into (G, Y).
struct SoaSquare {
    int p = 0, k = -1;   // horn parameters; k = -1 for boundary members
    SimplicialMap top;   // S -> G_{n-1}
    SimplicialMap bottom;  // T -> Y
};

/// One stage of the small object argument: all family squares into the
/// current stage are enumerated (solvable ones included) and their cells
/// attached by a single pushout of the coproduct.
struct SoaStage {
    Presentation object;      // G_n
    SimplicialMap inclusion;  // G_{n-1} -> G_n (pushout leg)
    SimplicialMap projection; // p_n : G_n -> Y
    SimplicialMap cells;      // coproduct of the T's -> G_n (other pushout leg)
    std::vector<SimplicialMap> cell_injections;  // T_q -> coproduct
    std::vector<SoaSquare> squares;
    bool truncated = false;   // square enumeration hit the budget
};

SoaStage soa_stage(const SimplicialMap& f, const MapFamily& fam, int d, Budget& budget);

struct Factorization {
    SimplicialMap left;   // X -> G_N, degreewise injective
    SimplicialMap right;  // p_N : G_N -> Y, with right o left = f exactly
    std::vector<SoaStage> stages;
    std::optional<AnodyneTrace> trace;  // emitted when the family is horns
    Checked<LiftingSquare> rlp_report;  // right leg vs the family, dim <= d
    Checked<std::pair<NormalSimplex, NormalSimplex>> left_injectivity;
    bool truncated = false;
};

/// N staged cell attachments followed by an RLP report on the right leg.
/// Reports always state (N, d); unresolved RLP at the bound stays
/// three-valued.
Factorization factorize(const SimplicialMap& f, const MapFamily& fam, int N, int d,
                        Budget budget);

struct FibrantApproxStage {
    int stages = 0;
    Presentation object;      // staged approximation of the fibrant replacement
    SimplicialMap inclusion;  // X -> object, replayable as an anodyne trace
    AnodyneTrace trace;
    Checked<LiftingSquare> kan_report;
};

FibrantApproxStage fibrant_approx_staged(const Presentation& X, int N, int d, Budget budget);

/// A x I union B x Idot inside B x I, for a degreewise injection i : A -> B.
struct CylinderUnion {
    Product cylinder;         // B x I
    Presentation object;      // the union subcomplex
    SimplicialMap inclusion;  // union -> B x I
};

CylinderUnion cylinder_union_inclusion(const SimplicialMap& i);

/// The map G_n(f) -> G_n(f') induced on stage objects by a commuting square
/// (a, b) : f -> f', given the map already induced on the previous stage.
/// Exists because squares of f transport to squares of f'; stage
/// construction is deterministic, which makes the factorization functorial.
std::optional<SimplicialMap> induced_stage_map(const SoaStage& stage_f,
                                               const SoaStage& stage_f2,
                                               const SimplicialMap& a_prev,
                                               const SimplicialMap& b);

}  // namespace sset
