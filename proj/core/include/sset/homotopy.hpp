#pragma once

#include "sset/lifting.hpp"

namespace sset {

/// X x I with its end inclusions and projection.
struct Cylinder {
    Product prod;
    SimplicialMap e0, e1;   // X -> X x I
    SimplicialMap proj;     // X x I -> X
};

Cylinder cylinder(const Presentation& X);

/// fl x fr between two constructed products.
SimplicialMap product_map(const Product& dst, const SimplicialMap& fl, const SimplicialMap& fr,
                          const Product& src);

/// One-step homotopy witness h : X x I -> Y; when forward is false the
/// witness runs from g to f.
struct HomotopyWitness {
    SimplicialMap h;
    bool forward = true;
};

struct HomotopyResult {
    LiftOutcome outcome = LiftOutcome::inconclusive;
    std::optional<HomotopyWitness> witness;
};

/// Searches one-step homotopies in both orientations; `none` is reported
/// only when the enumeration of maps X x I -> Y was exhaustive.
HomotopyResult are_homotopic(const SimplicialMap& f, const SimplicialMap& g, Budget budget);

/// A chain of one-step homotopies connecting two maps.
struct HomotopyChain {
    std::vector<HomotopyWitness> steps;
};

/// Hom(X,Z) partitioned by the equivalence closure of one-step homotopy.
/// The closure is taken explicitly because finite Z need not be Kan; the
/// full one-step matrix is kept so the Kan case can be checked against
/// the closure.
struct HomotopyClassTable {
    Presentation X, Z;
    std::vector<SimplicialMap> maps;
    std::vector<int> class_of;            // map index -> class id
    std::vector<int> representatives;     // class id -> least map index
    std::vector<std::vector<int>> one_step;  // one_step[i][j]: edge index or -1
    struct Edge {
        int from, to;
        SimplicialMap h;
    };
    std::vector<Edge> edges;
    bool complete = true;

    int class_count() const { return static_cast<int>(representatives.size()); }
    /// Index of a map equal to f (same images), -1 when absent.
    int index_of(const SimplicialMap& f) const;
    /// Witness chain connecting maps[i] to maps[j] inside one class.
    std::optional<HomotopyChain> connect(int i, int j) const;
    /// The one-step relation is already symmetric and transitive.
    bool one_step_is_equivalence() const;
};

HomotopyClassTable homotopy_set(const Presentation& X, const Presentation& Z, Budget budget);

/// Vertices modulo the edge-generated equivalence (no Kan assumption).
struct Pi0 {
    std::vector<int> component_of;  // per vertex GenId (vertices come first)
    std::vector<GenId> representatives;
    int count() const { return static_cast<int>(representatives.size()); }
};

Pi0 pi_zero(const Presentation& X);

/// Degreewise view of the function complex Hom(A, X): degree-n elements
/// are maps A x Delta^n -> X, with operators by precomposition.
struct FunctionComplexView {
    Presentation A, X;
    std::vector<Product> products;              // A x Delta^n per degree
    std::vector<std::vector<SimplicialMap>> elements;
    std::vector<bool> complete_at;

    int degree_bound() const { return static_cast<int>(elements.size()) - 1; }
    int index_in_degree(int n, const SimplicialMap& m) const;
    /// d_i / s_i as indices into the neighbouring degree list.
    int element_face(int n, int idx, int i) const;
    int element_degeneracy(int n, int idx, int i) const;
};

FunctionComplexView function_complex(const Presentation& A, const Presentation& X, int d,
                                     Budget budget);

struct HomotopyInverse {
    LiftOutcome outcome = LiftOutcome::inconclusive;
    std::optional<SimplicialMap> inverse;
    HomotopyChain gf_to_id;  // witness g o f ~ 1_X
    HomotopyChain fg_to_id;  // witness f o g ~ 1_Y
};

HomotopyInverse find_homotopy_inverse(const SimplicialMap& f, Budget budget);

/// A target with its Kan certificate.
struct KanTarget {
    Presentation Z;
    int certified_dim = -1;  // is_kan_complex_up_to held up to this degree
};

/// Helper producing a certified target (certified_dim = -1 when the check
/// failed or was inconclusive).
KanTarget certify_kan(const Presentation& Z, int d, Budget budget);

struct WeqTargetReport {
    std::string target;
    bool rejected = false;       // missing/insufficient Kan certificate
    std::string note;
    int classes_source = 0;      // |[X,Z]|
    int classes_target = 0;      // |[Y,Z]|
    Verdict bijective = Verdict::inconclusive;
};

/// Family-relative verdict: "consistent with weak equivalence over the
/// given family", never a proof for all Z.
struct WeqReport {
    std::vector<WeqTargetReport> targets;
    Verdict overall = Verdict::inconclusive;
    std::string note;
};

WeqReport is_weak_equivalence_against(const SimplicialMap& f,
                                      const std::vector<KanTarget>& targets, Budget budget);

}  // namespace sset
