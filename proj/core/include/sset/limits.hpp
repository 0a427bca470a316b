#pragma once

#include <functional>

#include "sset/smap.hpp"

namespace sset {

/// X x Y with the pair calculus: degree-n simplices correspond to pairs
/// (X_n, Y_n); a pair is degenerate iff both coordinates are degenerate at a
/// common index, so generators are the pairs whose words share no flat.
struct Product {
    Presentation object;
    Presentation left, right;
    /// per product generator, its two coordinates
    std::vector<std::pair<NormalSimplex, NormalSimplex>> components;

    SimplicialMap proj_left() const;
    SimplicialMap proj_right() const;

    /// Normal form in the product of a coordinate pair of equal degree.
    NormalSimplex pair(const NormalSimplex& a, const NormalSimplex& b) const;

    /// <f, g> : Z -> X x Y for f : Z -> X, g : Z -> Y.
    SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g) const;
};

Product product(const Presentation& X, const Presentation& Y);

/// Positions where the degeneracy word of z is flat, as a sorted list.
std::vector<int> flat_set(const Presentation& X, const NormalSimplex& z);

struct Coproduct {
    Presentation object;
    std::vector<SimplicialMap> injections;
};

/// Disjoint union; identifiers namespaced "i<t>:<name>". The empty list
/// yields the empty simplicial set.
Coproduct coproduct(const std::vector<Presentation>& parts);

struct Pushout {
    Presentation object;
    SimplicialMap from_left;   // B -> P
    SimplicialMap from_right;  // C -> P
};

/// Degreewise pushout of f : A -> B, g : A -> C. Quotient classes are named
/// by their least member with branch prefix "l:"/"r:".
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g);

/// Mediating map for a cocone (u : B -> T, v : C -> T) with u f = v g.
SimplicialMap pushout_mediator(const Pushout& po, const SimplicialMap& u, const SimplicialMap& v);

struct Pullback {
    Presentation object;
    SimplicialMap to_left;   // -> X
    SimplicialMap to_right;  // -> Z
};

/// Degreewise fiber product of f : X -> Y, g : Z -> Y.
Pullback pullback(const SimplicialMap& f, const SimplicialMap& g);

/// Mediating map for a cone (u : T -> X, v : T -> Z) with f u = g v.
SimplicialMap pullback_mediator(const Pullback& pb, const SimplicialMap& u, const SimplicialMap& v);

struct Subcomplex {
    Presentation object;
    SimplicialMap inclusion;
};

/// Smallest face-closed subpresentation of X containing S.
Subcomplex subcomplex_generated(const Presentation& X, const std::vector<NormalSimplex>& S);

/// The image of a map as a subcomplex of its target.
Subcomplex image_subcomplex(const SimplicialMap& f);

}  // namespace sset
