#pragma once

#include "sset/smap.hpp"

namespace sset {

enum class StandardKind { simplex, boundary, horn, interval, interval_boundary };

/// Canonical presentation of a standard object. Generators are the injective
/// monotone vertex tuples, named by their vertex lists ("0", "02", "012").
/// `interval` is Delta^1 and `interval_boundary` its boundary.
/// Horn parameters: p >= 1 and 0 <= k <= p, else invalid-parameter.
Presentation generate_standard(StandardKind kind, int p, int k = -1);

Presentation standard_simplex(int p);
Presentation standard_boundary(int p);
Presentation standard_horn(int p, int k);
Presentation interval();           // I
Presentation interval_boundary();  // I-dot
Presentation terminal_point();     // Delta^0 named "pt"
Presentation empty_sset();

/// Discrete simplicial set on n vertices "a0".."a{n-1}".
Presentation discrete_set(int n);

/// Nerve of the pair groupoid on `objects` elements ("a", "b", ...),
/// truncated at dimension `dim`: the explicit presentation whose
/// nondegenerate k-simplices are words with distinct consecutive letters.
Presentation pair_groupoid_nerve(int objects, int dim);

/// Generator name used by the standard presentations for a vertex tuple.
std::string tuple_name(const std::vector<int>& vertices);

/// In a presentation built by generate_standard(simplex, p) (or a
/// subcomplex of it), every simplex *is* a monotone map into [p]; these
/// convert between normal form and the vertex tuple.
std::vector<int> simplex_to_tuple(const Presentation& std_like, const NormalSimplex& z);
NormalSimplex tuple_to_simplex(const Presentation& std_like, const std::vector<int>& tuple);

/// The simplicial map between standard simplices induced by a monotone map
/// alpha : [dom] -> [cod]; from and to must be standard_simplex(dom/cod).
SimplicialMap standard_map(const Presentation& from, const Presentation& to,
                           const MonoMap& alpha);

/// The map Delta^n -> X classifying a degree-n simplex z (Yoneda).
SimplicialMap yoneda_map(const Presentation& X, const NormalSimplex& z);

}  // namespace sset
