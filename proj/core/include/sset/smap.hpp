#pragma once

#include <memory>
#include <utility>

#include "sset/presentation.hpp"

namespace sset {

using PresPtr = std::shared_ptr<const Presentation>;

/// A simplicial map determined by the images (possibly degenerate) of the
/// source's nondegenerate generators. Presentations are immutable and
/// shared, so maps copy cheaply.
class SimplicialMap {
public:
    SimplicialMap();
    SimplicialMap(std::string name, Presentation src, Presentation tgt,
                  std::vector<NormalSimplex> images);
    SimplicialMap(std::string name, PresPtr src, PresPtr tgt,
                  std::vector<NormalSimplex> images);

    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }
    const Presentation& source() const { return *src_; }
    const Presentation& target() const { return *tgt_; }
    const PresPtr& source_ptr() const { return src_; }
    const PresPtr& target_ptr() const { return tgt_; }
    const std::vector<NormalSimplex>& images() const { return images_; }
    const NormalSimplex& image_of(GenId g) const { return images_[static_cast<std::size_t>(g)]; }

    /// f(z) for any simplex z of the source, in target normal form.
    NormalSimplex apply(const NormalSimplex& z) const;

    /// Same map up to renaming (sources, targets and images structurally equal).
    bool same_map(const SimplicialMap& other) const;

private:
    std::string name_;
    PresPtr src_;
    PresPtr tgt_;
    std::vector<NormalSimplex> images_;
};

SimplicialMap identity_map(const Presentation& X);

/// g o f; requires f.target() == g.source() structurally.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// The unique map X -> Delta^0-like target (one vertex, no higher gens).
SimplicialMap terminal_map(const Presentation& X, const Presentation& point);

/// The unique map from the empty simplicial set.
SimplicialMap map_from_empty(const Presentation& Y);

/// Constant map at a vertex of Y.
SimplicialMap constant_map(const Presentation& X, const Presentation& Y, GenId vertex);

/// Inclusion of a subcomplex whose generator names are a subset of Y's.
SimplicialMap inclusion_by_names(const Presentation& sub, const Presentation& whole);

/// The vertex degenerated up to the given degree.
NormalSimplex degenerate_vertex(const Presentation& X, GenId vertex, int degree);

/// Checks that the map commutes with all face operators on generators
/// (degeneracy compatibility is then automatic; it is re-asserted on
/// simplices up to `degeneracy_check_bound` when that is >= 0).
ValidationReport validate_map(const SimplicialMap& f, int degeneracy_check_bound = -1);

/// Degreewise injectivity up to degree d: equivalent to generator images
/// being nondegenerate and pairwise distinct. On failure the witness is a
/// pair of distinct simplices with equal image.
Checked<std::pair<NormalSimplex, NormalSimplex>> is_degreewise_injective(const SimplicialMap& f,
                                                                         int d);

/// True when f maps generators bijectively onto generators (empty words);
/// such a map is an isomorphism of presentations iff it is also a valid map
/// in both directions. Returns the inverse when it exists.
std::optional<SimplicialMap> inverse_iso(const SimplicialMap& f);

}  // namespace sset
