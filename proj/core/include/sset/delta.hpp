#pragma once

#include <vector>

#include "sset/basics.hpp"

namespace sset {

/// A monotone map [m] -> [n] between finite ordinals [k] = {0,...,k}.
/// These are the morphisms of the simplex category; every composite of face
/// and degeneracy operators is one, so all operator algebra reduces to
/// composing and factoring them.
struct MonoMap {
    int cod = 0;              // n
    std::vector<int> vals;    // vals[t] in [0, cod], nondecreasing; size m+1

    int dom() const { return static_cast<int>(vals.size()) - 1; }

    bool operator==(const MonoMap&) const = default;
};

/// Identity of [n].
MonoMap mono_identity(int n);

/// Coface delta_i : [n-1] -> [n], the injection missing i (0 <= i <= n).
MonoMap mono_delta(int i, int n);

/// Codegeneracy sigma_i : [n+1] -> [n], hitting i twice (0 <= i <= n).
MonoMap mono_sigma(int i, int n);

/// after o before (apply `before` first). Requires before.cod == after.dom().
MonoMap mono_compose(const MonoMap& after, const MonoMap& before);

bool mono_is_surjective(const MonoMap& m);
bool mono_is_injective(const MonoMap& m);

/// Epi-mono factorization m = inj o surj.
struct EpiMono {
    MonoMap surj;
    MonoMap inj;
};
EpiMono mono_factor(const MonoMap& m);

/// Degeneracy word s_{j1} s_{j2} ... s_{jr} in application-normal form:
/// indices strictly decreasing left to right (j1 > j2 > ... > jr), the
/// rightmost operator applying first. The empty word is the identity.
struct Word {
    std::vector<int> idx;

    bool empty() const { return idx.empty(); }
    int size() const { return static_cast<int>(idx.size()); }
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
};

/// Whether `w` is strictly decreasing and applicable to a degree-m simplex.
bool word_valid(const Word& w, int base_degree);

/// The surjection [base_degree + |w|] -> [base_degree] realized by `w`.
MonoMap word_to_surj(const Word& w, int base_degree);

/// Canonical decreasing word of a surjection (inverse of word_to_surj).
Word surj_to_word(const MonoMap& surj);

}  // namespace sset
