#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sset/delta.hpp"

namespace sset {

/// Index of a nondegenerate generator within one presentation.
using GenId = int;

/// Eilenberg-Zilber normal form: a degeneracy word applied to a
/// nondegenerate generator. The word is empty iff the simplex is
/// nondegenerate. Only meaningful relative to its presentation.
struct NormalSimplex {
    Word word;
    GenId base = -1;

    bool nondegenerate() const { return word.empty(); }
    bool operator==(const NormalSimplex&) const = default;
    auto operator<=>(const NormalSimplex&) const = default;
};

struct Generator {
    std::string name;
    int degree = 0;
    std::vector<NormalSimplex> faces;  // size degree+1; empty for vertices
};

/// A finite simplicial set: nondegenerate generators with faces recorded in
/// normal form. Immutable once built; generators are sorted by
/// (degree, name) so enumeration order and serialization are canonical.
class Presentation {
public:
    Presentation() = default;

    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }

    int gen_count() const { return static_cast<int>(gens_.size()); }
    const Generator& gen(GenId g) const { return gens_[static_cast<std::size_t>(g)]; }
    const std::vector<Generator>& gens() const { return gens_; }

    bool empty() const { return gens_.empty(); }

    /// -1 for the empty simplicial set.
    int dim() const;

    /// Generators of one degree, as a contiguous id range [first, last).
    std::pair<GenId, GenId> degree_range(int degree) const;

    GenId find(const std::string& gen_name) const;  // -1 when absent
    GenId require(const std::string& gen_name) const;

    int degree_of(const NormalSimplex& z) const
    {
        return gen(z.base).degree + z.word.size();
    }

    /// Face table lookup d_i of a generator (degree >= 1).
    const NormalSimplex& face_of_gen(GenId g, int i) const;

    /// Contravariant action z . op for op : [m] -> [deg z]; the workhorse
    /// behind every operator application. Result is in normal form.
    NormalSimplex act(const NormalSimplex& z, const MonoMap& op) const;

    /// Action on a generator, op : [m] -> [deg g].
    NormalSimplex act_gen(GenId g, const MonoMap& op) const;

    NormalSimplex face(const NormalSimplex& z, int i) const;
    NormalSimplex degeneracy(const NormalSimplex& z, int i) const;

    /// All degree-n simplices in canonical order (base id, then word).
    std::vector<NormalSimplex> enumerate_degree(int n) const;

    /// Number of degree-n simplices without materializing them.
    std::uint64_t count_degree(int n) const;

    std::string repr(const NormalSimplex& z) const;

    /// Structural equality ignoring the presentation name.
    bool same_structure(const Presentation& other) const;

    bool operator==(const Presentation& other) const { return same_structure(other); }

private:
    friend class Builder;
    std::string name_;
    std::vector<Generator> gens_;
    std::map<std::string, GenId> index_;
};

/// Accumulates generators and face specifications by name, then resolves
/// and sorts into an immutable Presentation.
class Builder {
public:
    explicit Builder(std::string name) : name_(std::move(name)) {}

    void add_generator(const std::string& gen_name, int degree);
    bool has_generator(const std::string& gen_name) const;

    /// d_i(of) = word . base, both referred to by name.
    void set_face(const std::string& of, int i, const Word& word, const std::string& base);

    /// Sorts by (degree, name), resolves names, checks the face tables are
    /// complete and degree-consistent. Throws sset::error on defects.
    Presentation build() &&;

private:
    struct FaceSpec {
        int i;
        Word word;
        std::string base;
    };
    struct GenSpec {
        std::string name;
        int degree;
        std::vector<FaceSpec> faces;
    };
    std::string name_;
    std::vector<GenSpec> specs_;
    std::map<std::string, std::size_t> by_name_;
};

/// Validation report: invariant violations located by generator/simplex.
struct ValidationIssue {
    std::string where;
    std::string what;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    int degree_bound = 0;
    bool ok() const { return issues.empty(); }
};

/// Checks the simplicial identities (all five families after normal-form
/// reduction) on every simplex up to `degree_bound`, plus the degeneracy
/// criterion z = s_i d_i z on generators (no listed generator may be a
/// disguised degeneracy).
ValidationReport validate(const Presentation& X, int degree_bound);

}  // namespace sset
