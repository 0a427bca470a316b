#pragma once

#include "sset/minimal.hpp"

namespace sset {

struct CorpusLimits {
    int max_dim = 2;
    int max_nondegenerate = 50;
};

/// Deterministic family of objects, maps, verified fibrations and anodyne
/// traces. The seed feeds downstream randomized pickers and is recorded;
/// the family itself is a function of the limits alone.
struct Corpus {
    std::uint64_t seed = 0;
    CorpusLimits limits;
    std::vector<Presentation> objects;
    std::vector<SimplicialMap> maps;
    std::vector<SimplicialMap> fibrations;  // verified up to fibration_check_dim
    int fibration_check_dim = 0;
    std::vector<std::pair<SimplicialMap, TruncationWaiver>> waived_fibrations;
    std::vector<AnodyneTrace> traces;

    const Presentation* object(const std::string& name) const;
    std::string digest() const;  // stable hash of the canonical serializations
};

Corpus generate_corpus(std::uint64_t seed, CorpusLimits limits, Budget budget);

}  // namespace sset
