#pragma once

#include "sset/corpus.hpp"

namespace sset {

struct CheckResult {
    std::string id;
    Verdict verdict = Verdict::inconclusive;
    std::string detail;
    std::string witness;  // nonempty for every `fails`, replayable by the CLI
    int bound = -1;
    double ms = 0.0;
};

struct Report {
    int schema = 1;
    std::string suite;
    std::string tool_version;
    std::map<std::string, std::string> inputs;  // name -> digest
    std::vector<CheckResult> checks;

    Verdict overall() const;
    /// Deterministic JSON; timing fields are emitted only when requested so
    /// reports stay byte-identical across runs.
    std::string to_json(bool with_timings = true) const;
};

struct McConfig {
    int dim = 2;
    int stages = 2;
    std::uint64_t seed = 7;
    Budget budget = Budget(50'000'000);
};

/// Instance checks for MC1-MC5 over the corpus: verdict-level statements
/// about the tool's verified classes, never claimed as proofs of the axioms.
Report verify_mc_suite(const Corpus& corpus, const McConfig& cfg);

}  // namespace sset
