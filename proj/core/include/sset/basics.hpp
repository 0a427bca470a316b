#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sset {

/// Error for violated preconditions and malformed inputs.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Three-valued verdict for degree-bounded checks. `inconclusive` means a
/// search budget ran out before the question was settled; it is never
/// conflated with `fails`.
enum class Verdict { holds, fails, inconclusive };

inline const char* to_string(Verdict v)
{
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "inconclusive";
    }
}

/// Result of a universally quantified check performed up to a degree bound.
template <class W>
struct Checked {
    Verdict verdict = Verdict::inconclusive;
    int bound = -1;  // the degree bound the verdict refers to
    std::optional<W> witness;
    std::string note;

    bool holds() const { return verdict == Verdict::holds; }
    bool fails() const { return verdict == Verdict::fails; }
};

/// Search budget counted in candidate placements, not wall-clock.
struct Budget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;

    Budget() = default;
    explicit Budget(std::uint64_t lim) : limit(lim) {}

    bool exhausted() const { return used >= limit; }

    /// Consume `n` units; returns false once the budget is gone.
    bool tick(std::uint64_t n = 1)
    {
        used += n;
        return used <= limit;
    }
};

/// Binomial coefficient, exact for the small arguments used here.
inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

/// splitmix64: tiny deterministic PRNG, identical output on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

/// FNV-1a digest of a byte string, hex-encoded; used for stable input digests.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace sset
