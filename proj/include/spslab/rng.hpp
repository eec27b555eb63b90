#ifndef SPSLAB_RNG_HPP
#define SPSLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace spslab {

// splitmix64 finalizer, used to mix seeds for stream splitting.
std::uint64_t splitmix64(std::uint64_t z);

// Deterministic generator. mt19937_64 raw outputs are pinned by the
// standard, and all bounded draws below use hand-rolled rejection
// sampling, so sequences are identical across platforms and library
// versions (std::uniform_int_distribution makes no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Independent child stream. Instances of a batch each get their own
    // stream keyed by index, so results do not depend on visit order.
    static Rng child(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);

    // Uniform in [lo, hi], inclusive on both ends.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

    // Uniform over nonzero values of [-bound, bound], bound >= 1.
    std::int64_t nonzero(std::int64_t bound);

    static const char* name() { return "mt19937_64/splitmix-split"; }

private:
    std::mt19937_64 engine_;
};

} // namespace spslab

#endif
