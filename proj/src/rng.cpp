#include "spslab/rng.hpp"

#include "spslab/errors.hpp"

namespace spslab {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng Rng::child(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1));
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InputError("Rng::below: empty range");
    if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
    // Reject draws from the tail so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return r % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw InputError("Rng::range: lo > hi");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) // full 64-bit range
        return static_cast<std::int64_t>(next_u64());
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

std::int64_t Rng::nonzero(std::int64_t bound) {
    if (bound < 1) throw InputError("Rng::nonzero: bound must be >= 1");
    // 2*bound candidates; map [0,bound) to negatives, rest to positives.
    const std::uint64_t r = below(2 * static_cast<std::uint64_t>(bound));
    const auto b = static_cast<std::uint64_t>(bound);
    if (r < b) return -static_cast<std::int64_t>(r) - 1;
    return static_cast<std::int64_t>(r - b) + 1;
}

} // namespace spslab
