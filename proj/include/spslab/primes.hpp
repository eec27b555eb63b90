#ifndef SPSLAB_PRIMES_HPP
#define SPSLAB_PRIMES_HPP

#include <array>
#include <cstdint>

#include "spslab/rng.hpp"

namespace spslab {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin, correct for the full 64-bit range with
// the first twelve primes as witness set.
bool is_prime_u64(std::uint64_t n);

// Uniform prime in [lo, hi) by rejection; throws PrimeSearchError after
// max_tries failed draws.
std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi,
                           unsigned max_tries = 10'000);

// The three fixed word-size primes used to screen integer evaluations
// before escalating to exact arithmetic: the smallest primes >= 2^61.
const std::array<std::uint64_t, 3>& screening_primes();

} // namespace spslab

#endif
