#include "spslab/primes.hpp"

#include "spslab/errors.hpp"

namespace spslab {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

bool mr_composite_witness(std::uint64_t n, std::uint64_t a,
                          std::uint64_t d, int s) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true; // a witnesses compositeness
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (mr_composite_witness(n, a, d, s)) return false;
    }
    return true;
}

std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi,
                           unsigned max_tries) {
    if (lo >= hi) throw InputError("random_prime: empty window");
    for (unsigned i = 0; i < max_tries; ++i) {
        std::uint64_t c = lo + rng.below(hi - lo);
        if (is_prime_u64(c)) return c;
    }
    throw PrimeSearchError("random_prime: no prime found in [" +
                           std::to_string(lo) + ", " + std::to_string(hi) +
                           ") after " + std::to_string(max_tries) + " draws");
}

const std::array<std::uint64_t, 3>& screening_primes() {
    static const std::array<std::uint64_t, 3> primes = [] {
        std::array<std::uint64_t, 3> out{};
        std::uint64_t c = (1ULL << 61) + 1;
        for (std::size_t i = 0; i < out.size(); c += 2) {
            if (is_prime_u64(c)) out[i++] = c;
        }
        return out;
    }();
    return primes;
}

} // namespace spslab
