#ifndef SPSLAB_PIT_HPP
#define SPSLAB_PIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spslab/generators.hpp"
#include "spslab/sps_expr.hpp"

namespace spslab {

enum class PitOutcome { zero, nonzero };

// Evidence attached to a nonzero verdict. Every kind is reproducible:
// rerun the named evaluation and the same nonzero value must appear.
struct PitWitness {
    enum class Kind {
        integer_exact,   // E(point) = value over the integers
        integer_modular, // E(point) = value mod modulus
        unity_remainder, // folding at order `point` left value * x^exponent
        expansion_term,  // expansion contains value * x^point
    };
    Kind kind = Kind::integer_exact;
    BigInt point;    // evaluation point, unity order, or term exponent
    BigInt value;    // the nonzero number observed
    BigInt exponent; // unity_remainder only: exponent of the coefficient
    std::uint64_t modulus = 0;
};

struct PitVerdict {
    PitOutcome outcome = PitOutcome::zero;
    std::optional<PitWitness> witness;
    std::string method;
    std::uint64_t seed = 0;                // random method only
    std::vector<std::uint64_t> primes;     // moduli used, in order
    std::vector<std::uint64_t> eval_points; // random method: point per trial
    // Upper bound on P(wrong verdict), as an exact rational string.
    // "0" for the deterministic methods.
    std::string error_bound = "0";
};

// Deterministic test against an explicit vanishing set. A `zero`
// verdict means E vanished on every point of the set; callers supply a
// set that is hitting for their class to conclude E == 0.
//
// Integer points are screened through three fixed word-size primes and
// escalated to exact evaluation only when every residue vanishes, so a
// nonzero point almost always costs three cheap modular passes.
// Root-of-unity orders are handled by exponent folding: E mod (x^i - 1)
// has degree < i, and a nonzero remainder cannot vanish on all i of the
// i-th roots of unity, so the remainder being zero is exactly "E
// vanishes on the whole order-i circle". Orders beyond
// caps.max_product_terms are refused.
PitVerdict pit_hitting_set(const SpsExpr& e, const HittingSetDescr& h,
                           const ResourceCaps& caps = {});

struct PitOptions {
    std::uint64_t window_lo = 1ULL << 61;
    std::uint64_t window_hi = 1ULL << 62;
    unsigned prime_retries = 10'000;
    ResourceCaps caps{};
};

// Randomized test: per trial, draw a prime q from the window (raised if
// needed so q > 2*D, D = s * deg_max), draw a point mod q, evaluate.
// One-sided: nonzero verdicts are certain, a zero verdict is wrong with
// probability at most prod(D/q_i), reported in error_bound. Throws
// InputError when the window cannot supply primes above 2*D.
PitVerdict pit_random_mod(const SpsExpr& e, std::uint64_t trials,
                          std::uint64_t seed, const PitOptions& opts = {});

// Ground truth by full expansion (subject to the expansion caps). The
// witness is the expansion's lowest nonzero term.
PitVerdict pit_exact(const SpsExpr& e, const ResourceCaps& caps = {});

// Checks the interpolation guarantee on which hitting sets rest: given
// strictly more distinct integer points than s * deg_max, a nonzero E
// must fail to vanish somewhere on them. Returns true when a nonzero
// point exists. Too few points or an identically zero E are input
// errors; a nonzero E vanishing on all points is mathematically
// impossible, so that raises TheoremViolation.
bool sufficiency_check(const SpsExpr& e, const std::vector<BigInt>& points,
                       const ResourceCaps& caps = {});

// E mod (x^order - 1): exponents reduced mod order, terms merged.
SparsePoly fold_unity(const SparsePoly& p, std::uint64_t order);

} // namespace spslab

#endif
