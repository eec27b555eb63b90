#include "spslab/pit.hpp"

#include <algorithm>

#include "spslab/primes.hpp"
#include "spslab/rng.hpp"

namespace spslab {

SparsePoly fold_unity(const SparsePoly& p, std::uint64_t order) {
    if (order == 0) throw InputError("fold_unity: order must be >= 1");
    std::vector<Monomial> out;
    out.reserve(p.term_count());
    for (const auto& t : p.monomials()) {
        const std::uint64_t e = mpz_fdiv_ui(t.exponent.get_mpz_t(), order);
        out.push_back({BigInt(static_cast<unsigned long>(e)), t.coefficient});
    }
    return SparsePoly::from_monomials(std::move(out));
}

namespace {

// Screen one integer point through the fixed primes, then confirm a
// vanishing exactly. Returns a witness when the value is nonzero.
std::optional<PitWitness> probe_integer_point(const SpsExpr& e, const BigInt& a,
                                              const ResourceCaps& caps,
                                              std::vector<std::uint64_t>* transcript) {
    for (std::uint64_t q : screening_primes()) {
        if (transcript) transcript->push_back(q);
        const std::uint64_t residue = eval_mod(e, mpz_fdiv_ui(a.get_mpz_t(), q), q);
        if (residue != 0) {
            PitWitness w;
            w.kind = PitWitness::Kind::integer_modular;
            w.point = a;
            w.value = BigInt(static_cast<unsigned long>(residue));
            w.modulus = q;
            return w;
        }
    }
    const BigInt exact = eval_integer(e, a, caps);
    if (sgn(exact) != 0) {
        PitWitness w;
        w.kind = PitWitness::Kind::integer_exact;
        w.point = a;
        w.value = exact;
        return w;
    }
    return std::nullopt;
}

SpsExpr fold_expr(const SpsExpr& e, std::uint64_t order) {
    std::vector<SparsePoly> folded;
    folded.reserve(e.factors().size());
    for (const auto& f : e.factors()) folded.push_back(fold_unity(f, order));
    return SpsExpr(std::move(folded), e.products());
}

} // namespace

PitVerdict pit_hitting_set(const SpsExpr& e, const HittingSetDescr& h,
                           const ResourceCaps& caps) {
    PitVerdict v;
    v.method = "hitting-set";

    if (h.kind == HittingSetDescr::Kind::integer_points) {
        for (const BigInt& a : h.points) {
            if (auto w = probe_integer_point(e, a, caps, &v.primes)) {
                v.outcome = PitOutcome::nonzero;
                v.witness = std::move(w);
                return v;
            }
        }
        v.outcome = PitOutcome::zero;
        return v;
    }

    for (std::uint64_t order : h.orders) {
        if (order > caps.max_product_terms)
            throw ResourceCapError("unity order " + std::to_string(order) +
                                   " exceeds the term cap " +
                                   std::to_string(caps.max_product_terms));
        // Fold factor-wise first (sound on the order-i circle), expand,
        // then fold the expansion down to degree < order.
        const SparsePoly remainder =
            fold_unity(expand(fold_expr(e, order), caps), order);
        if (!remainder.is_zero()) {
            const Monomial& lead = remainder.monomials().front();
            PitWitness w;
            w.kind = PitWitness::Kind::unity_remainder;
            w.point = BigInt(static_cast<unsigned long>(order));
            w.value = lead.coefficient;
            w.exponent = lead.exponent;
            v.outcome = PitOutcome::nonzero;
            v.witness = w;
            return v;
        }
    }
    v.outcome = PitOutcome::zero;
    return v;
}

PitVerdict pit_random_mod(const SpsExpr& e, std::uint64_t trials,
                          std::uint64_t seed, const PitOptions& opts) {
    if (trials == 0) throw InputError("pit_random_mod: need at least one trial");

    const SpsParams params = measure(e);
    const BigInt degree_bound = params.size * params.max_degree; // D = s * deg_max

    // Primes must exceed 2*D or a zero verdict certifies nothing.
    std::uint64_t lo = opts.window_lo;
    const BigInt min_prime = 2 * degree_bound + 1;
    if (min_prime > BigInt(lo)) {
        if (min_prime >= BigInt(opts.window_hi))
            throw InputError("pit_random_mod: degree bound " + degree_bound.get_str() +
                             " needs primes above " + BigInt(2 * degree_bound).get_str() +
                             ", window tops out at " + std::to_string(opts.window_hi));
        lo = to_u64(min_prime);
    }

    PitVerdict v;
    v.method = "random-mod";
    v.seed = seed;

    BigRat miss_bound(1);
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng = Rng::child(seed, i);
        const std::uint64_t q = random_prime(rng, lo, opts.window_hi, opts.prime_retries);
        const std::uint64_t a = rng.below(q);
        v.primes.push_back(q);
        v.eval_points.push_back(a);
        miss_bound *= BigRat(degree_bound, BigInt(static_cast<unsigned long>(q)));
        const std::uint64_t residue = eval_mod(e, a, q);
        if (residue != 0) {
            PitWitness w;
            w.kind = PitWitness::Kind::integer_modular;
            w.point = BigInt(static_cast<unsigned long>(a));
            w.value = BigInt(static_cast<unsigned long>(residue));
            w.modulus = q;
            v.outcome = PitOutcome::nonzero;
            v.witness = w;
            v.error_bound = "0"; // nonzero verdicts are certain
            return v;
        }
    }
    v.outcome = PitOutcome::zero;
    if (miss_bound > 1) miss_bound = 1;
    v.error_bound = miss_bound.get_str();
    return v;
}

PitVerdict pit_exact(const SpsExpr& e, const ResourceCaps& caps) {
    PitVerdict v;
    v.method = "exact";
    const SparsePoly p = expand(e, caps);
    if (p.is_zero()) {
        v.outcome = PitOutcome::zero;
        return v;
    }
    const Monomial& low = p.monomials().front();
    PitWitness w;
    w.kind = PitWitness::Kind::expansion_term;
    w.point = low.exponent;
    w.value = low.coefficient;
    v.outcome = PitOutcome::nonzero;
    v.witness = w;
    return v;
}

bool sufficiency_check(const SpsExpr& e, const std::vector<BigInt>& points,
                       const ResourceCaps& caps) {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("sufficiency_check: points must be distinct");

    const SpsParams params = measure(e);
    const BigInt need = params.size * params.max_degree;
    if (BigInt(static_cast<unsigned long>(points.size())) <= need)
        throw InputError("sufficiency_check: need more than " + need.get_str() +
                         " points, got " + std::to_string(points.size()));

    if (pit_exact(e, caps).outcome == PitOutcome::zero)
        throw InputError("sufficiency_check: expression is identically zero");

    for (const BigInt& a : points)
        if (probe_integer_point(e, a, caps, nullptr))
            return true;

    // A nonzero polynomial of degree <= s*deg_max cannot have more than
    // s*deg_max distinct roots; reaching this line means the arithmetic
    // above is broken.
    throw TheoremViolation("sufficiency_check: nonzero expression vanished on " +
                           std::to_string(points.size()) +
                           " distinct points with degree bound " + need.get_str());
}

} // namespace spslab
