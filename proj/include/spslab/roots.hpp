#ifndef SPSLAB_ROOTS_HPP
#define SPSLAB_ROOTS_HPP

#include <cstdint>
#include <vector>

#include "spslab/sps_expr.hpp"

namespace spslab {

// A named upper bound on real roots, derived from structural
// parameters alone, so it is available even when the instance itself is
// far too large to expand or count.
struct BoundCert {
    enum class Kind {
        // k = 1: a product of m factors with <= t monomials each has at
        // most 2m(t-1)+1 distinct real roots (Descartes per factor,
        // plus possibly 0).
        descartes_product,
        // any k: the expansion has <= k*t^m monomials, so Descartes
        // gives at most 2(k*t^m) - 1 real roots.
        expansion_sum,
        // one t-monomial factor alone: <= 2t-2 nonzero real roots.
        descartes_single,
    };
    Kind kind = Kind::expansion_sum;
    BigInt value;
    std::uint64_t k = 0, m = 0, t = 0;
};

// Requires k, m, t >= 1; descartes_product additionally requires k = 1.
BoundCert bound(BoundCert::Kind kind, std::uint64_t k, std::uint64_t m,
                std::uint64_t t);

// Exact number of distinct real roots, via a Sturm chain over exact
// integer arithmetic. Any power of x is factored out first (it
// contributes the root 0 and nothing else), so lacunary inputs like
// x^(2^40) * (x^2 - 1) stay cheap; after that the degree must be within
// caps.sturm_degree_cap. Rejects the zero polynomial.
std::uint64_t count_real_roots(const SparsePoly& p, const ResourceCaps& caps = {});

// Exact number of distinct integer roots: Sturm bisection isolates the
// real roots into width <= 1/2 intervals, each holding at most one
// integer candidate, which is then confirmed by exact evaluation.
std::uint64_t count_integer_roots(const SparsePoly& p, const ResourceCaps& caps = {});

struct SpsRootCount {
    std::uint64_t real_roots = 0;
    std::uint64_t nonzero_real_roots = 0;
    std::vector<BoundCert> bounds; // every certificate applicable to e
    // The count reached k*m*t, the envelope the hunt leaderboard
    // tracks; nothing proven is violated, it is just rare.
    bool record = false;
};

// Expands, counts, and checks the count against every applicable
// certificate. A proven bound failing is an implementation bug and
// raises TheoremViolation. Identically zero expressions are rejected.
SpsRootCount count_real_roots_sps(const SpsExpr& e, const ResourceCaps& caps = {});

// Chebyshev polynomial of the first kind, T_n, via the three-term
// recurrence. Dense, so n is capped by caps.max_product_terms.
SparsePoly chebyshev(std::uint64_t n, const ResourceCaps& caps = {});

} // namespace spslab

#endif
