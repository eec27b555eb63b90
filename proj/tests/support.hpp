#ifndef SPSLAB_TESTS_SUPPORT_HPP
#define SPSLAB_TESTS_SUPPORT_HPP

#include <utility>
#include <vector>

#include "spslab/harness.hpp"
#include "spslab/rng.hpp"
#include "spslab/sparse_poly.hpp"

namespace spslab::testing {

// Terse builder: P({{exp, coeff}, ...}).
inline SparsePoly P(const std::vector<std::pair<long, long>>& terms) {
    std::vector<Monomial> ms;
    ms.reserve(terms.size());
    for (const auto& [e, c] : terms)
        ms.push_back({BigInt(e), BigInt(c)});
    return SparsePoly::from_monomials(std::move(ms));
}

inline SparsePoly rand_poly(Rng& rng, std::uint64_t max_terms,
                            std::uint64_t exp_bound, std::int64_t coeff_bound) {
    const std::uint64_t t = 1 + rng.below(max_terms);
    std::vector<Monomial> ms;
    for (std::uint64_t i = 0; i < t; ++i)
        ms.push_back({BigInt(static_cast<unsigned long>(rng.below(exp_bound + 1))),
                      BigInt(static_cast<long>(rng.nonzero(coeff_bound)))});
    return SparsePoly::from_monomials(std::move(ms));
}

// Random nonzero expression drawn through the library's own generator.
inline SpsExpr rand_expr(Rng& rng, std::uint64_t k_max, std::uint64_t m_max,
                         std::uint64_t t_max, std::uint64_t exp_bound = 12,
                         std::int64_t coeff_bound = 9) {
    ExperimentConfig cfg;
    cfg.k = {1, k_max};
    cfg.m = {1, m_max};
    cfg.t = {1, t_max};
    cfg.exp_bound = exp_bound;
    cfg.coeff_bound = coeff_bound;
    return generate_instance(cfg, rng);
}

} // namespace spslab::testing

#endif
