#ifndef SPSLAB_CONFIG_HPP
#define SPSLAB_CONFIG_HPP

#include <cstdint>

namespace spslab {

// Hard limits for operations whose cost is data-dependent. Ops that can
// blow up take one of these by const reference and throw
// ResourceCapError before committing to the work.
struct ResourceCaps {
    // Upper bound on monomials in any expansion or product result.
    std::uint64_t max_product_terms = 1'000'000;
    // Upper bound on the bit size of integer evaluation results and of
    // materialized digit-decomposed coefficients.
    std::uint64_t max_value_bits = 100'000'000;
    // Largest degree admitted into a Sturm chain.
    std::uint64_t sturm_degree_cap = 5'000;
};

} // namespace spslab

#endif
