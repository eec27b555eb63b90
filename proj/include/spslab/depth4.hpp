#ifndef SPSLAB_DEPTH4_HPP
#define SPSLAB_DEPTH4_HPP

#include <cstdint>
#include <vector>

#include "spslab/sps_expr.hpp"

namespace spslab {

// Strict sum-of-products-of-sums-of-products formula over variables
// x_1..x_p and z_1..z_q plus integer constants:
//   formula = sum of Terms, Term = product of Blocks,
//   Block = sum of Leaves, Leaf = product of atomic inputs.
// Every layer is present with fan-in >= 1; there is no collapsing of
// trivial levels, which keeps the structural parameters honest.

struct Depth4Leaf {
    std::vector<std::uint32_t> x_vars; // 1-based indices, repeats allowed
    std::vector<std::uint32_t> z_vars;
    std::vector<BigInt> constants;

    std::size_t atom_count() const {
        return x_vars.size() + z_vars.size() + constants.size();
    }
};

struct Depth4Block {
    std::vector<Depth4Leaf> leaves;
};

struct Depth4Term {
    std::vector<Depth4Block> blocks;
};

class Depth4Formula {
public:
    Depth4Formula(std::uint32_t x_arity, std::uint32_t z_arity,
                  std::vector<Depth4Term> terms);

    std::uint32_t x_arity() const { return x_arity_; }
    std::uint32_t z_arity() const { return z_arity_; }
    const std::vector<Depth4Term>& terms() const { return terms_; }

private:
    std::uint32_t x_arity_;
    std::uint32_t z_arity_;
    std::vector<Depth4Term> terms_;
};

// Syntactic degree: every input (variables and constants alike) counts
// 1, products add, sums take the max.
std::uint64_t formal_degree(const Depth4Formula& f);

// Plain evaluation over the integers, xs[j-1] standing for x_j.
// Intermediates respect caps.max_value_bits.
BigInt eval_formula(const Depth4Formula& f, const std::vector<BigInt>& xs,
                    const std::vector<BigInt>& zs, const ResourceCaps& caps = {});

// The power substitution x_j -> x^(2^(j-1)), z_j -> 2^(2^(j-1)): each
// Leaf becomes one monomial in the single variable x, each Block a
// sparse polynomial (colliding exponents merge), each Term a product.
// Identical Blocks share one factor-table entry, and every factor
// carries the digit decompositions of its coefficients, so the result's
// size measure reflects the formula, not the numeric magnitudes. The
// output has one product per Term (k = output fan-in). Throws
// ResourceCapError when a coefficient's bit size would exceed
// caps.max_value_bits.
SpsExpr substitute_powers(const Depth4Formula& f, const ResourceCaps& caps = {});

} // namespace spslab

#endif
