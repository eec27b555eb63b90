#include "spslab/depth4.hpp"

#include <algorithm>
#include <map>

namespace spslab {

Depth4Formula::Depth4Formula(std::uint32_t x_arity, std::uint32_t z_arity,
                             std::vector<Depth4Term> terms)
    : x_arity_(x_arity), z_arity_(z_arity), terms_(std::move(terms)) {
    if (terms_.empty())
        throw InputError("Depth4Formula: need at least one term");
    for (const auto& term : terms_) {
        if (term.blocks.empty())
            throw InputError("Depth4Formula: empty term");
        for (const auto& block : term.blocks) {
            if (block.leaves.empty())
                throw InputError("Depth4Formula: empty block");
            for (const auto& leaf : block.leaves) {
                if (leaf.atom_count() == 0)
                    throw InputError("Depth4Formula: empty leaf");
                for (std::uint32_t j : leaf.x_vars)
                    if (j < 1 || j > x_arity_)
                        throw InputError("Depth4Formula: x index " +
                                         std::to_string(j) + " out of range");
                for (std::uint32_t j : leaf.z_vars)
                    if (j < 1 || j > z_arity_)
                        throw InputError("Depth4Formula: z index " +
                                         std::to_string(j) + " out of range");
            }
        }
    }
}

std::uint64_t formal_degree(const Depth4Formula& f) {
    std::uint64_t best = 0;
    for (const auto& term : f.terms()) {
        std::uint64_t term_deg = 0;
        for (const auto& block : term.blocks) {
            std::uint64_t block_deg = 0;
            for (const auto& leaf : block.leaves)
                block_deg = std::max<std::uint64_t>(block_deg, leaf.atom_count());
            term_deg += block_deg;
        }
        best = std::max(best, term_deg);
    }
    return best;
}

namespace {

void check_bits(const BigInt& v, const ResourceCaps& caps, const char* what) {
    if (bit_length(v) > caps.max_value_bits)
        throw ResourceCapError(std::string(what) + " reached " +
                               std::to_string(bit_length(v)) + " bits, cap is " +
                               std::to_string(caps.max_value_bits));
}

} // namespace

BigInt eval_formula(const Depth4Formula& f, const std::vector<BigInt>& xs,
                    const std::vector<BigInt>& zs, const ResourceCaps& caps) {
    if (xs.size() != f.x_arity() || zs.size() != f.z_arity())
        throw InputError("eval_formula: expected " + std::to_string(f.x_arity()) +
                         " x values and " + std::to_string(f.z_arity()) +
                         " z values");
    BigInt sum = 0;
    for (const auto& term : f.terms()) {
        BigInt term_val = 1;
        for (const auto& block : term.blocks) {
            BigInt block_val = 0;
            for (const auto& leaf : block.leaves) {
                BigInt leaf_val = 1;
                for (std::uint32_t j : leaf.x_vars) {
                    leaf_val *= xs[j - 1];
                    check_bits(leaf_val, caps, "leaf value");
                }
                for (std::uint32_t j : leaf.z_vars) {
                    leaf_val *= zs[j - 1];
                    check_bits(leaf_val, caps, "leaf value");
                }
                for (const BigInt& c : leaf.constants) {
                    leaf_val *= c;
                    check_bits(leaf_val, caps, "leaf value");
                }
                block_val += leaf_val;
            }
            term_val *= block_val;
            check_bits(term_val, caps, "term value");
            if (sgn(term_val) == 0) break;
        }
        sum += term_val;
    }
    return sum;
}

SpsExpr substitute_powers(const Depth4Formula& f, const ResourceCaps& caps) {
    // Substituted blocks are deduplicated structurally: two Terms using
    // an identical Block reference the same factor-table entry.
    struct PolyLess {
        bool operator()(const SparsePoly& a, const SparsePoly& b) const {
            return SparsePoly::compare(a, b) < 0;
        }
    };
    std::map<SparsePoly, std::size_t, PolyLess> seen;
    std::vector<SparsePoly> factors;
    std::vector<std::vector<std::size_t>> products;

    for (const auto& term : f.terms()) {
        std::vector<std::size_t> refs;
        refs.reserve(term.blocks.size());
        for (const auto& block : term.blocks) {
            // Leaf -> monomial: x_j contributes 2^(j-1) to the
            // exponent, z_j contributes 2^(j-1) to the coefficient's
            // shift, constants multiply in directly.
            std::map<BigInt, BigInt> acc;
            for (const auto& leaf : block.leaves) {
                BigInt exp = 0;
                BigInt shift = 0;
                for (std::uint32_t j : leaf.x_vars)
                    exp += pow2(j - 1);
                for (std::uint32_t j : leaf.z_vars)
                    shift += pow2(j - 1);
                BigInt coeff = 1;
                for (const BigInt& c : leaf.constants) coeff *= c;
                if (shift > BigInt(caps.max_value_bits) ||
                    BigInt(bit_length(coeff)) + shift > BigInt(caps.max_value_bits))
                    throw ResourceCapError(
                        "substituted coefficient needs about " +
                        BigInt(BigInt(bit_length(coeff)) + shift).get_str() +
                        " bits, cap is " + std::to_string(caps.max_value_bits));
                coeff <<= to_u64(shift);
                acc[exp] += coeff;
            }
            std::vector<Monomial> terms_out;
            for (auto& [e, c] : acc)
                if (sgn(c) != 0) terms_out.push_back({e, std::move(c)});
            SparsePoly poly = SparsePoly::from_monomials(std::move(terms_out));

            auto [it, fresh] = seen.try_emplace(poly, factors.size());
            if (fresh) factors.push_back(std::move(poly));
            refs.push_back(it->second);
        }
        products.push_back(std::move(refs));
    }

    SpsExpr e(std::move(factors), std::move(products));
    for (std::size_t i = 0; i < e.factors().size(); ++i) {
        std::vector<SparseCoeff> digits;
        digits.reserve(e.factors()[i].term_count());
        for (const auto& t : e.factors()[i].monomials())
            digits.push_back(SparseCoeff::decompose(t.coefficient));
        e.set_factor_digits(i, std::move(digits));
    }
    return e;
}

} // namespace spslab
