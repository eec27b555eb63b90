#ifndef SPSLAB_SPS_EXPR_HPP
#define SPSLAB_SPS_EXPR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spslab/sparse_poly.hpp"

namespace spslab {

// Sum of products of sparse polynomials, kept unexpanded:
//   E = sum over products P of (product over j of factors[P[j]]).
// Factors live in a shared table; a product is a list of indices into
// it, so structurally shared factors are stored (and evaluated) once.
class SpsExpr {
public:
    // At least one product, every product nonempty, indices in range.
    SpsExpr(std::vector<SparsePoly> factors,
            std::vector<std::vector<std::size_t>> products);

    // Single product of the given factors.
    static SpsExpr product_of(std::vector<SparsePoly> factors);
    // One product with one factor.
    static SpsExpr single(SparsePoly f);

    // Attach a digit decomposition for each monomial coefficient of one
    // factor (aligned with its canonical term order). Decompositions
    // must reproduce the stored coefficients; they let an encoding
    // spend fewer or other digits than the canonical binary split, and
    // the size measure charges them instead when present.
    void set_factor_digits(std::size_t factor, std::vector<SparseCoeff> digits);

    const std::vector<SparsePoly>& factors() const { return factors_; }
    const std::vector<std::vector<std::size_t>>& products() const { return products_; }
    // Empty vector when a factor carries no explicit decomposition.
    const std::vector<std::vector<SparseCoeff>>& factor_digits() const { return digits_; }

    std::size_t product_count() const { return products_.size(); }

private:
    std::vector<SparsePoly> factors_;
    std::vector<std::vector<std::size_t>> products_;
    std::vector<std::vector<SparseCoeff>> digits_;
};

// Structural size parameters, counted per reference: a factor used by
// three products is charged three times.
struct SpsParams {
    BigInt size;                  // s: total monomials over all references
    std::uint64_t products = 0;   // k: number of products
    std::uint64_t max_factors = 0; // m: longest product
    std::uint64_t max_terms = 0;  // t: most monomials in any referenced factor
    BigInt max_degree;            // largest degree among referenced nonzero factors
    std::uint64_t coeff_max_bits = 0;
    std::uint64_t max_digits = 0; // largest per-coefficient digit count
};

SpsParams measure(const SpsExpr& e);

// Membership test against the size/height budget (s, e): total
// monomials <= s, every coefficient writable with at most s binary
// digits and bounded by 2^e in magnitude, every factor degree <= e.
struct MembershipViolation {
    enum class Clause { size, digits, coeff_magnitude, degree };
    Clause clause;
    std::size_t factor; // SIZE_MAX when not tied to one factor
    std::string detail;
};

struct MembershipReport {
    bool member = false;
    std::vector<MembershipViolation> violations;
};

MembershipReport is_member(const SpsExpr& e, const BigInt& s, const BigInt& height);

// Evaluation without expansion. Shared factors are evaluated once per
// call. Integer mode enforces caps.max_value_bits on intermediates.
BigInt eval_integer(const SpsExpr& e, const BigInt& a, const ResourceCaps& caps = {});
std::uint64_t eval_mod(const SpsExpr& e, std::uint64_t a, std::uint64_t q);

// Distributes all products into one canonical SparsePoly. The a-priori
// bound k * t^m is checked against caps.max_product_terms before any
// multiplication happens; the error message carries the predicted
// count, since that is the number a caller must budget for.
SparsePoly expand(const SpsExpr& e, const ResourceCaps& caps = {});

} // namespace spslab

#endif
