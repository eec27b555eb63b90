#ifndef SPSLAB_SPARSE_POLY_HPP
#define SPSLAB_SPARSE_POLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spslab/bigint.hpp"
#include "spslab/config.hpp"

namespace spslab {

// One term c * x^e. Exponents are arbitrary nonnegative big integers;
// lacunary polynomials like x^(2^100) - 1 are first-class citizens, so
// nothing here may ever materialize a dense coefficient vector.
struct Monomial {
    BigInt exponent;
    BigInt coefficient;
};

// Univariate integer polynomial in sparse canonical form: monomials
// sorted by strictly increasing exponent, all coefficients nonzero.
// The zero polynomial is the empty list.
class SparsePoly {
public:
    SparsePoly() = default;

    // Canonicalizes: sorts, merges equal exponents, drops zeros.
    // Rejects negative exponents.
    static SparsePoly from_monomials(std::vector<Monomial> terms);
    static SparsePoly constant(const BigInt& c);
    static SparsePoly variable(); // x
    static SparsePoly monomial(const BigInt& coefficient, const BigInt& exponent);

    const std::vector<Monomial>& monomials() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Largest exponent; nullopt for the zero polynomial.
    std::optional<BigInt> degree() const;

    // Coefficient of x^e (zero if absent).
    BigInt coefficient_of(const BigInt& e) const;

    bool operator==(const SparsePoly& other) const;

    // Total order (lexicographic over the canonical term list), for use
    // as a map key when deduplicating shared factors.
    static int compare(const SparsePoly& a, const SparsePoly& b);

private:
    std::vector<Monomial> terms_;
};

SparsePoly add(const SparsePoly& a, const SparsePoly& b);
SparsePoly sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly negate(const SparsePoly& a);

// Product. Throws ResourceCapError if the term accumulator would exceed
// caps.max_product_terms (the message carries the predicted size).
SparsePoly mul(const SparsePoly& a, const SparsePoly& b,
               const ResourceCaps& caps = {});

inline SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return add(a, b); }
inline SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return sub(a, b); }
inline SparsePoly operator-(const SparsePoly& a) { return negate(a); }
inline SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return mul(a, b); }

// Exact evaluation at an integer point. Powers a^(2^i) are computed
// once per call and shared across monomials (binary powering over the
// exponent bits), so cost scales with the number of terms and the bit
// size of the result, never with the degree itself. Throws
// ResourceCapError if the result could exceed caps.max_value_bits.
BigInt eval_integer(const SparsePoly& p, const BigInt& a,
                    const ResourceCaps& caps = {});

// Evaluation mod a word-size prime q. For a != 0 (mod q) exponents are
// reduced mod q-1 first, which is what makes doubly exponential degrees
// affordable; a == 0 short-circuits to the constant term, where that
// reduction would be wrong. Throws InputError if q is not prime.
std::uint64_t eval_mod(const SparsePoly& p, std::uint64_t a, std::uint64_t q);

// Number of sign changes in the coefficient sequence read in exponent
// order. Rejects the zero polynomial.
std::size_t sign_variations(const SparsePoly& p);

// Sum of absolute coefficient values.
BigInt one_norm(const SparsePoly& p);

// A coefficient stored as two sets of binary digit positions:
// value = sum(2^i, i in plus) - sum(2^i, i in minus). This is the
// "few nonzero digits" representation; digit_count is the sparseness
// measure. Positions are big integers, so a coefficient like 2^(2^80)
// is representable even though its value could never be materialized.
class SparseCoeff {
public:
    SparseCoeff() = default; // value 0

    // Positions must be nonnegative; duplicates within a set rejected.
    static SparseCoeff from_bits(std::vector<BigInt> plus, std::vector<BigInt> minus);

    // Canonical decomposition of an integer: the set bits of |value| go
    // into plus (value >= 0) or minus (value < 0). Minimizes the digit
    // count for single-signed values.
    static SparseCoeff decompose(const BigInt& value);

    // Materializes the value. Throws ResourceCapError if any position
    // exceeds caps.max_value_bits.
    BigInt value(const ResourceCaps& caps = {}) const;

    std::size_t digit_count() const { return plus_.size() + minus_.size(); }
    const std::vector<BigInt>& plus_bits() const { return plus_; }
    const std::vector<BigInt>& minus_bits() const { return minus_; }

    bool operator==(const SparseCoeff& other) const = default;

private:
    std::vector<BigInt> plus_;
    std::vector<BigInt> minus_;
};

} // namespace spslab

#endif
