#include "spslab/sps_expr.hpp"

#include <optional>
#include <set>

#include "spslab/primes.hpp"

namespace spslab {

SpsExpr::SpsExpr(std::vector<SparsePoly> factors,
                 std::vector<std::vector<std::size_t>> products)
    : factors_(std::move(factors)), products_(std::move(products)),
      digits_(factors_.size()) {
    if (products_.empty())
        throw InputError("SpsExpr: need at least one product");
    for (const auto& prod : products_) {
        if (prod.empty())
            throw InputError("SpsExpr: empty product");
        for (std::size_t idx : prod)
            if (idx >= factors_.size())
                throw InputError("SpsExpr: factor index " + std::to_string(idx) +
                                 " out of range (table has " +
                                 std::to_string(factors_.size()) + ")");
    }
}

SpsExpr SpsExpr::product_of(std::vector<SparsePoly> factors) {
    std::vector<std::size_t> refs(factors.size());
    for (std::size_t i = 0; i < refs.size(); ++i) refs[i] = i;
    return SpsExpr(std::move(factors), {std::move(refs)});
}

SpsExpr SpsExpr::single(SparsePoly f) {
    std::vector<SparsePoly> fs;
    fs.push_back(std::move(f));
    return SpsExpr(std::move(fs), {{0}});
}

void SpsExpr::set_factor_digits(std::size_t factor, std::vector<SparseCoeff> digits) {
    if (factor >= factors_.size())
        throw InputError("set_factor_digits: factor index out of range");
    const auto& terms = factors_[factor].monomials();
    if (digits.size() != terms.size())
        throw InputError("set_factor_digits: got " + std::to_string(digits.size()) +
                         " decompositions for " + std::to_string(terms.size()) +
                         " monomials");
    // A decomposition that does not reproduce the coefficient would
    // silently decouple the size measure from the polynomial; verify
    // while the bit positions are still small enough to materialize.
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (digits[i].value() != terms[i].coefficient)
            throw InputError("set_factor_digits: decomposition " + std::to_string(i) +
                             " has value " + digits[i].value().get_str() +
                             ", coefficient is " + terms[i].coefficient.get_str());
    }
    digits_[factor] = std::move(digits);
}

namespace {

std::set<std::size_t> referenced_factors(const SpsExpr& e) {
    std::set<std::size_t> used;
    for (const auto& prod : e.products())
        used.insert(prod.begin(), prod.end());
    return used;
}

// Digit count charged for one factor: explicit decomposition when
// present, canonical popcount of each coefficient otherwise.
std::uint64_t factor_digit_count(const SpsExpr& e, std::size_t f, std::size_t term) {
    const auto& carried = e.factor_digits()[f];
    if (!carried.empty()) return carried[term].digit_count();
    const BigInt& c = e.factors()[f].monomials()[term].coefficient;
    return mpz_popcount(BigInt(abs(c)).get_mpz_t());
}

} // namespace

SpsParams measure(const SpsExpr& e) {
    SpsParams p;
    p.size = 0;
    p.max_degree = 0;
    p.products = e.product_count();
    for (const auto& prod : e.products()) {
        p.max_factors = std::max(p.max_factors, prod.size());
        for (std::size_t idx : prod)
            p.size += static_cast<unsigned long>(e.factors()[idx].term_count());
    }
    for (std::size_t idx : referenced_factors(e)) {
        const SparsePoly& f = e.factors()[idx];
        p.max_terms = std::max(p.max_terms,
                               static_cast<std::uint64_t>(f.term_count()));
        if (auto d = f.degree(); d && *d > p.max_degree) p.max_degree = *d;
        for (std::size_t t = 0; t < f.term_count(); ++t) {
            p.coeff_max_bits = std::max(
                p.coeff_max_bits,
                static_cast<std::uint64_t>(bit_length(f.monomials()[t].coefficient)));
            p.max_digits = std::max(p.max_digits, factor_digit_count(e, idx, t));
        }
    }
    return p;
}

namespace {

// |c| <= 2^h without materializing 2^h: true iff bit_length(|c|) <= h,
// or c is exactly +-2^h (bit length h+1, single set bit).
bool magnitude_within(const BigInt& c, const BigInt& h) {
    const BigInt bits(static_cast<unsigned long>(bit_length(c)));
    if (bits <= h) return true;
    return bits == h + 1 && mpz_popcount(BigInt(abs(c)).get_mpz_t()) == 1;
}

} // namespace

MembershipReport is_member(const SpsExpr& e, const BigInt& s, const BigInt& height) {
    MembershipReport report;
    const SpsParams p = measure(e);

    if (p.size > s)
        report.violations.push_back(
            {MembershipViolation::Clause::size, SIZE_MAX,
             "total monomials " + p.size.get_str() + " > budget " + s.get_str()});

    for (std::size_t idx : referenced_factors(e)) {
        const SparsePoly& f = e.factors()[idx];
        if (auto d = f.degree(); d && *d > height) {
            report.violations.push_back(
                {MembershipViolation::Clause::degree, idx,
                 "degree " + d->get_str() + " > " + height.get_str()});
        }
        for (std::size_t t = 0; t < f.term_count(); ++t) {
            const BigInt& c = f.monomials()[t].coefficient;
            if (BigInt(factor_digit_count(e, idx, t)) > s)
                report.violations.push_back(
                    {MembershipViolation::Clause::digits, idx,
                     "coefficient of x^" + f.monomials()[t].exponent.get_str() +
                         " needs " + std::to_string(factor_digit_count(e, idx, t)) +
                         " digits > budget " + s.get_str()});
            if (!magnitude_within(c, height))
                report.violations.push_back(
                    {MembershipViolation::Clause::coeff_magnitude, idx,
                     "|" + c.get_str() + "| > 2^" + height.get_str()});
        }
    }
    report.member = report.violations.empty();
    return report;
}

BigInt eval_integer(const SpsExpr& e, const BigInt& a, const ResourceCaps& caps) {
    std::vector<std::optional<BigInt>> cache(e.factors().size());
    BigInt sum = 0;
    for (const auto& prod : e.products()) {
        BigInt acc = 1;
        for (std::size_t idx : prod) {
            if (!cache[idx])
                cache[idx] = eval_integer(e.factors()[idx], a, caps);
            acc *= *cache[idx];
            if (bit_length(acc) > caps.max_value_bits)
                throw ResourceCapError(
                    "product value reached " + std::to_string(bit_length(acc)) +
                    " bits, cap is " + std::to_string(caps.max_value_bits));
            if (sgn(acc) == 0) break; // a zero factor kills the product
        }
        sum += acc;
    }
    return sum;
}

std::uint64_t eval_mod(const SpsExpr& e, std::uint64_t a, std::uint64_t q) {
    std::vector<std::optional<std::uint64_t>> cache(e.factors().size());
    std::uint64_t sum = 0;
    for (const auto& prod : e.products()) {
        std::uint64_t acc = 1;
        for (std::size_t idx : prod) {
            if (!cache[idx])
                cache[idx] = eval_mod(e.factors()[idx], a, q);
            acc = mulmod_u64(acc, *cache[idx], q);
            if (acc == 0) break;
        }
        sum = (sum + acc) % q;
    }
    return sum;
}

SparsePoly expand(const SpsExpr& e, const ResourceCaps& caps) {
    const SpsParams p = measure(e);
    // k * t^m is a hard bound on the expansion's term count; refuse up
    // front if it cannot fit, rather than die mid-multiplication.
    BigInt predicted = pow_big(BigInt(p.max_terms), p.max_factors);
    predicted *= static_cast<unsigned long>(p.products);
    if (predicted > BigInt(caps.max_product_terms))
        throw ResourceCapError("expansion bound k*t^m = " + predicted.get_str() +
                               " exceeds term cap " +
                               std::to_string(caps.max_product_terms));
    SparsePoly sum;
    for (const auto& prod : e.products()) {
        SparsePoly acc = SparsePoly::constant(1);
        for (std::size_t idx : prod) {
            acc = mul(acc, e.factors()[idx], caps);
            if (acc.is_zero()) break;
        }
        sum = add(sum, acc);
    }
    return sum;
}

} // namespace spslab
