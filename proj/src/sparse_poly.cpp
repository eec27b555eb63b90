#include "spslab/sparse_poly.hpp"

#include <algorithm>
#include <map>

#include "spslab/primes.hpp"

namespace spslab {

SparsePoly SparsePoly::from_monomials(std::vector<Monomial> terms) {
    for (const auto& t : terms)
        if (sgn(t.exponent) < 0)
            throw InputError("negative exponent: " + t.exponent.get_str());
    std::sort(terms.begin(), terms.end(),
              [](const Monomial& a, const Monomial& b) {
                  return a.exponent < b.exponent;
              });
    SparsePoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent)
            p.terms_.back().coefficient += t.coefficient;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && sgn(p.terms_.back().coefficient) == 0)
            p.terms_.pop_back();
    }
    return p;
}

SparsePoly SparsePoly::constant(const BigInt& c) {
    SparsePoly p;
    if (sgn(c) != 0) p.terms_.push_back({BigInt(0), c});
    return p;
}

SparsePoly SparsePoly::variable() {
    SparsePoly p;
    p.terms_.push_back({BigInt(1), BigInt(1)});
    return p;
}

SparsePoly SparsePoly::monomial(const BigInt& coefficient, const BigInt& exponent) {
    if (sgn(exponent) < 0)
        throw InputError("negative exponent: " + exponent.get_str());
    SparsePoly p;
    if (sgn(coefficient) != 0) p.terms_.push_back({exponent, coefficient});
    return p;
}

std::optional<BigInt> SparsePoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().exponent;
}

BigInt SparsePoly::coefficient_of(const BigInt& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Monomial& m, const BigInt& key) {
                                   return m.exponent < key;
                               });
    if (it != terms_.end() && it->exponent == e) return it->coefficient;
    return BigInt(0);
}

bool SparsePoly::operator==(const SparsePoly& other) const {
    return compare(*this, other) == 0;
}

int SparsePoly::compare(const SparsePoly& a, const SparsePoly& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp(a.terms_[i].exponent, b.terms_[i].exponent)) return c;
        if (int c = cmp(a.terms_[i].coefficient, b.terms_[i].coefficient)) return c;
    }
    if (a.terms_.size() < b.terms_.size()) return -1;
    if (a.terms_.size() > b.terms_.size()) return 1;
    return 0;
}

namespace {

// Merge a sorted term stream, combining duplicates and dropping zeros.
SparsePoly merge_linear(const SparsePoly& a, const SparsePoly& b, int b_sign) {
    std::vector<Monomial> out;
    out.reserve(a.term_count() + b.term_count());
    const auto& ta = a.monomials();
    const auto& tb = b.monomials();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        int pick;
        if (i == ta.size()) pick = 1;
        else if (j == tb.size()) pick = -1;
        else pick = cmp(ta[i].exponent, tb[j].exponent);
        if (pick < 0) {
            out.push_back(ta[i++]);
        } else if (pick > 0) {
            out.push_back({tb[j].exponent, b_sign * tb[j].coefficient});
            ++j;
        } else {
            BigInt c = ta[i].coefficient + b_sign * tb[j].coefficient;
            if (sgn(c) != 0) out.push_back({ta[i].exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return SparsePoly::from_monomials(std::move(out));
}

} // namespace

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
    return merge_linear(a, b, 1);
}

SparsePoly sub(const SparsePoly& a, const SparsePoly& b) {
    return merge_linear(a, b, -1);
}

SparsePoly negate(const SparsePoly& a) {
    std::vector<Monomial> out = a.monomials();
    for (auto& t : out) t.coefficient = -t.coefficient;
    return SparsePoly::from_monomials(std::move(out));
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b, const ResourceCaps& caps) {
    // Term-by-term products accumulate into an exponent-keyed map;
    // cancellation is applied as they land, so the cap is checked
    // against live (nonzero) entries.
    std::map<BigInt, BigInt> acc;
    for (const auto& ta : a.monomials()) {
        for (const auto& tb : b.monomials()) {
            BigInt e = ta.exponent + tb.exponent;
            auto [it, fresh] = acc.try_emplace(std::move(e), 0);
            it->second += ta.coefficient * tb.coefficient;
            if (sgn(it->second) == 0) {
                acc.erase(it);
            } else if (fresh && acc.size() > caps.max_product_terms) {
                throw ResourceCapError(
                    "product exceeds term cap " +
                    std::to_string(caps.max_product_terms) + " (operands have " +
                    std::to_string(a.term_count()) + " and " +
                    std::to_string(b.term_count()) + " terms)");
            }
        }
    }
    std::vector<Monomial> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) out.push_back({e, std::move(c)});
    return SparsePoly::from_monomials(std::move(out));
}

BigInt eval_integer(const SparsePoly& p, const BigInt& a, const ResourceCaps& caps) {
    if (p.is_zero()) return BigInt(0);
    if (sgn(a) == 0) return p.coefficient_of(BigInt(0));

    const BigInt abs_a = abs(a);
    if (abs_a == 1) {
        // Only the exponent parity matters; no size risk.
        BigInt sum = 0;
        const bool neg = sgn(a) < 0;
        for (const auto& t : p.monomials()) {
            if (neg && mpz_odd_p(t.exponent.get_mpz_t()))
                sum -= t.coefficient;
            else
                sum += t.coefficient;
        }
        return sum;
    }

    // Predict the largest term's bit size before doing any work:
    // roughly deg * bits(|a|) plus the coefficient's own bits.
    const BigInt deg = *p.degree();
    BigInt max_coeff_bits = 0;
    for (const auto& t : p.monomials()) {
        BigInt cb(static_cast<unsigned long>(bit_length(t.coefficient)));
        if (cb > max_coeff_bits) max_coeff_bits = cb;
    }
    const BigInt predicted =
        deg * static_cast<unsigned long>(bit_length(abs_a)) + max_coeff_bits;
    if (predicted > BigInt(caps.max_value_bits))
        throw ResourceCapError("integer evaluation needs about " +
                               predicted.get_str() + " bits, cap is " +
                               std::to_string(caps.max_value_bits));

    // Shared square chain: powers[i] = a^(2^i), extended on demand up
    // to the top bit of the largest exponent.
    std::vector<BigInt> powers{a};
    const std::size_t top = bit_length(deg);
    powers.reserve(top);
    while (powers.size() < top)
        powers.push_back(powers.back() * powers.back());

    BigInt sum = 0;
    for (const auto& t : p.monomials()) {
        BigInt term = t.coefficient;
        const std::size_t nbits = bit_length(t.exponent);
        for (std::size_t i = 0; i < nbits; ++i)
            if (mpz_tstbit(t.exponent.get_mpz_t(), i))
                term *= powers[i];
        sum += term;
    }
    return sum;
}

std::uint64_t eval_mod(const SparsePoly& p, std::uint64_t a, std::uint64_t q) {
    if (!is_prime_u64(q))
        throw InputError("eval_mod: modulus " + std::to_string(q) + " is not prime");
    a %= q;
    if (a == 0) {
        // x^e with e > 0 vanishes at 0; the exponent reduction below
        // would instead treat e as e mod (q-1), so handle this case
        // directly from the constant term.
        return mpz_fdiv_ui(p.coefficient_of(BigInt(0)).get_mpz_t(), q);
    }
    const BigInt order(static_cast<unsigned long>(q - 1));
    std::uint64_t sum = 0;
    for (const auto& t : p.monomials()) {
        // a^(q-1) = 1, so only e mod q-1 matters.
        const std::uint64_t e = mpz_fdiv_ui(t.exponent.get_mpz_t(), q - 1);
        const std::uint64_t c = mpz_fdiv_ui(t.coefficient.get_mpz_t(), q);
        sum = (sum + mulmod_u64(c, powmod_u64(a, e, q), q)) % q;
    }
    return sum;
}

std::size_t sign_variations(const SparsePoly& p) {
    if (p.is_zero())
        throw InputError("sign_variations: zero polynomial has no sign sequence");
    std::size_t count = 0;
    int prev = 0;
    for (const auto& t : p.monomials()) {
        const int s = sgn(t.coefficient);
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

BigInt one_norm(const SparsePoly& p) {
    BigInt sum = 0;
    for (const auto& t : p.monomials()) sum += abs(t.coefficient);
    return sum;
}

SparseCoeff SparseCoeff::from_bits(std::vector<BigInt> plus, std::vector<BigInt> minus) {
    auto prep = [](std::vector<BigInt>& v, const char* side) {
        for (const auto& b : v)
            if (sgn(b) < 0)
                throw InputError(std::string("SparseCoeff: negative bit position in ") + side);
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw InputError(std::string("SparseCoeff: duplicate bit position in ") + side);
    };
    prep(plus, "plus");
    prep(minus, "minus");
    SparseCoeff c;
    c.plus_ = std::move(plus);
    c.minus_ = std::move(minus);
    return c;
}

SparseCoeff SparseCoeff::decompose(const BigInt& value) {
    SparseCoeff c;
    auto& side = (sgn(value) >= 0) ? c.plus_ : c.minus_;
    const BigInt v = abs(value);
    for (std::size_t i = 0; i < bit_length(v); ++i)
        if (mpz_tstbit(v.get_mpz_t(), i))
            side.push_back(BigInt(static_cast<unsigned long>(i)));
    return c;
}

BigInt SparseCoeff::value(const ResourceCaps& caps) const {
    BigInt pos = 0, neg = 0;
    auto accumulate = [&caps](BigInt& acc, const std::vector<BigInt>& bits) {
        for (const auto& b : bits) {
            if (b > BigInt(caps.max_value_bits))
                throw ResourceCapError("SparseCoeff bit position " + b.get_str() +
                                       " exceeds value cap " +
                                       std::to_string(caps.max_value_bits) + " bits");
            mpz_setbit(acc.get_mpz_t(), to_u64(b));
        }
    };
    accumulate(pos, plus_);
    accumulate(neg, minus_);
    return pos - neg;
}

} // namespace spslab
