#ifndef SPSLAB_BIGINT_HPP
#define SPSLAB_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "spslab/errors.hpp"

namespace spslab {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Number of bits in |v|; bit_length(0) == 0.
inline std::size_t bit_length(const BigInt& v) {
    if (sgn(v) == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline BigInt pow2(unsigned long k) {
    BigInt r;
    mpz_setbit(r.get_mpz_t(), k);
    return r;
}

// i^c as a big integer (c small, i a machine word).
inline BigInt pow_ui(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Nonnegative remainder, unlike operator% which truncates toward zero.
inline BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_u64(const BigInt& v) {
    return sgn(v) >= 0 && mpz_fits_ulong_p(v.get_mpz_t()) != 0;
}

inline std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw InputError("value does not fit in 64 bits: " + v.get_str());
    return mpz_get_ui(v.get_mpz_t());
}

// Strict parser for canonical decimal integers: optional leading '-',
// no leading zeros ("0" itself is fine, "00" and "-0" are not).
inline BigInt parse_decimal(const std::string& s) {
    auto bad = [&]() -> BigInt {
        throw InputError("not a canonical decimal integer: \"" + s + "\"");
    };
    if (s.empty()) return bad();
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return bad();
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return bad();
    if (s[i] == '0' && s.size() - i > 1) return bad();
    if (s[0] == '-' && s[i] == '0') return bad();
    return BigInt(s, 10);
}

} // namespace spslab

#endif
