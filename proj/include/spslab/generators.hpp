#ifndef SPSLAB_GENERATORS_HPP
#define SPSLAB_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spslab/sparse_poly.hpp"

namespace spslab {

// A generator is an indexed family f_1, f_2, ... of easy-to-compute
// integer polynomials whose sizes grow polynomially in the index:
// deg f_i <= i^c and |coefficients| <= 2^(i^c). The interest is in the
// prefix products g_m = f_1 * ... * f_m, which have few factors but
// enormous structure, and in explicit point sets that g_m vanishes on.
enum class GeneratorKind { linear, cyclotomic_like, mixed, custom };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::linear;
    unsigned c = 1; // growth exponent certified by validate_generator
    // Custom families supply terms explicitly, keyed by index.
    std::map<std::uint64_t, SparsePoly> table;

    static GeneratorSpec linear();          // f_i = x - i
    static GeneratorSpec cyclotomic_like(); // f_i = x^i - 1
    static GeneratorSpec mixed();           // f_i = x^i - 2^i x + i^2 + 1
    static GeneratorSpec custom(std::map<std::uint64_t, SparsePoly> table,
                                unsigned c);
};

// The i-th family member, i >= 1. Custom specs throw InputError when
// the table has no entry for i.
SparsePoly generator_term(const GeneratorSpec& spec, std::uint64_t i);

struct GeneratorViolation {
    std::uint64_t index;
    std::string detail;
};

struct GeneratorCheck {
    bool ok = false;
    std::vector<GeneratorViolation> violations;
};

// Checks nonzeroness, deg f_i <= i^c and |coeffs| <= 2^(i^c) for every
// i in [1, range_max].
GeneratorCheck validate_generator(const GeneratorSpec& spec, std::uint64_t range_max);

// g_m = f_1 * ... * f_m as one canonical polynomial. m = 0 gives 1.
SparsePoly prefix_product(const GeneratorSpec& spec, std::uint64_t m,
                          const ResourceCaps& caps = {});

// A point set g_m is guaranteed to vanish on, either explicit integers
// or "all i-th roots of unity for these orders i" kept symbolic.
struct HittingSetDescr {
    enum class Kind { integer_points, unity_roots };
    Kind kind = Kind::integer_points;
    std::vector<BigInt> points;          // integer_points: pairwise distinct
    std::vector<std::uint64_t> orders;   // unity_roots: the orders i
    std::string source;

    static HittingSetDescr integers(std::vector<BigInt> pts, std::string source = {});
    static HittingSetDescr unity(std::vector<std::uint64_t> orders, std::string source = {});
};

// Built-in vanishing sets: {1..m} for the linear family, root-of-unity
// orders {1..m} for the cyclotomic-like one. Mixed and custom families
// have no closed-form set; those throw InputError.
HittingSetDescr hitting_points(const GeneratorSpec& spec, std::uint64_t m);

} // namespace spslab

#endif
