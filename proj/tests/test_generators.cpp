#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "spslab/errors.hpp"
#include "spslab/generators.hpp"
#include "spslab/sparse_poly.hpp"
#include "support.hpp"

using namespace spslab;
namespace tt = spslab::testing;

TEST_SUITE("generators") {

TEST_CASE("linear family terms and prefixes") {
    auto spec = GeneratorSpec::linear();
    CHECK(generator_term(spec, 3) == tt::P({{0, -3}, {1, 1}}));
    CHECK(prefix_product(spec, 0) == SparsePoly::constant(1));
    CHECK(prefix_product(spec, 2) == tt::P({{0, 2}, {1, -3}, {2, 1}}));
    // (x-1)...(x-8), falling factorial coefficients.
    CHECK(prefix_product(spec, 8) ==
          tt::P({{0, 40320}, {1, -109584}, {2, 118124}, {3, -67284},
                 {4, 22449}, {5, -4536}, {6, 546}, {7, -36}, {8, 1}}));
}

TEST_CASE("cyclotomic-like family terms and prefixes") {
    auto spec = GeneratorSpec::cyclotomic_like();
    CHECK(generator_term(spec, 5) == tt::P({{0, -1}, {5, 1}}));
    CHECK(prefix_product(spec, 3) ==
          tt::P({{0, -1}, {1, 1}, {2, 1}, {4, -1}, {5, -1}, {6, 1}}));
}

TEST_CASE("mixed family terms") {
    auto spec = GeneratorSpec::mixed();
    // i = 1 collapses the x and x^i terms: x - 2x + 2 = -x + 2.
    CHECK(generator_term(spec, 1) == tt::P({{0, 2}, {1, -1}}));
    CHECK(generator_term(spec, 2) == tt::P({{0, 5}, {1, -4}, {2, 1}}));
    CHECK(generator_term(spec, 3) == tt::P({{0, 10}, {1, -8}, {3, 1}}));
    CHECK(spec.c == 2);
}

TEST_CASE("custom family reads its table") {
    std::map<std::uint64_t, SparsePoly> table;
    table[1] = tt::P({{0, 5}, {1, 1}});
    auto spec = GeneratorSpec::custom(table, 1);
    CHECK(generator_term(spec, 1) == table[1]);
    CHECK_THROWS_AS(generator_term(spec, 2), InputError);
}

TEST_CASE("index zero is rejected") {
    CHECK_THROWS_AS(generator_term(GeneratorSpec::linear(), 0), InputError);
}

TEST_CASE("growth validation certifies the built-in exponents") {
    CHECK(validate_generator(GeneratorSpec::linear(), 50).ok);
    CHECK(validate_generator(GeneratorSpec::cyclotomic_like(), 50).ok);
    CHECK(validate_generator(GeneratorSpec::mixed(), 50).ok);

    // c = 1 is too small for the mixed family: at i = 2 the constant
    // term is 5 > 2^2.
    GeneratorSpec weak = GeneratorSpec::mixed();
    weak.c = 1;
    auto check = validate_generator(weak, 10);
    CHECK(!check.ok);
    REQUIRE(!check.violations.empty());
    CHECK(check.violations.front().index == 2);
}

TEST_CASE("growth validation flags oversized custom entries") {
    std::map<std::uint64_t, SparsePoly> table;
    table[1] = SparsePoly::variable();
    table[2] = tt::P({{5, 1}}); // degree 5 > 2^1
    auto check = validate_generator(GeneratorSpec::custom(table, 1), 2);
    CHECK(!check.ok);
    CHECK(check.violations.front().index == 2);

    table[2] = SparsePoly();
    auto zero = validate_generator(GeneratorSpec::custom(table, 1), 2);
    CHECK(!zero.ok);
}

TEST_CASE("prefix products satisfy the defining recurrence") {
    for (auto spec : {GeneratorSpec::linear(), GeneratorSpec::cyclotomic_like(),
                      GeneratorSpec::mixed()}) {
        for (std::uint64_t m = 1; m <= 8; ++m)
            CHECK(prefix_product(spec, m) ==
                  prefix_product(spec, m - 1) * generator_term(spec, m));
    }
}

TEST_CASE("degrees add and one-norms submultiply along the prefix") {
    for (auto spec : {GeneratorSpec::linear(), GeneratorSpec::cyclotomic_like(),
                      GeneratorSpec::mixed()}) {
        BigInt deg_sum = 0, norm_prod = 1;
        for (std::uint64_t m = 1; m <= 8; ++m) {
            auto f = generator_term(spec, m);
            deg_sum += *f.degree();
            norm_prod *= one_norm(f);
            auto g = prefix_product(spec, m);
            CHECK(*g.degree() == deg_sum);
            CHECK(one_norm(g) <= norm_prod);
        }
    }
    // Equality case for the linear family at m = 4: 2*3*4*5 = 120.
    CHECK(one_norm(prefix_product(GeneratorSpec::linear(), 4)) == 120);
}

TEST_CASE("hitting sets vanish exactly where promised (linear)") {
    auto spec = GeneratorSpec::linear();
    for (std::uint64_t m = 1; m <= 8; ++m) {
        auto g = prefix_product(spec, m);
        auto hs = hitting_points(spec, m);
        REQUIRE(hs.kind == HittingSetDescr::Kind::integer_points);
        REQUIRE(hs.points.size() == m);
        for (long a = -2 * static_cast<long>(m); a <= 2 * static_cast<long>(m); ++a) {
            bool vanishes = sgn(eval_integer(g, BigInt(a))) == 0;
            bool listed = a >= 1 && a <= static_cast<long>(m);
            CHECK(vanishes == listed);
        }
    }
}

TEST_CASE("hitting sets for the cyclotomic-like family are unity orders") {
    auto hs = hitting_points(GeneratorSpec::cyclotomic_like(), 4);
    REQUIRE(hs.kind == HittingSetDescr::Kind::unity_roots);
    CHECK(hs.orders == std::vector<std::uint64_t>({1, 2, 3, 4}));
    // Divisibility ground truth: x^i - 1 divides g_m for each i <= m.
    auto g = tt::dense_from_sparse(prefix_product(GeneratorSpec::cyclotomic_like(), 4));
    for (std::uint64_t i = 1; i <= 4; ++i) {
        tt::Dense div(i + 1, BigInt(0));
        div[0] = -1;
        div[i] = 1;
        auto [q, r] = tt::divmod_monic(g, div);
        CHECK(r.empty());
    }
}

TEST_CASE("families without a closed-form hitting set say so") {
    CHECK_THROWS_AS(hitting_points(GeneratorSpec::mixed(), 3), InputError);
    CHECK_THROWS_AS(hitting_points(GeneratorSpec::custom({}, 1), 3), InputError);
}

TEST_CASE("hitting set descriptor validation") {
    CHECK_THROWS_AS(HittingSetDescr::integers({BigInt(1), BigInt(1)}), InputError);
    CHECK_THROWS_AS(HittingSetDescr::unity({0}), InputError);
    CHECK_NOTHROW(HittingSetDescr::integers({BigInt(-3), BigInt(2)}));
}

TEST_CASE("prefix products respect the term cap") {
    ResourceCaps tight;
    tight.max_product_terms = 8;
    CHECK_THROWS_AS(prefix_product(GeneratorSpec::linear(), 20, tight),
                    ResourceCapError);
}

} // TEST_SUITE
