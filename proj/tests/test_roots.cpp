#include <cstdint>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "spslab/errors.hpp"
#include "spslab/generators.hpp"
#include "spslab/roots.hpp"
#include "spslab/rng.hpp"
#include "support.hpp"

using namespace spslab;
namespace tt = spslab::testing;

namespace {

// Integer roots by scanning every candidate under a crude coefficient
// bound, usable because test polynomials keep small coefficients.
std::uint64_t scan_integer_roots(const SparsePoly& p) {
    REQUIRE(!p.is_zero());
    BigInt biggest = 0;
    for (const auto& m : p.monomials())
        if (abs(m.coefficient) > biggest) biggest = BigInt(abs(m.coefficient));
    const BigInt lc = p.monomials().back().coefficient;
    BigInt bound = biggest / abs(lc) + 2;
    std::uint64_t count = 0;
    for (BigInt a = -bound; a <= bound; ++a)
        if (sgn(eval_integer(p, a)) == 0) ++count;
    return count;
}

} // namespace

TEST_SUITE("roots") {

TEST_CASE("bound certificates") {
    auto d = bound(BoundCert::Kind::descartes_product, 1, 2, 2);
    CHECK(d.value == 5); // 2m(t-1)+1
    auto e = bound(BoundCert::Kind::expansion_sum, 2, 2, 2);
    CHECK(e.value == 15); // 2k*t^m - 1
    auto s = bound(BoundCert::Kind::descartes_single, 1, 1, 3);
    CHECK(s.value == 4); // 2t - 2

    CHECK_THROWS_AS(bound(BoundCert::Kind::descartes_product, 2, 2, 2), InputError);
    CHECK_THROWS_AS(bound(BoundCert::Kind::expansion_sum, 0, 1, 1), InputError);
    CHECK_THROWS_AS(bound(BoundCert::Kind::expansion_sum, 1, 1, 0), InputError);
}

TEST_CASE("distinct real root counts on known polynomials") {
    CHECK(count_real_roots(tt::P({{0, 2}, {1, -3}, {2, 1}})) == 2);
    CHECK(count_real_roots(tt::P({{0, 1}, {2, 1}})) == 0);     // x^2 + 1
    CHECK(count_real_roots(tt::P({{1, -1}, {3, 1}})) == 3);    // x^3 - x
    CHECK(count_real_roots(tt::P({{0, 5}})) == 0);             // constants
    CHECK(count_real_roots(tt::P({{1, 7}})) == 1);             // 7x
    CHECK(count_real_roots(tt::P({{0, -1}, {50, 1}})) == 2);   // x^50 - 1
    CHECK(count_real_roots(tt::P({{0, -1}, {50, -1}, {100, 1}})) == 2);
    CHECK_THROWS_AS(count_real_roots(SparsePoly()), InputError);
}

TEST_CASE("multiple roots are counted once") {
    // (x^2 - 2)^3 has two distinct real roots.
    auto p = tt::P({{0, -2}, {2, 1}});
    CHECK(count_real_roots(p * p * p) == 2);
    // (x-1)^2 (x+3)
    auto q = tt::P({{0, -1}, {1, 1}});
    CHECK(count_real_roots(q * q * tt::P({{0, 3}, {1, 1}})) == 2);
}

TEST_CASE("powers of x are stripped before the degree cap applies") {
    // x^(2^40) * (x^2 - 1): reduced degree 2, roots {-1, 0, 1}.
    auto p = SparsePoly::monomial(1, pow2(40) + 2) - SparsePoly::monomial(1, pow2(40));
    CHECK(count_real_roots(p) == 3);
    CHECK(count_integer_roots(p) == 3);

    // Without the shift the same tail is over the cap.
    ResourceCaps tight;
    tight.sturm_degree_cap = 10;
    CHECK_THROWS_AS(count_real_roots(tt::P({{0, -1}, {11, 1}}), tight),
                    ResourceCapError);
    CHECK(count_real_roots(tt::P({{30, -1}, {40, 1}}), tight) == 3); // x^30(x^10-1)
}

TEST_CASE("integer root counts on known polynomials") {
    CHECK(count_integer_roots(tt::P({{0, 2}, {1, -3}, {2, 1}})) == 2);
    CHECK(count_integer_roots(tt::P({{0, -2}, {2, 1}})) == 0);  // sqrt(2) is not integral
    CHECK(count_integer_roots(tt::P({{0, -3}, {1, 2}})) == 0);  // root 3/2
    CHECK(count_integer_roots(tt::P({{1, -1}, {3, 1}})) == 3);
    CHECK(count_integer_roots(tt::P({{0, 9}})) == 0);

    // Scaling by a constant changes nothing.
    auto p = tt::P({{0, -2}, {1, 1}}) * tt::P({{0, 5}, {1, 1}});
    CHECK(count_integer_roots(p * SparsePoly::constant(7)) == 2);
    // Mixed: one integral root, two irrational.
    CHECK(count_integer_roots(tt::P({{0, -2}, {2, 1}}) * tt::P({{0, -1}, {1, 1}})) == 1);
}

TEST_CASE("full prefix of the linear family: all roots integral") {
    auto g = prefix_product(GeneratorSpec::linear(), 8);
    CHECK(count_real_roots(g) == 8);
    CHECK(count_integer_roots(g) == 8);
}

TEST_CASE("real counts agree with Descartes bisection") {
    Rng rng(701);
    for (int iter = 0; iter < 200; ++iter) {
        auto p = tt::rand_poly(rng, 7, 60, 50);
        CHECK(count_real_roots(p) ==
              tt::count_real_roots_bisection(tt::dense_from_sparse(p)));
    }
}

TEST_CASE("real counts agree with bisection on products with known multiplicity") {
    Rng rng(702);
    for (int iter = 0; iter < 60; ++iter) {
        auto a = tt::rand_poly(rng, 4, 8, 12);
        auto b = tt::rand_poly(rng, 4, 8, 12);
        auto p = a * a * b; // forced repeated factors
        if (p.is_zero()) continue;
        CHECK(count_real_roots(p) ==
              tt::count_real_roots_bisection(tt::dense_from_sparse(p)));
    }
}

TEST_CASE("integer counts agree with exhaustive scanning") {
    Rng rng(703);
    for (int iter = 0; iter < 120; ++iter) {
        auto p = tt::rand_poly(rng, 5, 12, 20);
        CHECK(count_integer_roots(p) == scan_integer_roots(p));
    }
    // Products of random linear factors give known answers.
    for (int iter = 0; iter < 60; ++iter) {
        std::set<long> roots;
        auto p = SparsePoly::constant(static_cast<long>(rng.nonzero(4)));
        for (int j = 0; j < 4; ++j) {
            long r = rng.range(-10, 10);
            roots.insert(r);
            p = p * tt::P({{0, -r}, {1, 1}});
        }
        CHECK(count_integer_roots(p) == roots.size());
        CHECK(count_real_roots(p) == roots.size());
    }
}

TEST_CASE("count_real_roots_sps attaches every applicable certificate") {
    // (x^2-1)(x^2-4): k=1, m=2, t=2.
    SpsExpr e({tt::P({{0, -1}, {2, 1}}), tt::P({{0, -4}, {2, 1}})}, {{0, 1}});
    auto rc = count_real_roots_sps(e);
    CHECK(rc.real_roots == 4);
    CHECK(rc.nonzero_real_roots == 4);
    REQUIRE(rc.bounds.size() == 2);
    bool saw_product = false, saw_expansion = false;
    for (const auto& b : rc.bounds) {
        if (b.kind == BoundCert::Kind::descartes_product) {
            saw_product = true;
            CHECK(b.value == 5);
        }
        if (b.kind == BoundCert::Kind::expansion_sum) {
            saw_expansion = true;
            CHECK(b.value == 7);
        }
    }
    CHECK(saw_product);
    CHECK(saw_expansion);
}

TEST_CASE("single-factor expressions also carry the nonzero-root bound") {
    auto rc = count_real_roots_sps(SpsExpr::single(tt::P({{0, -1}, {2, 1}})));
    CHECK(rc.real_roots == 2);
    bool saw_single = false;
    for (const auto& b : rc.bounds)
        if (b.kind == BoundCert::Kind::descartes_single) {
            saw_single = true;
            CHECK(b.value == 2); // 2t-2 nonzero real roots
        }
    CHECK(saw_single);

    // x^3 - x: the root at zero is excluded from the 2t-2 budget.
    auto rx = count_real_roots_sps(SpsExpr::single(tt::P({{1, -1}, {3, 1}})));
    CHECK(rx.real_roots == 3);
    CHECK(rx.nonzero_real_roots == 2);
}

TEST_CASE("record flag fires exactly at k*m*t") {
    auto hit = count_real_roots_sps(SpsExpr::single(tt::P({{0, -1}, {2, 1}})));
    CHECK(hit.record); // 2 roots, k*m*t = 2
    auto miss = count_real_roots_sps(SpsExpr::single(tt::P({{0, 1}, {2, 1}})));
    CHECK(!miss.record); // 0 roots

    CHECK_THROWS_AS(count_real_roots_sps(
                        SpsExpr({SparsePoly::variable(), SparsePoly::constant(-1),
                                 tt::P({{2, 1}})},
                                {{0, 0}, {1, 2}})),
                    InputError); // identically zero
}

TEST_CASE("random sweep: counts never exceed their certificates") {
    Rng rng(704);
    for (int iter = 0; iter < 150; ++iter) {
        auto e = tt::rand_expr(rng, 2, 3, 3, 10, 9);
        auto rc = count_real_roots_sps(e);
        for (const auto& b : rc.bounds) {
            if (b.kind == BoundCert::Kind::descartes_single)
                CHECK(BigInt(rc.nonzero_real_roots) <= b.value);
            else
                CHECK(BigInt(rc.real_roots) <= b.value);
        }
    }
}

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev(0) == SparsePoly::constant(1));
    CHECK(chebyshev(1) == SparsePoly::variable());
    CHECK(chebyshev(4) == tt::P({{0, 1}, {2, -8}, {4, 8}}));
    CHECK(chebyshev(8) == tt::P({{0, 1}, {2, -32}, {4, 160}, {6, -256}, {8, 128}}));

    // T_n has exactly n simple real roots in (-1, 1).
    for (std::uint64_t n : {2, 3, 5, 16, 31})
        CHECK(count_real_roots(chebyshev(n)) == n);

    // |T_n(1)| = 1 for all n.
    for (std::uint64_t n : {1, 2, 7, 20})
        CHECK(abs(eval_integer(chebyshev(n), BigInt(1))) == 1);

    ResourceCaps tight;
    tight.max_product_terms = 10;
    CHECK_THROWS_AS(chebyshev(10, tight), ResourceCapError);
    CHECK_NOTHROW(chebyshev(9, tight));
}

} // TEST_SUITE
