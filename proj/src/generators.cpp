#include "spslab/generators.hpp"

#include <algorithm>

namespace spslab {

GeneratorSpec GeneratorSpec::linear() { return {GeneratorKind::linear, 1, {}}; }

GeneratorSpec GeneratorSpec::cyclotomic_like() {
    return {GeneratorKind::cyclotomic_like, 1, {}};
}

// c = 1 fails already at i = 2 (constant term 5 > 2^2), c = 2 holds.
GeneratorSpec GeneratorSpec::mixed() { return {GeneratorKind::mixed, 2, {}}; }

GeneratorSpec GeneratorSpec::custom(std::map<std::uint64_t, SparsePoly> table,
                                    unsigned c) {
    return {GeneratorKind::custom, c, std::move(table)};
}

SparsePoly generator_term(const GeneratorSpec& spec, std::uint64_t i) {
    if (i == 0) throw InputError("generator_term: indices start at 1");
    const BigInt bi(static_cast<unsigned long>(i));
    switch (spec.kind) {
    case GeneratorKind::linear:
        return SparsePoly::from_monomials({{BigInt(1), BigInt(1)}, {BigInt(0), -bi}});
    case GeneratorKind::cyclotomic_like:
        return SparsePoly::from_monomials({{bi, BigInt(1)}, {BigInt(0), BigInt(-1)}});
    case GeneratorKind::mixed: {
        // x^i - 2^i x + i^2 + 1; at i = 1 the x terms collide and the
        // canonical form is -x + 2.
        BigInt two_i;
        mpz_setbit(two_i.get_mpz_t(), i);
        return SparsePoly::from_monomials(
            {{bi, BigInt(1)}, {BigInt(1), -two_i}, {BigInt(0), bi * bi + 1}});
    }
    case GeneratorKind::custom: {
        auto it = spec.table.find(i);
        if (it == spec.table.end())
            throw InputError("custom generator has no entry for index " +
                             std::to_string(i));
        return it->second;
    }
    }
    throw InputError("generator_term: unknown kind");
}

GeneratorCheck validate_generator(const GeneratorSpec& spec, std::uint64_t range_max) {
    GeneratorCheck check;
    for (std::uint64_t i = 1; i <= range_max; ++i) {
        SparsePoly f;
        try {
            f = generator_term(spec, i);
        } catch (const InputError& err) {
            check.violations.push_back({i, err.what()});
            continue;
        }
        if (f.is_zero()) {
            check.violations.push_back({i, "zero polynomial"});
            continue;
        }
        const BigInt budget = pow_ui(i, spec.c); // i^c
        if (*f.degree() > budget)
            check.violations.push_back(
                {i, "degree " + f.degree()->get_str() + " > " + budget.get_str()});
        for (const auto& t : f.monomials()) {
            // |c| <= 2^(i^c), compared via bit length so the bound is
            // never materialized.
            const BigInt bits(static_cast<unsigned long>(bit_length(t.coefficient)));
            const bool ok = bits <= budget ||
                            (bits == budget + 1 &&
                             mpz_popcount(BigInt(abs(t.coefficient)).get_mpz_t()) == 1);
            if (!ok)
                check.violations.push_back(
                    {i, "coefficient of x^" + t.exponent.get_str() +
                            " exceeds 2^" + budget.get_str()});
        }
    }
    check.ok = check.violations.empty();
    return check;
}

SparsePoly prefix_product(const GeneratorSpec& spec, std::uint64_t m,
                          const ResourceCaps& caps) {
    SparsePoly g = SparsePoly::constant(1);
    for (std::uint64_t i = 1; i <= m; ++i)
        g = mul(g, generator_term(spec, i), caps);
    return g;
}

HittingSetDescr HittingSetDescr::integers(std::vector<BigInt> pts, std::string source) {
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("hitting set has repeated points");
    HittingSetDescr h;
    h.kind = Kind::integer_points;
    h.points = std::move(pts);
    h.source = std::move(source);
    return h;
}

HittingSetDescr HittingSetDescr::unity(std::vector<std::uint64_t> orders,
                                       std::string source) {
    for (std::uint64_t i : orders)
        if (i == 0) throw InputError("root-of-unity order must be >= 1");
    HittingSetDescr h;
    h.kind = Kind::unity_roots;
    h.orders = std::move(orders);
    h.source = std::move(source);
    return h;
}

HittingSetDescr hitting_points(const GeneratorSpec& spec, std::uint64_t m) {
    switch (spec.kind) {
    case GeneratorKind::linear: {
        std::vector<BigInt> pts;
        pts.reserve(m);
        for (std::uint64_t i = 1; i <= m; ++i)
            pts.emplace_back(static_cast<unsigned long>(i));
        return HittingSetDescr::integers(std::move(pts),
                                         "linear[m=" + std::to_string(m) + "]");
    }
    case GeneratorKind::cyclotomic_like: {
        std::vector<std::uint64_t> orders(m);
        for (std::uint64_t i = 1; i <= m; ++i) orders[i - 1] = i;
        return HittingSetDescr::unity(std::move(orders),
                                      "cyclotomic[m=" + std::to_string(m) + "]");
    }
    case GeneratorKind::mixed:
    case GeneratorKind::custom:
        throw InputError("no closed-form hitting set for this generator kind");
    }
    throw InputError("hitting_points: unknown kind");
}

} // namespace spslab
