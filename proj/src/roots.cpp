#include "spslab/roots.hpp"

#include <utility>
#include <vector>

namespace spslab {

namespace {

// Dense integer polynomial, coefficient of x^i at index i, no trailing
// zeros (zero polynomial = empty vector). Only used below the Sturm
// degree cap, so density is affordable.
using Dense = std::vector<BigInt>;

void normalize(Dense& d) {
    while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

std::size_t deg(const Dense& d) { return d.size() - 1; }

Dense derivative(const Dense& d) {
    Dense out;
    if (d.size() < 2) return out;
    out.reserve(d.size() - 1);
    for (std::size_t i = 1; i < d.size(); ++i)
        out.push_back(d[i] * static_cast<unsigned long>(i));
    normalize(out);
    return out;
}

// Positive gcd of the coefficients.
BigInt content(const Dense& d) {
    BigInt g = 0;
    for (const auto& c : d) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Dense primitive_part(Dense d) {
    normalize(d);
    if (d.empty()) return d;
    const BigInt g = content(d);
    if (g > 1)
        for (auto& c : d) c /= g;
    return d;
}

// Pseudo-remainder with the multiplier forced positive: returns R with
// R = lambda * (A mod B) for some lambda > 0, deg R < deg B. Keeping
// lambda positive is what lets the Sturm chain use these remainders
// without disturbing sign counts.
Dense positive_prem(Dense A, const Dense& B) {
    const BigInt& lcb = B.back();
    unsigned long steps = 0;
    while (!A.empty() && A.size() >= B.size()) {
        const std::size_t shift = deg(A) - deg(B);
        const BigInt lca = A.back();
        for (auto& c : A) c *= lcb;
        for (std::size_t i = 0; i < B.size(); ++i)
            A[i + shift] -= lca * B[i];
        ++steps;
        normalize(A);
    }
    // Each step multiplied by lc(B); an odd number of negative
    // multipliers flips the sign.
    if (sgn(lcb) < 0 && (steps & 1))
        for (auto& c : A) c = -c;
    return A;
}

Dense gcd_primitive(Dense a, Dense b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = primitive_part(positive_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (sgn(a.back()) < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Exact quotient a / b; only called when b divides a in Z[x].
Dense exact_div(Dense a, const Dense& b) {
    Dense q(a.size() - b.size() + 1, BigInt(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = deg(a) - deg(b);
        BigInt c;
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= c * b[i];
        normalize(a);
    }
    normalize(q);
    return q;
}

// Distinct-root kernel: p divided by gcd(p, p'), primitive.
Dense squarefree_part(const Dense& p) {
    Dense h = primitive_part(p);
    if (h.size() < 2) return h;
    const Dense g = gcd_primitive(h, derivative(h));
    if (g.size() < 2) return h;
    return exact_div(std::move(h), g);
}

// Chain S0 = g, S1 = g', S_{i+1} = -(S_{i-1} mod S_i) up to constant.
std::vector<Dense> sturm_chain(const Dense& g) {
    std::vector<Dense> chain;
    chain.push_back(g);
    Dense d = primitive_part(derivative(g));
    if (d.empty()) return chain;
    chain.push_back(std::move(d));
    while (chain.back().size() > 1) {
        Dense r = positive_prem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break; // g was not squarefree; callers prevent this
        for (auto& c : r) c = -c;
        chain.push_back(primitive_part(std::move(r)));
    }
    return chain;
}

std::size_t count_flips(const std::vector<int>& signs) {
    std::size_t flips = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++flips;
        prev = s;
    }
    return flips;
}

std::size_t variations_at_pos_inf(const std::vector<Dense>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& s : chain) signs.push_back(s.empty() ? 0 : sgn(s.back()));
    return count_flips(signs);
}

std::size_t variations_at_neg_inf(const std::vector<Dense>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& s : chain) {
        if (s.empty()) {
            signs.push_back(0);
            continue;
        }
        const int lead = sgn(s.back());
        signs.push_back((deg(s) % 2) ? -lead : lead);
    }
    return count_flips(signs);
}

// Sign of s(num/den) for den > 0, via the homogenized integer value
// sum(a_j * num^j * den^(deg-j)).
int sign_at_rational(const Dense& s, const BigInt& num, const BigInt& den) {
    if (s.empty()) return 0;
    BigInt acc = s.back();
    BigInt dpow = 1;
    for (std::size_t j = s.size() - 1; j-- > 0;) {
        dpow *= den;
        acc = acc * num + s[j] * dpow;
    }
    return sgn(acc);
}

std::size_t variations_at(const std::vector<Dense>& chain, const BigRat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& s : chain)
        signs.push_back(sign_at_rational(s, x.get_num(), x.get_den()));
    return count_flips(signs);
}

BigInt eval_dense(const Dense& d, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        acc = acc * x + d[i];
    return acc;
}

// Every real root of d has |z| < returned bound (Cauchy).
BigInt cauchy_bound(const Dense& d) {
    BigInt max_abs = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (abs(d[i]) > max_abs) max_abs = abs(d[i]);
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), max_abs.get_mpz_t(), d.back().get_mpz_t());
    return abs(q) + 2;
}

// Shared preprocessing: factor out x^v, check the residual degree
// against the cap, and hand back the dense residual plus whether 0 is a
// root. The shift happens before the cap check on purpose, so
// x^(2^40) * (x^2 - 1) is in scope even though its degree is not.
struct Reduced {
    Dense poly;     // p / x^v, nonzero constant term
    bool zero_root; // v > 0
};

Reduced reduce_for_sturm(const SparsePoly& p, const ResourceCaps& caps) {
    if (p.is_zero())
        throw InputError("root counting rejects the zero polynomial");
    const BigInt& v = p.monomials().front().exponent;
    const BigInt reduced_deg = *p.degree() - v;
    if (reduced_deg > BigInt(caps.sturm_degree_cap))
        throw ResourceCapError("degree " + reduced_deg.get_str() +
                               " after factoring x^" + v.get_str() +
                               " exceeds Sturm cap " +
                               std::to_string(caps.sturm_degree_cap));
    Reduced r;
    r.zero_root = sgn(v) > 0;
    r.poly.assign(to_u64(reduced_deg) + 1, BigInt(0));
    for (const auto& t : p.monomials())
        r.poly[to_u64(t.exponent - v)] = t.coefficient;
    return r;
}

} // namespace

std::uint64_t count_real_roots(const SparsePoly& p, const ResourceCaps& caps) {
    const Reduced r = reduce_for_sturm(p, caps);
    std::uint64_t count = r.zero_root ? 1 : 0;
    if (r.poly.size() < 2) return count;
    const auto chain = sturm_chain(squarefree_part(r.poly));
    return count + variations_at_neg_inf(chain) - variations_at_pos_inf(chain);
}

std::uint64_t count_integer_roots(const SparsePoly& p, const ResourceCaps& caps) {
    const Reduced r = reduce_for_sturm(p, caps);
    std::uint64_t count = r.zero_root ? 1 : 0;
    if (r.poly.size() < 2) return count;

    const Dense g = squarefree_part(r.poly);
    const auto chain = sturm_chain(g);
    const BigInt m = cauchy_bound(g);
    const BigRat half(1, 2);

    struct Node {
        BigRat lo, hi;
        std::size_t vlo, vhi;
    };
    std::vector<Node> stack;
    stack.push_back({BigRat(-m), BigRat(m),
                     variations_at(chain, BigRat(-m)),
                     variations_at(chain, BigRat(m))});

    // Defensive ceiling; only reachable if squarefree reduction failed,
    // in which case bisection would never separate a repeated root.
    std::size_t budget = 200'000;

    while (!stack.empty()) {
        if (budget-- == 0)
            throw ResourceCapError("integer root isolation did not converge");
        Node n = std::move(stack.back());
        stack.pop_back();
        const std::size_t roots_here = n.vlo - n.vhi; // roots in (lo, hi]
        if (roots_here == 0) continue;
        if (roots_here == 1 && n.hi - n.lo <= half) {
            // At most one integer fits in a half-open interval this
            // narrow; confirm it exactly.
            BigInt cand;
            mpz_fdiv_q(cand.get_mpz_t(), n.hi.get_num().get_mpz_t(),
                       n.hi.get_den().get_mpz_t());
            if (BigRat(cand) > n.lo && sgn(eval_dense(g, cand)) == 0)
                ++count;
            continue;
        }
        BigRat mid = (n.lo + n.hi) / 2;
        const std::size_t vmid = variations_at(chain, mid);
        stack.push_back({n.lo, mid, n.vlo, vmid});
        stack.push_back({std::move(mid), n.hi, vmid, n.vhi});
    }
    return count;
}

BoundCert bound(BoundCert::Kind kind, std::uint64_t k, std::uint64_t m,
                std::uint64_t t) {
    if (k < 1 || m < 1 || t < 1)
        throw InputError("bound: k, m, t must all be >= 1");
    BoundCert c;
    c.kind = kind;
    c.k = k;
    c.m = m;
    c.t = t;
    switch (kind) {
    case BoundCert::Kind::descartes_product:
        if (k != 1)
            throw InputError("descartes_product certificate only covers k = 1");
        c.value = 2 * BigInt(static_cast<unsigned long>(m)) *
                      static_cast<unsigned long>(t - 1) + 1;
        break;
    case BoundCert::Kind::expansion_sum:
        c.value = 2 * BigInt(static_cast<unsigned long>(k)) * pow_ui(t, m) - 1;
        break;
    case BoundCert::Kind::descartes_single:
        c.value = 2 * BigInt(static_cast<unsigned long>(t)) - 2;
        break;
    }
    return c;
}

SpsRootCount count_real_roots_sps(const SpsExpr& e, const ResourceCaps& caps) {
    const SparsePoly p = expand(e, caps);
    if (p.is_zero())
        throw InputError("count_real_roots_sps: expression is identically zero");

    SpsRootCount out;
    out.real_roots = count_real_roots(p, caps);
    const bool zero_root = sgn(p.monomials().front().exponent) > 0;
    out.nonzero_real_roots = out.real_roots - (zero_root ? 1 : 0);

    const SpsParams params = measure(e);
    const std::uint64_t k = params.products;
    const std::uint64_t m = params.max_factors;
    const std::uint64_t t = params.max_terms;

    out.bounds.push_back(bound(BoundCert::Kind::expansion_sum, k, m, t));
    if (k == 1) {
        out.bounds.push_back(bound(BoundCert::Kind::descartes_product, k, m, t));
        if (m == 1)
            out.bounds.push_back(bound(BoundCert::Kind::descartes_single, k, m, t));
    }

    for (const auto& cert : out.bounds) {
        // descartes_single bounds nonzero roots only; the others bound
        // the full count.
        const std::uint64_t counted = cert.kind == BoundCert::Kind::descartes_single
                                          ? out.nonzero_real_roots
                                          : out.real_roots;
        if (BigInt(static_cast<unsigned long>(counted)) > cert.value)
            throw TheoremViolation(
                "real-root count " + std::to_string(counted) +
                " exceeds proven bound " + cert.value.get_str() +
                " (k=" + std::to_string(k) + " m=" + std::to_string(m) +
                " t=" + std::to_string(t) + ")");
    }

    const BigInt envelope = BigInt(static_cast<unsigned long>(k)) *
                            static_cast<unsigned long>(m) *
                            static_cast<unsigned long>(t);
    out.record = BigInt(static_cast<unsigned long>(out.real_roots)) >= envelope;
    return out;
}

SparsePoly chebyshev(std::uint64_t n, const ResourceCaps& caps) {
    if (n + 1 > caps.max_product_terms)
        throw ResourceCapError("chebyshev index " + std::to_string(n) +
                               " exceeds term cap");
    if (n == 0) return SparsePoly::constant(1);
    Dense prev{BigInt(1)};
    Dense cur{BigInt(0), BigInt(1)};
    for (std::uint64_t i = 2; i <= n; ++i) {
        Dense next(cur.size() + 1, BigInt(0));
        for (std::size_t j = 0; j < cur.size(); ++j)
            next[j + 1] = 2 * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j)
            next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < cur.size(); ++i)
        if (sgn(cur[i]) != 0)
            terms.push_back({BigInt(static_cast<unsigned long>(i)), cur[i]});
    return SparsePoly::from_monomials(std::move(terms));
}

} // namespace spslab
