#include "spslab/harness.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "spslab/generators.hpp"
#include "spslab/io.hpp"
#include "spslab/pit.hpp"

namespace spslab {

using nlohmann::ordered_json;

namespace {

std::uint64_t draw_range(Rng& rng, const ParamRange& r) {
    if (r.lo < 1 || r.lo > r.hi)
        throw InputError("parameter range [" + std::to_string(r.lo) + ", " +
                         std::to_string(r.hi) + "] is invalid");
    return r.lo + rng.below(r.hi - r.lo + 1);
}

bool expandable(const SpsExpr& e, const ResourceCaps& caps) {
    const SpsParams p = measure(e);
    BigInt predicted = pow_big(BigInt(p.max_terms), p.max_factors);
    predicted *= static_cast<unsigned long>(p.products);
    return predicted <= BigInt(caps.max_product_terms);
}

} // namespace

SpsExpr generate_instance(const ExperimentConfig& cfg, Rng& rng) {
    if (cfg.coeff_bound < 1)
        throw InputError("coeff_bound must be >= 1");

    const std::uint64_t k = draw_range(rng, cfg.k);
    const std::uint64_t m = draw_range(rng, cfg.m);
    const std::uint64_t t = draw_range(rng, cfg.t);
    if (t > cfg.exp_bound + 1)
        throw InputError("cannot pick " + std::to_string(t) +
                         " distinct exponents from [0, " +
                         std::to_string(cfg.exp_bound) + "]");

    for (unsigned attempt = 0; attempt < 64; ++attempt) {
        std::vector<SparsePoly> factors;
        factors.reserve(k * m);
        for (std::uint64_t f = 0; f < k * m; ++f) {
            std::set<std::uint64_t> exps;
            while (exps.size() < t)
                exps.insert(rng.below(cfg.exp_bound + 1));
            std::vector<Monomial> terms;
            for (std::uint64_t e : exps)
                terms.push_back({BigInt(static_cast<unsigned long>(e)),
                                 BigInt(static_cast<long>(rng.nonzero(cfg.coeff_bound)))});
            factors.push_back(SparsePoly::from_monomials(std::move(terms)));
        }
        std::vector<std::vector<std::size_t>> products(k);
        for (std::uint64_t i = 0; i < k; ++i)
            for (std::uint64_t j = 0; j < m; ++j)
                products[i].push_back(i * m + j);
        SpsExpr e(std::move(factors), std::move(products));

        // Products of nonzero factors cannot vanish, so only sums can.
        if (k == 1) return e;
        if (expandable(e, cfg.caps)) {
            if (pit_exact(e, cfg.caps).outcome == PitOutcome::nonzero) return e;
        } else {
            if (pit_random_mod(e, 3, rng.next_u64()).outcome == PitOutcome::nonzero)
                return e;
        }
    }
    throw InputError("generate_instance: 64 consecutive zero draws, "
                     "the configured grid looks degenerate");
}

namespace {

std::string fmt_ratio(double r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r);
    return buf;
}

} // namespace

std::string report_csv(const std::vector<RootReport>& rows, std::uint64_t seed) {
    std::ostringstream out;
    out << "instance_id,s,k,m,t,deg_max,real_roots,int_roots,bound_descartes,"
           "bound_expansion,ratio,verdict,seed,millis\n";
    for (const auto& r : rows) {
        out << r.instance_id << ',' << r.s.get_str() << ',' << r.k << ',' << r.m
            << ',' << r.t << ',' << r.deg_max.get_str() << ',';
        if (r.real_roots) out << *r.real_roots;
        else out << '-';
        out << ',';
        if (r.int_roots) out << *r.int_roots;
        else out << '-';
        out << ',';
        if (r.bound_descartes) out << r.bound_descartes->get_str();
        else out << '-';
        out << ',' << r.bound_expansion.get_str() << ',';
        if (r.ratio) out << fmt_ratio(*r.ratio);
        else out << '-';
        out << ',' << (r.real_roots ? "ok" : "skip") << ',' << seed << ",0\n";
    }
    return out.str();
}

HuntSummary run_hunt(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    HuntSummary summary;
    summary.samples = cfg.samples;

    for (std::uint64_t id = 0; id < cfg.samples; ++id) {
        Rng rng = Rng::child(cfg.seed, id);
        const SpsExpr e = generate_instance(cfg, rng);
        const SpsParams p = measure(e);

        RootReport row;
        row.instance_id = id;
        row.s = p.size;
        row.k = p.products;
        row.m = p.max_factors;
        row.t = p.max_terms;
        row.deg_max = p.max_degree;
        row.bound_expansion =
            bound(BoundCert::Kind::expansion_sum, row.k, row.m, row.t).value;
        if (row.k == 1)
            row.bound_descartes =
                bound(BoundCert::Kind::descartes_product, 1, row.m, row.t).value;

        try {
            const SpsRootCount counted = count_real_roots_sps(e, cfg.caps);
            row.real_roots = counted.real_roots;
            row.record = counted.record;
            row.int_roots = count_integer_roots(expand(e, cfg.caps), cfg.caps);
            const double ratio =
                static_cast<double>(counted.real_roots) /
                (static_cast<double>(row.k) * static_cast<double>(row.m) *
                 static_cast<double>(row.t));
            row.ratio = ratio;
            if (row.k == 1 && ratio > 3.0)
                throw TheoremViolation("instance " + std::to_string(id) +
                                       ": k=1 ratio " + fmt_ratio(ratio) +
                                       " breaks the proven ceiling");
            if (counted.record) ++summary.records;
            if (!summary.max_ratio_instance || ratio > summary.max_ratio) {
                summary.max_ratio = ratio;
                summary.max_ratio_instance = id;
            }
        } catch (const ResourceCapError&) {
            // Out of counting range; keep the structural row.
            ++summary.skipped;
        }
        summary.rows.push_back(std::move(row));
    }

    summary.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());

    if (!cfg.out_prefix.empty()) {
        std::ofstream csv(cfg.out_prefix + ".csv", std::ios::binary);
        if (!csv) throw InputError(cfg.out_prefix + ".csv: cannot write");
        csv << report_csv(summary.rows, cfg.seed);
        std::ofstream js(cfg.out_prefix + ".json", std::ios::binary);
        if (!js) throw InputError(cfg.out_prefix + ".json: cannot write");
        js << summary_to_json(summary, cfg).dump(2) << "\n";
    }
    return summary;
}

ordered_json summary_to_json(const HuntSummary& s, const ExperimentConfig& cfg) {
    ordered_json j;
    j["samples"] = s.samples;
    j["skipped"] = s.skipped;
    j["records"] = s.records;
    j["violations"] = 0; // a violation aborts the run instead
    if (s.max_ratio_instance) {
        j["max_ratio"] = fmt_ratio(s.max_ratio);
        j["max_ratio_instance"] = *s.max_ratio_instance;
    }
    j["elapsed_ms"] = s.elapsed_ms;
    j["config"] = {{"k", {cfg.k.lo, cfg.k.hi}},
                   {"m", {cfg.m.lo, cfg.m.hi}},
                   {"t", {cfg.t.lo, cfg.t.hi}},
                   {"samples", cfg.samples},
                   {"exp_bound", cfg.exp_bound},
                   {"coeff_bound", cfg.coeff_bound},
                   {"seed", cfg.seed},
                   {"rng", Rng::name()}};
    return j;
}

ordered_json bound_to_json(const BoundCert& cert) {
    ordered_json j;
    switch (cert.kind) {
    case BoundCert::Kind::descartes_product: j["kind"] = "descartes-product"; break;
    case BoundCert::Kind::expansion_sum: j["kind"] = "expansion-sum"; break;
    case BoundCert::Kind::descartes_single: j["kind"] = "descartes-single"; break;
    }
    j["value"] = cert.value.get_str();
    j["k"] = cert.k;
    j["m"] = cert.m;
    j["t"] = cert.t;
    return j;
}

ordered_json demo_pochhammer(unsigned n, const ResourceCaps& caps) {
    if (n > 12)
        throw InputError("demo pochhammer: 2^n factors with n > 12 is past the caps");
    const std::uint64_t m = 1ULL << n;
    std::vector<SparsePoly> factors;
    const GeneratorSpec spec = GeneratorSpec::linear();
    for (std::uint64_t i = 1; i <= m; ++i)
        factors.push_back(generator_term(spec, i));
    const SpsExpr e = SpsExpr::product_of(std::move(factors));
    const SpsRootCount counted = count_real_roots_sps(e, caps);
    const std::uint64_t ints = count_integer_roots(expand(e, caps), caps);

    ordered_json j;
    j["name"] = "pochhammer";
    j["n"] = n;
    j["factors"] = m;
    j["real_roots"] = counted.real_roots;
    j["integer_roots"] = ints;
    j["expected"] = m;
    j["record"] = counted.record;
    j["bounds"] = ordered_json::array();
    for (const auto& cert : counted.bounds) j["bounds"].push_back(bound_to_json(cert));
    return j;
}

ordered_json demo_chebyshev(unsigned jj, const ResourceCaps& caps) {
    if (jj > 12) throw InputError("demo chebyshev: degree 2^j with j > 12 is past the caps");
    const std::uint64_t n = 1ULL << jj;
    const SparsePoly t = chebyshev(n, caps);
    ordered_json j;
    j["name"] = "chebyshev";
    j["j"] = jj;
    j["degree"] = n;
    j["real_roots"] = count_real_roots(t, caps);
    j["expected"] = n;
    j["one_norm"] = one_norm(t).get_str();
    return j;
}

ordered_json demo_eq1(std::uint64_t m, const ResourceCaps& caps) {
    if (m == 0) throw InputError("demo eq1: m must be >= 1");
    std::vector<SparsePoly> factors;
    const GeneratorSpec spec = GeneratorSpec::linear();
    for (std::uint64_t i = 1; i <= m; ++i)
        factors.push_back(generator_term(spec, i));
    const SpsExpr e = SpsExpr::product_of(std::move(factors));
    const HittingSetDescr h = hitting_points(spec, m);

    ordered_json j;
    j["name"] = "eq1";
    j["m"] = m;
    // The pair that matters: vanishes everywhere on the prescribed
    // point set, provably nonzero as a polynomial.
    j["hitting_set"] = h.source;
    j["hitting_verdict"] = verdict_to_json(pit_hitting_set(e, h, caps));
    j["exact_verdict"] = verdict_to_json(pit_exact(e, caps));
    return j;
}

} // namespace spslab
