#ifndef SPSLAB_HARNESS_HPP
#define SPSLAB_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spslab/roots.hpp"
#include "spslab/rng.hpp"
#include "spslab/sps_expr.hpp"

namespace spslab {

struct ParamRange {
    std::uint64_t lo = 1, hi = 1;
};

struct ExperimentConfig {
    ParamRange k{1, 1}, m{1, 1}, t{1, 1};
    std::uint64_t samples = 100;
    std::uint64_t exp_bound = 30;   // exponents drawn uniformly from [0, exp_bound]
    std::int64_t coeff_bound = 100; // nonzero coefficients from [-C, C]
    std::uint64_t seed = 0;
    ResourceCaps caps{};
    // When nonempty, run_hunt writes <prefix>.csv and <prefix>.json.
    std::string out_prefix;
};

// One random instance: k products of m factors, each factor t distinct
// exponents with nonzero coefficients. Identically zero draws (possible
// only for k >= 2) are rejected and redrawn, testing with pit_exact
// when the instance is small enough to expand and pit_random_mod
// otherwise; persistent zero draws end in InputError.
SpsExpr generate_instance(const ExperimentConfig& cfg, Rng& rng);

// One result row. Counting is skipped (not failed) when an instance
// overflows the expansion or Sturm caps; structural bounds are still
// reported, which is the point of sweeping into that regime.
struct RootReport {
    std::uint64_t instance_id = 0;
    BigInt s;
    std::uint64_t k = 0, m = 0, t = 0;
    BigInt deg_max;
    std::optional<std::uint64_t> real_roots;
    std::optional<std::uint64_t> int_roots;
    std::optional<BigInt> bound_descartes; // k = 1 only
    BigInt bound_expansion;
    std::optional<double> ratio; // real_roots / (k*m*t)
    bool record = false;
};

struct HuntSummary {
    std::uint64_t samples = 0;
    std::uint64_t skipped = 0;
    std::uint64_t records = 0;
    double max_ratio = 0.0;
    std::optional<std::uint64_t> max_ratio_instance;
    std::uint64_t elapsed_ms = 0;
    std::vector<RootReport> rows;
};

// Deterministic bytes: fixed column set, integers and %.6f ratios only,
// '-' for inapplicable cells, millis pinned to 0 so identical configs
// produce identical files (wall-clock time lives in the JSON summary).
std::string report_csv(const std::vector<RootReport>& rows, std::uint64_t seed);

// Root-count sweep over random instances. Anything breaking a proven
// bound aborts with TheoremViolation; the ratio observable is also
// sanity-checked against 3 on every k = 1 row.
HuntSummary run_hunt(const ExperimentConfig& cfg);

nlohmann::ordered_json summary_to_json(const HuntSummary& s,
                                       const ExperimentConfig& cfg);
nlohmann::ordered_json bound_to_json(const BoundCert& cert);

// Canned showcase runs for the CLI.
nlohmann::ordered_json demo_pochhammer(unsigned n, const ResourceCaps& caps = {});
nlohmann::ordered_json demo_chebyshev(unsigned j, const ResourceCaps& caps = {});
nlohmann::ordered_json demo_eq1(std::uint64_t m, const ResourceCaps& caps = {});

} // namespace spslab

#endif
