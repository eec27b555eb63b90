// Command-line front end: pit / roots / hunt / demo subcommands over
// JSON instance files. Exit codes: 0 ok, 1 usage, 2 bad input,
// 3 resource cap, 4 proven-bound violation.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spslab/depth4.hpp"
#include "spslab/harness.hpp"
#include "spslab/io.hpp"
#include "spslab/pit.hpp"
#include "spslab/roots.hpp"

namespace {

using namespace spslab;

// Depth-4 inputs are admitted everywhere an SPS is, via the power
// substitution.
SpsExpr load_as_sps(const std::string& path, const ResourceCaps& caps) {
    const Instance inst = load_instance(path);
    if (inst.is_sps()) return inst.sps();
    return substitute_powers(inst.depth4(), caps);
}

// "LO:HI" or a single "N".
ParamRange parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const std::uint64_t v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, colon)),
                std::stoull(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO:HI, got \"" + text + "\"");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"sparse sum-of-products polynomial lab"};
    app.require_subcommand(1);

    ResourceCaps caps;

    // ---- pit ----
    auto* pit_cmd = app.add_subcommand("pit", "zero test an instance");
    std::string pit_input, pit_method = "hitting", pit_generator = "linear";
    std::uint64_t pit_prefix = 1, pit_trials = 5, pit_seed = 0;
    pit_cmd->add_option("--input", pit_input, "instance file")->required();
    pit_cmd->add_option("--method", pit_method, "hitting | random | exact")
        ->check(CLI::IsMember({"hitting", "random", "exact"}));
    pit_cmd->add_option("--generator", pit_generator,
                        "vanishing-set family for --method hitting")
        ->check(CLI::IsMember({"linear", "unity", "mixed"}));
    pit_cmd->add_option("--prefix", pit_prefix, "vanishing-set size m");
    pit_cmd->add_option("--trials", pit_trials, "random-method trials");
    pit_cmd->add_option("--seed", pit_seed, "random-method seed");
    pit_cmd->add_option("--monomial-cap", caps.max_product_terms, "expansion term cap");

    // ---- roots ----
    auto* roots_cmd = app.add_subcommand("roots", "count real and integer roots");
    std::string roots_input;
    roots_cmd->add_option("--input", roots_input, "instance file")->required();
    roots_cmd->add_option("--sturm-cap", caps.sturm_degree_cap, "max Sturm degree");
    roots_cmd->add_option("--monomial-cap", caps.max_product_terms, "expansion term cap");

    // ---- hunt ----
    auto* hunt_cmd = app.add_subcommand("hunt", "random root-count sweep");
    ExperimentConfig cfg;
    std::string k_range = "1", m_range = "1", t_range = "1";
    hunt_cmd->add_option("--k", k_range, "products, N or LO:HI");
    hunt_cmd->add_option("--m", m_range, "factors per product, N or LO:HI");
    hunt_cmd->add_option("--t", t_range, "monomials per factor, N or LO:HI");
    hunt_cmd->add_option("--samples", cfg.samples, "instances to draw");
    hunt_cmd->add_option("--coeff-bound", cfg.coeff_bound, "coefficients in [-C, C]");
    hunt_cmd->add_option("--exp-bound", cfg.exp_bound, "exponents in [0, B]");
    hunt_cmd->add_option("--seed", cfg.seed, "master seed");
    hunt_cmd->add_option("--out", cfg.out_prefix, "write <prefix>.csv and <prefix>.json");
    hunt_cmd->add_option("--monomial-cap", cfg.caps.max_product_terms,
                         "expansion term cap");
    hunt_cmd->add_option("--sturm-cap", cfg.caps.sturm_degree_cap, "max Sturm degree");

    // ---- demo ----
    auto* demo_cmd = app.add_subcommand("demo", "canned showcase runs");
    std::string demo_name;
    unsigned demo_n = 3;
    demo_cmd->add_option("--name", demo_name, "pochhammer | chebyshev | eq1")
        ->required()
        ->check(CLI::IsMember({"pochhammer", "chebyshev", "eq1"}));
    demo_cmd->add_option("--n", demo_n, "index (2^n factors / T_{2^n} / m points)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version land here too; those keep exit 0.
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (pit_cmd->parsed()) {
        const SpsExpr e = load_as_sps(pit_input, caps);
        PitVerdict v;
        if (pit_method == "hitting") {
            GeneratorSpec spec = pit_generator == "linear" ? GeneratorSpec::linear()
                                 : pit_generator == "unity"
                                     ? GeneratorSpec::cyclotomic_like()
                                     : GeneratorSpec::mixed();
            v = pit_hitting_set(e, hitting_points(spec, pit_prefix), caps);
        } else if (pit_method == "random") {
            PitOptions opts;
            opts.caps = caps;
            v = pit_random_mod(e, pit_trials, pit_seed, opts);
        } else {
            v = pit_exact(e, caps);
        }
        std::cout << verdict_to_json(v).dump(2) << "\n";
        return 0;
    }

    if (roots_cmd->parsed()) {
        const SpsExpr e = load_as_sps(roots_input, caps);
        const SpsRootCount counted = count_real_roots_sps(e, caps);
        nlohmann::ordered_json j;
        j["real_roots"] = counted.real_roots;
        j["nonzero_real_roots"] = counted.nonzero_real_roots;
        j["integer_roots"] = count_integer_roots(expand(e, caps), caps);
        j["record"] = counted.record;
        j["bounds"] = nlohmann::ordered_json::array();
        for (const auto& cert : counted.bounds)
            j["bounds"].push_back(bound_to_json(cert));
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (hunt_cmd->parsed()) {
        cfg.k = parse_range(k_range);
        cfg.m = parse_range(m_range);
        cfg.t = parse_range(t_range);
        const HuntSummary s = run_hunt(cfg);
        std::cout << summary_to_json(s, cfg).dump(2) << "\n";
        return 0;
    }

    if (demo_name == "pochhammer")
        std::cout << demo_pochhammer(demo_n, caps).dump(2) << "\n";
    else if (demo_name == "chebyshev")
        std::cout << demo_chebyshev(demo_n, caps).dump(2) << "\n";
    else
        std::cout << demo_eq1(demo_n, caps).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const spslab::InputError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const spslab::ResourceCapError& err) {
        std::cerr << "resource cap: " << err.what() << "\n";
        return 3;
    } catch (const spslab::PrimeSearchError& err) {
        std::cerr << "resource cap: " << err.what() << "\n";
        return 3;
    } catch (const spslab::TheoremViolation& err) {
        std::cerr << "PROVEN BOUND VIOLATED: " << err.what() << "\n";
        return 4;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
