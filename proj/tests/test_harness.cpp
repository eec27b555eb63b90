#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "spslab/errors.hpp"
#include "spslab/harness.hpp"
#include "spslab/io.hpp"
#include "support.hpp"

using namespace spslab;
namespace tt = spslab::testing;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.k = {1, 2};
    cfg.m = {1, 2};
    cfg.t = {1, 2};
    cfg.samples = 20;
    cfg.exp_bound = 8;
    cfg.coeff_bound = 9;
    cfg.seed = 3;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("generated instances match the requested shape") {
    ExperimentConfig cfg;
    cfg.k = {2, 2};
    cfg.m = {2, 2};
    cfg.t = {2, 2};
    cfg.exp_bound = 10;
    cfg.coeff_bound = 5;
    Rng rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        auto e = generate_instance(cfg, rng);
        auto p = measure(e);
        CHECK(p.products == 2);
        CHECK(p.max_factors == 2);
        CHECK(p.max_terms == 2);
        CHECK(p.max_degree <= 10);
        CHECK(e.factors().size() == 4); // k*m, no sharing in random draws
        for (const auto& f : e.factors()) {
            CHECK(f.term_count() == 2);
            for (const auto& mono : f.monomials()) {
                CHECK(sgn(mono.coefficient) != 0);
                CHECK(abs(mono.coefficient) <= 5);
            }
        }
        // The generator redraws identically-zero sums, so expansion
        // must always be nonzero.
        CHECK(!expand(e).is_zero());
    }
}

TEST_CASE("generation is a pure function of the rng state") {
    auto cfg = small_config();
    Rng a(77), b(77);
    for (int iter = 0; iter < 10; ++iter)
        CHECK(serialize_instance(generate_instance(cfg, a)) ==
              serialize_instance(generate_instance(cfg, b)));
}

TEST_CASE("degenerate configurations are rejected") {
    ExperimentConfig cfg;
    cfg.t = {5, 5};
    cfg.exp_bound = 3; // only 4 distinct exponents available
    Rng rng(1);
    CHECK_THROWS_AS(generate_instance(cfg, rng), InputError);

    ExperimentConfig zero;
    zero.k = {0, 1};
    CHECK_THROWS_AS(generate_instance(zero, rng), InputError);

    ExperimentConfig flipped;
    flipped.m = {3, 2};
    CHECK_THROWS_AS(generate_instance(flipped, rng), InputError);

    ExperimentConfig coeffless;
    coeffless.coeff_bound = 0;
    CHECK_THROWS_AS(generate_instance(coeffless, rng), InputError);
}

TEST_CASE("run_hunt fills a consistent summary") {
    auto summary = run_hunt(small_config());
    CHECK(summary.samples == 20);
    REQUIRE(summary.rows.size() == 20);
    CHECK(summary.skipped == 0);

    std::uint64_t records = 0;
    double max_ratio = 0.0;
    for (const auto& row : summary.rows) {
        REQUIRE(row.real_roots.has_value());
        REQUIRE(row.int_roots.has_value());
        REQUIRE(row.ratio.has_value());
        CHECK(*row.int_roots <= *row.real_roots);
        CHECK(row.bound_expansion ==
              bound(BoundCert::Kind::expansion_sum, row.k, row.m, row.t).value);
        CHECK(row.bound_descartes.has_value() == (row.k == 1));
        CHECK(BigInt(*row.real_roots) <= row.bound_expansion);
        if (row.record) ++records;
        if (*row.ratio > max_ratio) max_ratio = *row.ratio;
    }
    CHECK(records == summary.records);
    CHECK(summary.max_ratio == doctest::Approx(max_ratio));
}

TEST_CASE("instances past the Sturm cap are skipped, not failed") {
    ExperimentConfig cfg;
    cfg.t = {3, 3};
    cfg.samples = 5;
    cfg.exp_bound = 10;
    cfg.coeff_bound = 9;
    cfg.seed = 5;
    cfg.caps.sturm_degree_cap = 1; // three distinct exponents always exceed this
    auto summary = run_hunt(cfg);
    CHECK(summary.skipped == 5);
    for (const auto& row : summary.rows) {
        CHECK(!row.real_roots.has_value());
        CHECK(!row.ratio.has_value());
        CHECK(row.bound_expansion > 0); // structural data survives
    }
    auto csv = report_csv(summary.rows, cfg.seed);
    CHECK(csv.find(",-,-,") != std::string::npos);
    CHECK(csv.find(",skip,") != std::string::npos);
}

TEST_CASE("report_csv emits exactly the documented columns") {
    RootReport row;
    row.instance_id = 7;
    row.s = 12;
    row.k = 2;
    row.m = 2;
    row.t = 3;
    row.deg_max = 9;
    row.real_roots = 4;
    row.int_roots = 1;
    row.bound_expansion = 35;
    row.ratio = 4.0 / 12.0;
    auto csv = report_csv({row}, 99);
    CHECK(csv ==
          "instance_id,s,k,m,t,deg_max,real_roots,int_roots,bound_descartes,"
          "bound_expansion,ratio,verdict,seed,millis\n"
          "7,12,2,2,3,9,4,1,-,35,0.333333,ok,99,0\n");
}

TEST_CASE("identical configs produce identical artifacts") {
    auto cfg = small_config();
    cfg.out_prefix = "/tmp/spslab_hunt_a";
    auto s1 = run_hunt(cfg);
    cfg.out_prefix = "/tmp/spslab_hunt_b";
    auto s2 = run_hunt(cfg);

    CHECK(slurp("/tmp/spslab_hunt_a.csv") == slurp("/tmp/spslab_hunt_b.csv"));

    // The JSON summaries match except for wall-clock time.
    auto ja = nlohmann::ordered_json::parse(slurp("/tmp/spslab_hunt_a.json"));
    auto jb = nlohmann::ordered_json::parse(slurp("/tmp/spslab_hunt_b.json"));
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
    CHECK(ja["violations"] == 0);
    CHECK(ja["config"]["rng"] == "mt19937_64/splitmix-split");
    CHECK(ja["config"]["seed"] == 3);

    for (const char* p : {"/tmp/spslab_hunt_a.csv", "/tmp/spslab_hunt_b.csv",
                          "/tmp/spslab_hunt_a.json", "/tmp/spslab_hunt_b.json"})
        std::remove(p);
}

TEST_CASE("different seeds explore different instances") {
    auto cfg = small_config();
    auto s1 = run_hunt(cfg);
    cfg.seed = 4;
    auto s2 = run_hunt(cfg);
    CHECK(report_csv(s1.rows, 3) != report_csv(s2.rows, 3));
}

TEST_CASE("demo: falling factorial products") {
    auto j = demo_pochhammer(2);
    CHECK(j["factors"] == 4);
    CHECK(j["real_roots"] == 4);
    CHECK(j["integer_roots"] == 4);
    CHECK(j["expected"] == 4);
    CHECK(j["bounds"].is_array());
    CHECK_THROWS_AS(demo_pochhammer(13), InputError);
}

TEST_CASE("demo: chebyshev root counts") {
    auto j = demo_chebyshev(3);
    CHECK(j["degree"] == 8);
    CHECK(j["real_roots"] == 8);
    CHECK(j["one_norm"] == "577"); // 1+32+160+256+128
    CHECK_THROWS_AS(demo_chebyshev(13), InputError);
}

TEST_CASE("demo: vanishing on the hitting set with a nonzero certificate") {
    auto j = demo_eq1(4);
    CHECK(j["hitting_verdict"]["outcome"] == "zero");
    CHECK(j["exact_verdict"]["outcome"] == "nonzero");
    CHECK(j["exact_verdict"]["witness"]["value"] == "24"); // 4!
    CHECK_THROWS_AS(demo_eq1(0), InputError);
}

} // TEST_SUITE
