#include <doctest.h>

#include "pebbling/errors.hpp"
#include "pebbling/properties.hpp"
#include "pebbling/report.hpp"
#include "pebbling/search.hpp"

using namespace pebbling;

namespace {

// report JSON with the volatile wall-clock field zeroed
std::string stable_dump(PropertyReport report) {
    report.wall_ms = 0;
    return property_report_json(report).dump();
}

} // namespace

TEST_CASE("tpath witness construction") {
    WitnessInstance w4 = tpath_witness(4, WitnessVariant::base);
    CHECK(format_config(w4.graph, w4.config) == "x4:7,y23:1");
    CHECK(w4.config.total() == 8);
    CHECK(w4.target == w4.graph.require_vertex("x1"));

    WitnessInstance w3 = tpath_witness(3, WitnessVariant::base);
    CHECK(format_config(w3.graph, w3.config) == "x3:3");
    CHECK(w3.config.total() == 3);

    WitnessInstance w5 = tpath_witness(5, WitnessVariant::with_y12);
    CHECK(format_config(w5.graph, w5.config) == "x5:15,y12:1,y23:1,y34:1");
    CHECK(w5.config.total() == 18);

    CHECK_THROWS_AS(tpath_witness(2, WitnessVariant::base), InvalidParameter);
}

TEST_CASE("witness solvability ground truth") {
    // n = 3, 4: unsolvable, agreed by solver and oracle
    for (int n : {3, 4}) {
        WitnessInstance w = tpath_witness(n, WitnessVariant::base);
        CHECK_FALSE(is_solvable(w.graph, w.config, w.target, 1).solvable);
        CHECK_FALSE(naive_is_solvable(w.graph, w.config, w.target, 1));
    }

    // n = 5: the construction stops working; a legal certificate exists.
    // Banking one pebble on x2 and then pairing down the y-chain beats it.
    WitnessInstance w5 = tpath_witness(5, WitnessVariant::base);
    SolveResult r = is_solvable(w5.graph, w5.config, w5.target, 1, true);
    CHECK(r.solvable);
    REQUIRE(r.certificate.has_value());
    CHECK(verify_certificate(w5.graph, w5.config, *r.certificate, w5.target, 1));

    // n = 4 with_y12 is also solvable, hence pi(T(P_4)) = 9, not 10
    WitnessInstance w4p = tpath_witness(4, WitnessVariant::with_y12);
    SolveResult r4 = is_solvable(w4p.graph, w4p.config, w4p.target, 1, true);
    CHECK(r4.solvable);
    CHECK(verify_certificate(w4p.graph, w4p.config, *r4.certificate, w4p.target, 1));
}

TEST_CASE("2t property holds exhaustively on T(P_3)") {
    Graph t3 = total_graph(build_path(3));
    CheckMode mode;
    PropertyReport report = check_2t_property(t3, 1, mode);
    CHECK(report.verdict == "holds");
    CHECK(report.coverage == "exhaustive");
    CHECK(report.params["pi_t"] == 5);
    CHECK_FALSE(report.counterexample.has_value());
    CHECK(report.exit_code() == 0);
}

TEST_CASE("2t property on the single-vertex graph is degenerate but holds") {
    Graph k1 = build_complete(1);
    PropertyReport report = check_2t_property(k1, 1, CheckMode{});
    CHECK(report.verdict == "holds");
}

TEST_CASE("sampled 2t reports are deterministic given (N, seed)") {
    Graph t3 = total_graph(build_path(3));
    CheckMode mode;
    mode.kind = CheckKind::sampled;
    mode.samples = 300;
    mode.seed = 1;

    SearchOptions one;
    one.threads = 1;
    SearchOptions four;
    four.threads = 4;

    PropertyReport a = check_2t_property(t3, 1, mode, one);
    PropertyReport b = check_2t_property(t3, 1, mode, one);
    PropertyReport c = check_2t_property(t3, 1, mode, four);
    CHECK(a.verdict == "holds (sampled)");
    CHECK(stable_dump(a) == stable_dump(b));
    CHECK(stable_dump(a) == stable_dump(c));
}

TEST_CASE("formula check: equal at n=3, off by one at n=4") {
    PropertyReport eq = check_formula_tpn(3, 3, 1, 2);
    CHECK(eq.verdict == "holds");
    for (const auto& row : eq.details["results"]) CHECK(row["delta"] == 0);

    PropertyReport diff = check_formula_tpn(3, 4, 1, 1);
    CHECK(diff.verdict == "computed-differs");
    CHECK(diff.exit_code() == 1);
    bool saw_n4 = false;
    for (const auto& row : diff.details["results"])
        if (row["n"] == 4) {
            saw_n4 = true;
            CHECK(row["formula"] == 10);
            CHECK(row["computed"] == 9);
            CHECK(row["delta"] == -1);
        }
    CHECK(saw_n4);

    CHECK_THROWS_AS(check_formula_tpn(2, 3, 1, 1), InvalidParameter);
}

TEST_CASE("product bound: exhaustive on K_2 x K_2") {
    Graph k2 = build_complete(2);
    PropertyReport report = check_product_bound(k2, k2, 1, 1, CheckMode{});
    CHECK(report.verdict == "holds");
    CHECK(report.params["bound"] == 4);   // pi(K_2) = 2
    CHECK(report.coverage == "exhaustive");
}

TEST_CASE("product bound: sampled on K_3 x K_3") {
    Graph k3 = build_complete(3);
    CheckMode mode;
    mode.kind = CheckKind::sampled;
    mode.samples = 500;
    mode.seed = 7;
    PropertyReport report = check_product_bound(k3, k3, 1, 1, mode);
    CHECK(report.verdict == "holds (sampled)");
    CHECK(report.params["bound"] == 9);
    CHECK(report.stats.configs_tested == 500);

    PropertyReport again = check_product_bound(k3, k3, 1, 1, mode);
    CHECK(stable_dump(report) == stable_dump(again));
}

TEST_CASE("product bound: adversarial family on T(P_3) squared") {
    Graph t3 = total_graph(build_path(3));
    CheckMode mode;
    mode.kind = CheckKind::adversarial;
    PropertyReport report = check_product_bound(t3, t3, 1, 1, mode);
    CHECK(report.verdict == "holds (adversarial)");
    CHECK(report.coverage == "adversarial-only");
    CHECK(report.params["bound"] == 25);
    CHECK(report.params["family"] == "adv-1");
    CHECK(report.params["family_size"].get<int>() >= 40);
}

TEST_CASE("exhaustive product refusal above the ceiling") {
    Graph t3 = total_graph(build_path(3));
    SearchOptions opts;
    opts.exhaustive_ceiling = 1000;
    CHECK_THROWS_AS(check_product_bound(t3, t3, 1, 1, CheckMode{}, opts), InvalidParameter);
}

TEST_CASE("budget exhaustion surfaces as a verdict") {
    Graph t3 = total_graph(build_path(3));
    SearchOptions opts;
    opts.node_budget = 10;
    PropertyReport report = check_2t_property(t3, 1, CheckMode{}, opts);
    CHECK(report.verdict == "exhausted-budget");
    CHECK(report.exit_code() == 2);
    CHECK(report.details.contains("budget_error"));
}
