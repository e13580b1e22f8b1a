#include "pebbling/properties.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <set>

#include "pebbling/compositions.hpp"
#include "pebbling/errors.hpp"
#include "pebbling/rng.hpp"
#include "parallel_scan.hpp"

namespace pebbling {

namespace {

using nlohmann::ordered_json;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

Counterexample make_counterexample(const Graph& g, Configuration config, int target,
                                   long long demand) {
    // a refuted verdict must re-verify with a fresh solver
    SolveResult check = is_solvable(g, config, target, demand);
    if (check.solvable)
        throw Error("internal: counterexample failed re-verification");
    Counterexample ce;
    ce.config_text = format_config(g, config);
    ce.target_label = g.label(target);
    ce.graph_name = g.name();
    ce.config = std::move(config);
    ce.target = target;
    ce.demand = demand;
    return ce;
}

ordered_json counterexample_json(const Counterexample& ce) {
    return ordered_json{{"graph", ce.graph_name},
                        {"config", ce.config_text},
                        {"target", ce.target_label},
                        {"demand", ce.demand}};
}

void finish_budget(PropertyReport& report, const BudgetExceeded& e) {
    report.verdict = "exhausted-budget";
    report.details["budget_error"] = e.what();
    report.details["nodes_explored"] = e.nodes_explored();
    if (e.bracket()) {
        report.details["bracket_lower"] = e.bracket()->lower;
        if (e.bracket()->upper) report.details["bracket_upper"] = *e.bracket()->upper;
    }
}

// Deterministic per-sample stream tag for the (target, q) pair loops.
std::uint64_t pair_stream_index(int target, int q, long long sample) {
    return (static_cast<std::uint64_t>(target) << 48) |
           (static_cast<std::uint64_t>(q) << 32) | static_cast<std::uint64_t>(sample);
}

} // namespace

const char* check_kind_name(CheckKind kind) {
    switch (kind) {
        case CheckKind::exhaustive:  return "exhaustive";
        case CheckKind::sampled:     return "sampled";
        case CheckKind::adversarial: return "adversarial";
    }
    return "?";
}

const char* witness_variant_name(WitnessVariant variant) {
    return variant == WitnessVariant::base ? "base" : "with_y12";
}

int PropertyReport::exit_code() const {
    if (verdict == "holds" || verdict == "holds (sampled)" || verdict == "holds (adversarial)")
        return 0;
    if (verdict == "exhausted-budget") return 2;
    return 1;
}

namespace {

std::vector<int> tpath_witness_counts(int n, WitnessVariant variant) {
    // layout of total_graph(build_path(n)): x_i at i-1, y_{i,i+1} at n+i-1
    if (n < 3) throw InvalidParameter("tpath witness: n must be >= 3");
    if (n > 31) throw InvalidParameter("tpath witness: n too large");
    std::vector<int> counts(static_cast<std::size_t>(2 * n - 1), 0);
    for (int i = 2; i <= n - 2; ++i) counts[static_cast<std::size_t>(n + i - 1)] = 1;
    counts[static_cast<std::size_t>(n - 1)] = (1 << (n - 1)) - 1;
    if (variant == WitnessVariant::with_y12) counts[static_cast<std::size_t>(n)] += 1;
    return counts;
}

} // namespace

WitnessInstance tpath_witness(int n, WitnessVariant variant) {
    std::vector<int> counts = tpath_witness_counts(n, variant);
    WitnessInstance instance{total_graph(build_path(n)), Configuration{std::move(counts)}, 0};
    return instance;
}

PropertyReport check_2t_property(const Graph& g, long long t, const CheckMode& mode,
                                 const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (t < 1) throw InvalidParameter("check_2t_property: t must be >= 1");
    if (mode.kind == CheckKind::adversarial)
        throw InvalidParameter("check_2t_property: mode must be exhaustive or sampled");
    const bool sampled = mode.kind == CheckKind::sampled;
    if (sampled && mode.samples < 1)
        throw InvalidParameter("check_2t_property: sampled mode needs samples >= 1");

    const int nv = g.vertex_count();
    PropertyReport report;
    report.property = "2t-property";
    report.params = ordered_json{{"graph", g.name()},
                                 {"t", t},
                                 {"mode", check_kind_name(mode.kind)},
                                 {"threshold", "2*pi_t-q+1"},
                                 {"search_mode", search_mode_name(options.mode)}};
    if (sampled) {
        report.params["samples"] = mode.samples;
        report.params["seed"] = mode.seed;
        report.params["rng"] = kRngAlgorithm;
        report.params["sampler"] = "rank-unrank/v1";
    }
    report.coverage = sampled ? "sampled(" + std::to_string(mode.samples) + ")" : "exhaustive";

    std::optional<NodeBudget> budget;
    if (options.node_budget) budget.emplace(*options.node_budget);
    NodeBudget* budget_ptr = budget ? &*budget : nullptr;

    try {
        PebblingNumberReport pi = detail::pebbling_number(g, t, options, budget_ptr);
        report.params["pi_t"] = pi.value;
        report.stats.add(pi.stats);
        const long long demand = 2 * t;

        for (int target = 0; target < nv && !report.counterexample; ++target) {
            for (int q = 1; q <= nv && !report.counterexample; ++q) {
                const long long k = 2 * pi.value - q + 1;
                if (k < q) continue;   // no configuration has that support
                const unsigned long long space =
                    count_compositions(nv, k, q);
                if (space == 0) continue;

                if (!sampled) {
                    if (space > options.exhaustive_ceiling)
                        throw BudgetExceeded(
                            "check_2t_property: exhaustive space for q=" + std::to_string(q) +
                                " exceeds the ceiling",
                            report.stats.solver_nodes);
                    ScanResult r = detail::scan_counterexamples(g, k, q, target, demand,
                                                                options, budget_ptr);
                    report.stats.add(r.stats);
                    if (r.witness)
                        report.counterexample =
                            make_counterexample(g, std::move(*r.witness), target, demand);
                    continue;
                }

                // sampled: uniform lexicographic rank per (target, q) pair
                if (space == UINT64_MAX)
                    throw InvalidParameter("check_2t_property: space too large to sample");
                const int workers =
                    detail::plan_workers(static_cast<unsigned long long>(mode.samples),
                                         resolve_threads(options.threads), 256);
                struct Ctx {
                    std::unique_ptr<Solver> solver;
                    Configuration buf;
                    long long nodes = 0;
                };
                std::vector<Ctx> ctxs(static_cast<std::size_t>(workers));
                for (auto& c : ctxs)
                    c.solver = std::make_unique<Solver>(g, target, demand, false, budget_ptr);

                auto outcome = detail::run_sharded_scan(
                    static_cast<unsigned long long>(mode.samples), workers,
                    options.mode == SearchMode::deterministic, 256,
                    [&](int w, unsigned long long lo, unsigned long long hi,
                        const std::atomic<bool>& stop) {
                        detail::ShardOutcome out;
                        Ctx& ctx = ctxs[static_cast<std::size_t>(w)];
                        for (unsigned long long i = lo; i < hi; ++i) {
                            if (options.mode == SearchMode::fast &&
                                stop.load(std::memory_order_relaxed))
                                break;
                            Rng rng(stream_seed(mode.seed, pair_stream_index(
                                                               target, q,
                                                               static_cast<long long>(i))));
                            unrank_composition(nv, k, q, rng.next_below(space),
                                               ctx.buf.counts);
                            SolveResult r = ctx.solver->solve(ctx.buf);
                            ctx.nodes += r.stats.nodes_explored;
                            ++out.processed;
                            if (!r.solvable) {
                                out.hit = i;
                                break;
                            }
                        }
                        return out;
                    });
                report.stats.configs_tested += outcome.processed;
                for (auto& c : ctxs) report.stats.solver_nodes += c.nodes;
                if (outcome.first_hit) {
                    Rng rng(stream_seed(mode.seed,
                                        pair_stream_index(target, q,
                                                          static_cast<long long>(
                                                              *outcome.first_hit))));
                    Configuration config;
                    unrank_composition(nv, k, q, rng.next_below(space), config.counts);
                    report.counterexample =
                        make_counterexample(g, std::move(config), target, demand);
                }
            }
        }

        if (report.counterexample) {
            report.verdict = "refuted";
            report.details["counterexample"] = counterexample_json(*report.counterexample);
        } else {
            report.verdict = sampled ? "holds (sampled)" : "holds";
        }
    } catch (const BudgetExceeded& e) {
        finish_budget(report, e);
    }
    report.wall_ms = elapsed_ms(start);
    return report;
}

PropertyReport check_formula_tpn(int n_lo, int n_hi, long long t_lo, long long t_hi,
                                 const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (n_lo < 3) throw InvalidParameter("check_formula_tpn: n must be >= 3");
    if (n_hi < n_lo || n_hi > 20) throw InvalidParameter("check_formula_tpn: bad n range");
    if (t_lo < 1 || t_hi < t_lo) throw InvalidParameter("check_formula_tpn: bad t range");

    PropertyReport report;
    report.property = "formula-tpn";
    report.params = ordered_json{{"n", std::to_string(n_lo) + ".." + std::to_string(n_hi)},
                                 {"t", std::to_string(t_lo) + ".." + std::to_string(t_hi)},
                                 {"formula", "t*2^(n-1)+(n-2)"},
                                 {"search_mode", search_mode_name(options.mode)}};
    report.coverage = "exhaustive";
    report.details["results"] = ordered_json::array();

    std::optional<NodeBudget> budget;
    if (options.node_budget) budget.emplace(*options.node_budget);

    bool all_equal = true;
    try {
        for (int n = n_lo; n <= n_hi; ++n) {
            Graph g = total_graph(build_path(n));
            for (long long t = t_lo; t <= t_hi; ++t) {
                PebblingNumberReport pi =
                    detail::pebbling_number(g, t, options, budget ? &*budget : nullptr);
                report.stats.add(pi.stats);
                const long long formula = tpath_formula(n, t);
                const long long delta = pi.value - formula;
                ordered_json entry{{"n", n},
                                   {"t", t},
                                   {"formula", formula},
                                   {"computed", pi.value},
                                   {"delta", delta},
                                   {"verdict", delta == 0 ? "equal" : "computed-differs"},
                                   {"witness_target", g.label(pi.witness_target)},
                                   {"witness", format_config(g, pi.witness)}};
                report.details["results"].push_back(std::move(entry));
                if (delta != 0) {
                    all_equal = false;
                    // when the computed value exceeds the formula, the witness is a
                    // formula-sized configuration that re-verifies as unsolvable
                    if (delta > 0 && !report.counterexample)
                        report.counterexample = make_counterexample(
                            g, pi.witness, pi.witness_target, t);
                }
            }
        }
        report.verdict = all_equal ? "holds" : "computed-differs";
        if (report.counterexample)
            report.details["counterexample"] = counterexample_json(*report.counterexample);
    } catch (const BudgetExceeded& e) {
        finish_budget(report, e);
    }
    report.wall_ms = elapsed_ms(start);
    return report;
}

namespace {

std::vector<std::pair<int, Configuration>> adversarial_family(const Graph& g, const Graph& h,
                                                              const Graph& prod,
                                                              long long bound) {
    const int nv = prod.vertex_count();
    const int nh = h.vertex_count();
    std::set<std::pair<int, std::vector<int>>> seen;
    std::vector<std::pair<int, Configuration>> family;
    auto add = [&](int target, std::vector<int> counts) {
        if (seen.insert({target, counts}).second)
            family.emplace_back(target, Configuration{std::move(counts)});
    };
    auto farthest = [](const Graph& graph, int from) {
        int far = 0;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (graph.distance(v, from) > graph.distance(far, from)) far = v;
        return far;
    };

    for (int beta = 0; beta < nv; ++beta) {
        const int far = farthest(prod, beta);

        // (A) the whole bound stacked as far away as possible
        {
            std::vector<int> c(static_cast<std::size_t>(nv), 0);
            c[static_cast<std::size_t>(far)] = static_cast<int>(bound);
            add(beta, std::move(c));
        }

        // (B) the T(P_n) witness pattern on the g-coordinate, lifted to the
        // farthest h-layer, remainder stacked on the x_n image
        if (auto n = g.total_path_order(); n && *n >= 3) {
            const int b_h = beta % nh;
            const int hfar = farthest(h, b_h);
            for (WitnessVariant variant : {WitnessVariant::base, WitnessVariant::with_y12}) {
                std::vector<int> wg = tpath_witness_counts(*n, variant);
                long long total_w = 0;
                for (int c : wg) total_w += c;
                if (total_w > bound) continue;
                std::vector<int> c(static_cast<std::size_t>(nv), 0);
                for (int gu = 0; gu < g.vertex_count(); ++gu)
                    c[static_cast<std::size_t>(gu * nh + hfar)] = wg[static_cast<std::size_t>(gu)];
                c[static_cast<std::size_t>((*n - 1) * nh + hfar)] +=
                    static_cast<int>(bound - total_w);
                add(beta, std::move(c));
            }
        }

        // (C) bound-1 singles over non-targets, remainder on the far vertex
        {
            std::vector<int> c(static_cast<std::size_t>(nv), 0);
            long long used = 0;
            for (int v = 0; v < nv && used < bound - 1; ++v) {
                if (v == beta) continue;
                c[static_cast<std::size_t>(v)] = 1;
                ++used;
            }
            c[static_cast<std::size_t>(far)] += static_cast<int>(bound - used);
            add(beta, std::move(c));
        }
    }
    return family;
}

} // namespace

PropertyReport check_product_bound(const Graph& g, const Graph& h, long long s, long long t,
                                   const CheckMode& mode, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (s < 1 || t < 1) throw InvalidParameter("check_product_bound: s, t must be >= 1");
    if (mode.kind == CheckKind::sampled && mode.samples < 1)
        throw InvalidParameter("check_product_bound: sampled mode needs samples >= 1");

    PropertyReport report;
    report.property = "product-bound";
    report.params = ordered_json{{"g", g.name()},
                                 {"h", h.name()},
                                 {"s", s},
                                 {"t", t},
                                 {"mode", check_kind_name(mode.kind)},
                                 {"search_mode", search_mode_name(options.mode)}};
    if (mode.kind == CheckKind::sampled) {
        report.params["samples"] = mode.samples;
        report.params["seed"] = mode.seed;
        report.params["rng"] = kRngAlgorithm;
        report.params["sampler"] = "cut-points/v1";
        report.coverage = "sampled(" + std::to_string(mode.samples) + ")";
    } else if (mode.kind == CheckKind::adversarial) {
        report.params["family"] = "adv-1";
        report.coverage = "adversarial-only";
    } else {
        report.coverage = "exhaustive";
    }

    std::optional<NodeBudget> budget;
    if (options.node_budget) budget.emplace(*options.node_budget);
    NodeBudget* budget_ptr = budget ? &*budget : nullptr;

    try {
        PebblingNumberReport pi_g = detail::pebbling_number(g, s, options, budget_ptr);
        PebblingNumberReport pi_h = detail::pebbling_number(h, t, options, budget_ptr);
        report.stats.add(pi_g.stats);
        report.stats.add(pi_h.stats);
        const long long bound = pi_g.value * pi_h.value;
        const long long demand = s * t;
        report.params["pi_s_g"] = pi_g.value;
        report.params["pi_t_h"] = pi_h.value;
        report.params["bound"] = bound;
        report.params["demand"] = demand;
        if (bound > 255)
            throw InvalidParameter("check_product_bound: bound exceeds solver capacity");

        const Graph prod = cartesian_product(g, h);
        const int nv = prod.vertex_count();
        report.params["product"] = prod.name();

        if (mode.kind == CheckKind::exhaustive) {
            const unsigned long long space = count_compositions(nv, bound);
            if (space > options.exhaustive_ceiling)
                throw InvalidParameter(
                    "check_product_bound: exhaustive mode refused, configuration space " +
                    (space == UINT64_MAX ? std::string("overflows")
                                         : std::to_string(space)) +
                    " exceeds ceiling " + std::to_string(options.exhaustive_ceiling));
            for (int target = 0; target < nv && !report.counterexample; ++target) {
                ScanResult r = detail::scan_counterexamples(prod, bound, std::nullopt, target,
                                                            demand, options, budget_ptr);
                report.stats.add(r.stats);
                if (r.witness)
                    report.counterexample =
                        make_counterexample(prod, std::move(*r.witness), target, demand);
            }
        } else if (mode.kind == CheckKind::adversarial) {
            auto family = adversarial_family(g, h, prod, bound);
            report.params["family_size"] = family.size();
            for (auto& [target, config] : family) {
                SolveResult r = is_solvable(prod, config, target, demand);
                report.stats.configs_tested += 1;
                report.stats.solver_nodes += r.stats.nodes_explored;
                if (!r.solvable) {
                    report.counterexample =
                        make_counterexample(prod, std::move(config), target, demand);
                    break;
                }
            }
        } else {
            // sampled: target first, then a cut-point composition, per stream i
            const int workers =
                detail::plan_workers(static_cast<unsigned long long>(mode.samples),
                                     resolve_threads(options.threads), 256);
            struct Ctx {
                long long nodes = 0;
            };
            std::vector<Ctx> ctxs(static_cast<std::size_t>(workers));
            auto draw = [&](unsigned long long i, Configuration& config) {
                Rng rng(stream_seed(mode.seed, i));
                int target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(nv)));
                config.counts = sample_composition_cutpoints(rng, bound, nv);
                return target;
            };
            auto outcome = detail::run_sharded_scan(
                static_cast<unsigned long long>(mode.samples), workers,
                options.mode == SearchMode::deterministic, 256,
                [&](int w, unsigned long long lo, unsigned long long hi,
                    const std::atomic<bool>& stop) {
                    detail::ShardOutcome out;
                    Ctx& ctx = ctxs[static_cast<std::size_t>(w)];
                    Configuration buf;
                    for (unsigned long long i = lo; i < hi; ++i) {
                        if (options.mode == SearchMode::fast &&
                            stop.load(std::memory_order_relaxed))
                            break;
                        int target = draw(i, buf);
                        Solver solver(prod, target, demand, false, budget_ptr);
                        SolveResult r = solver.solve(buf);
                        ctx.nodes += r.stats.nodes_explored;
                        ++out.processed;
                        if (!r.solvable) {
                            out.hit = i;
                            break;
                        }
                    }
                    return out;
                });
            report.stats.configs_tested += outcome.processed;
            for (auto& c : ctxs) report.stats.solver_nodes += c.nodes;
            if (outcome.first_hit) {
                Configuration config;
                int target = draw(*outcome.first_hit, config);
                report.details["sample_index"] = *outcome.first_hit;
                report.counterexample =
                    make_counterexample(prod, std::move(config), target, demand);
            }
        }

        if (report.counterexample) {
            report.verdict = "refuted";
            report.details["counterexample"] = counterexample_json(*report.counterexample);
        } else {
            report.verdict = mode.kind == CheckKind::exhaustive    ? "holds"
                             : mode.kind == CheckKind::adversarial ? "holds (adversarial)"
                                                                   : "holds (sampled)";
        }
    } catch (const BudgetExceeded& e) {
        finish_budget(report, e);
    }
    report.wall_ms = elapsed_ms(start);
    return report;
}

} // namespace pebbling
