#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/search.hpp"

namespace pebbling {

enum class CheckKind { exhaustive, sampled, adversarial };

struct CheckMode {
    CheckKind kind = CheckKind::exhaustive;
    long long samples = 0;       // sampled mode
    std::uint64_t seed = 0;      // sampled mode
};

const char* check_kind_name(CheckKind kind);

struct Counterexample {
    Configuration config;
    int target = 0;
    long long demand = 0;
    std::string config_text;     // formatted against the checked graph
    std::string target_label;
    std::string graph_name;
};

/// Outcome of one property check. Verdicts: "holds" (exhaustive coverage),
/// "holds (sampled)" / "holds (adversarial)" (partial coverage, never merged
/// with exhaustive), "refuted", "computed-differs" (formula checks),
/// "exhausted-budget". A refuted report always carries a counterexample that
/// has been re-verified with a fresh solver.
struct PropertyReport {
    std::string property;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::string verdict;
    std::string coverage;
    std::optional<Counterexample> counterexample;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    ScanStats stats;
    double wall_ms = 0;

    int exit_code() const;   // 0 holds*, 1 refuted/differs, 2 budget
};

/// From every configuration of 2*pi_t(G) - q + 1 pebbles on exactly q
/// occupied vertices, 2t pebbles can be moved to every target. The threshold
/// uses the computed pi_t, never a closed form.
PropertyReport check_2t_property(const Graph& g, long long t, const CheckMode& mode,
                                 const SearchOptions& options = {});

/// Compares exhaustively computed pi_t(T(P_n)) against t*2^(n-1) + (n-2)
/// for every (n, t) in the given ranges; n >= 3.
PropertyReport check_formula_tpn(int n_lo, int n_hi, long long t_lo, long long t_hi,
                                 const SearchOptions& options = {});

/// The adversarial lower-bound construction on T(P_n) against target x1:
/// one pebble on each y_{i,i+1} for 2 <= i <= n-2 and 2^(n-1) - 1 pebbles on
/// x_n; `with_y12` additionally places one pebble on y12.
enum class WitnessVariant { base, with_y12 };

const char* witness_variant_name(WitnessVariant variant);

struct WitnessInstance {
    Graph graph;        // T(P_n)
    Configuration config;
    int target = 0;     // x1
};

WitnessInstance tpath_witness(int n, WitnessVariant variant);

/// Product bound check: with B = pi_s(g) * pi_t(h), configurations of B
/// pebbles on g x h must deliver s*t pebbles to every target. Exhaustive mode
/// is refused when the configuration space exceeds options.exhaustive_ceiling;
/// sampled mode draws targets and cut-point compositions from the seed;
/// adversarial mode runs the fixed family "adv-1".
PropertyReport check_product_bound(const Graph& g, const Graph& h, long long s, long long t,
                                   const CheckMode& mode, const SearchOptions& options = {});

} // namespace pebbling
