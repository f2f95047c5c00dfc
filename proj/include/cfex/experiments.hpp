#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cfex/dataset.hpp"

namespace cfex {

struct ExperimentConfig {
    std::size_t sample_size = 1000;
    int repeats = 10;
    std::uint64_t seed = 0;
    // relevant-ratio experiment only: sample sizes to sweep
    std::vector<std::size_t> sizes = {500, 1000, 2000, 5000, 10000, 20000};
};

/// Per-repeat records plus their arithmetic-mean aggregates. Serialized as
/// one CSV (the per-repeat records) and one JSON summary; replaying the same
/// dataset, config and seed reproduces both byte for byte.
struct ExperimentReport {
    std::string experiment;
    std::string dataset;
    nlohmann::ordered_json config;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::ordered_json>> per_repeat;
    nlohmann::ordered_json aggregates;

    [[nodiscard]] nlohmann::ordered_json to_json() const;
    [[nodiscard]] std::string csv() const;
    /// Writes "<stem>.csv" and "<stem>.json".
    void write(const std::string& stem) const;
};

/// |{b in S_a : H(a,b) = d}| for d in [1, n]; index d-1.
std::vector<int> distance_histogram(const LabeledSample& s, RowIndex query);

/// Counterfactual counts per Hamming distance, averaged over the sampled
/// instances of each repeat.
ExperimentReport run_distribution(const LabeledSample& s, const ExperimentConfig& cfg);

/// Proportion of sampled instances with a unique optimal counterfactual.
/// Instances with an empty counter-set are excluded and counted separately.
ExperimentReport run_uniqueness(const LabeledSample& s, const ExperimentConfig& cfg);

/// Mean relative power gap over instances with at least two minimal
/// counterfactuals; singletons are counted separately.
ExperimentReport run_gap(const LabeledSample& s, const ExperimentConfig& cfg);

/// Mean typicality/capacity/universality of the optimal counterfactual
/// versus a randomly drawn non-optimal minimal one. Capacity is reported
/// only for datasets with at least three classes.
ExperimentReport run_metric_comparison(const LabeledSample& s, const ExperimentConfig& cfg);

/// For each sample size in cfg.sizes, generates a synthetic dataset from the
/// spec and reports the mean |Dag(a, b*) cap R| / |R| over the optimal
/// counterfactuals b* of sampled query instances.
ExperimentReport run_relevant_ratio(const SyntheticSpec& spec, const ExperimentConfig& cfg);

enum class ExplainMode { All, Minimal, Optimal, Factual };

/// Parses "all" | "minimal" | "optimal" | "factual"; throws on anything else.
ExplainMode parse_explain_mode(std::string_view text);

/// Machine-readable rendering of the explanations of one sample row:
/// literals as (feature-name, value) pairs with witness row, distance,
/// power and metrics, depending on mode.
nlohmann::ordered_json explain_instance(const LabeledSample& s, RowIndex row, ExplainMode mode,
                                        int factual_max_size = 3);

/// Human-readable rendering of an explain_instance result.
std::string render_text(const nlohmann::ordered_json& result);

}  // namespace cfex
