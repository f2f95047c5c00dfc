#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cfex/explain.hpp"
#include "cfex/ratio.hpp"

namespace cfex {

struct RankedCounterfactual {
    CounterfactualExplanation explanation;
    int power = 0;  // cf power: hyperball members the witness can counter-explain
    int rank = 0;   // 1-based position, non-increasing in power
};

struct RankingResult {
    std::vector<RankedCounterfactual> ranked;  // power desc, then row index asc
    bool unique_optimal = false;               // head strictly beats the runner-up (or is alone)
    std::optional<Ratio> gap;                  // (p1 - p2) / p1; absent for < 2 entries
};

/// Sample rows within Hamming radius H(a, b) of center b; always contains
/// both a and b. Ascending row order.
std::vector<RowIndex> hyperball(const LabeledSample& s, RowIndex a, RowIndex b);

/// Counterfactual power of b w.r.t. a: hyperball members whose label differs
/// from b's. At least 1, since a itself qualifies.
int cf_power(const LabeledSample& s, RowIndex b, RowIndex a);

/// Minimal counterfactuals ranked by power; the head is the optimal
/// counterfactual. Ties on power are ordered by row index for presentation
/// but uniqueness is decided on power values alone.
RankingResult rank_minimal(const LabeledSample& s, RowIndex query);

/// Relative power gap between the two top-ranked entries.
std::optional<Ratio> power_gap(std::span<const RankedCounterfactual> ranked);

/// Minimal counterfactuals annotated with how many of them share the same
/// disagreement set, sorted by that frequency (desc, then row index).
std::vector<std::pair<CounterfactualExplanation, int>> dag_frequency_rank(const LabeledSample& s,
                                                                          RowIndex query);

}  // namespace cfex
