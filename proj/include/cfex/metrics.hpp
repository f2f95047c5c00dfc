#pragma once

#include <cstdint>
#include <optional>

#include "cfex/dataset.hpp"
#include "cfex/ratio.hpp"

namespace cfex {

/// Quality metrics of a counterfactual witness b for a query a, all computed
/// over the hyperball B(a, b). With exactly two classes, capacity equals
/// universality.
struct MetricsReport {
    Ratio typicality;    // fraction of b's whole class inside the ball
    Ratio capacity;      // fraction of the ball b can counter-explain (= power / ball size)
    Ratio universality;  // fraction of the ball sharing the query's label
    int ball_size = 0;
};

Ratio typicality(const LabeledSample& s, RowIndex a, RowIndex b);
Ratio capacity(const LabeledSample& s, RowIndex a, RowIndex b);
Ratio universality(const LabeledSample& s, RowIndex a, RowIndex b);

MetricsReport metrics_report(const LabeledSample& s, RowIndex a, RowIndex b);

struct OptimalVsRandom {
    RowIndex optimal_witness = 0;
    RowIndex random_witness = 0;
    MetricsReport optimal;
    MetricsReport random;
};

/// Metrics for the optimal counterfactual against one uniformly drawn
/// non-optimal minimal counterfactual. Nullopt (skipped) when fewer than two
/// minimal counterfactuals exist or when all of them tie at the top power,
/// leaving no non-optimal candidate to draw from. Deterministic per seed.
std::optional<OptimalVsRandom> compare_optimal_vs_random(const LabeledSample& s, RowIndex query,
                                                         std::uint64_t seed);

}  // namespace cfex
