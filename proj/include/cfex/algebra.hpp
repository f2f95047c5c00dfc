#pragma once

#include <span>
#include <vector>

#include "cfex/dataset.hpp"
#include "cfex/feature_set.hpp"
#include "cfex/literal.hpp"

namespace cfex {

/// Features mentioned by a consistent literal set (values discarded).
inline FeatureSet project(const LiteralSet& s) { return s.features(); }

/// Features where a and b carry equal values.
FeatureSet agreement(std::span<const ValueId> a, std::span<const ValueId> b);

/// Features where a and b differ; complement of agreement in [0, n).
FeatureSet disagreement(std::span<const ValueId> a, std::span<const ValueId> b);

/// Hamming distance: the number of disagreeing features.
int hamming(std::span<const ValueId> a, std::span<const ValueId> b);

/// The counter-set S_a: rows whose label differs from the query's. Never
/// contains the query row itself. Ascending row order.
std::vector<RowIndex> counter_set(const LabeledSample& s, RowIndex query);

/// Counter-set for an explicitly labeled (possibly out-of-sample) instance.
std::vector<RowIndex> counter_set(const LabeledSample& s, ClassId query_label);

}  // namespace cfex
