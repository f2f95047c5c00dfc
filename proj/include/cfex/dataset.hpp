#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfex/feature_set.hpp"
#include "cfex/literal.hpp"
#include "cfex/schema.hpp"

namespace cfex {

using Instance = std::vector<ValueId>;

/// What to do when two rows carry identical feature values but different
/// labels. Each instance must have a unique label, so such input is rejected
/// unless the caller opts into keep-first dedup.
enum class ConflictPolicy {
    Reject,     // throw on the first conflicting duplicate
    KeepFirst,  // drop later rows that conflict with an earlier one
    Allow,      // skip the check (rows known conflict-free, e.g. functional labels)
};

/// The labeled sample S: immutable rows of interned value ids with one label
/// each. Rows are stored as a flat row-major matrix.
class LabeledSample {
public:
    LabeledSample(std::shared_ptr<const Schema> schema,
                  std::vector<ValueId> flat_values,
                  std::vector<ClassId> labels,
                  std::string provenance,
                  ConflictPolicy policy = ConflictPolicy::Reject);

    [[nodiscard]] const Schema& schema() const { return *schema_; }
    [[nodiscard]] const std::shared_ptr<const Schema>& schema_ptr() const { return schema_; }
    [[nodiscard]] const std::string& provenance() const { return provenance_; }

    [[nodiscard]] RowIndex row_count() const { return static_cast<RowIndex>(labels_.size()); }
    [[nodiscard]] int feature_count() const { return schema_->feature_count(); }

    [[nodiscard]] std::span<const ValueId> row(RowIndex i) const {
        check_row(i);
        const std::size_t n = static_cast<std::size_t>(feature_count());
        return {values_.data() + static_cast<std::size_t>(i) * n, n};
    }

    [[nodiscard]] ClassId label(RowIndex i) const {
        check_row(i);
        return labels_[i];
    }

    /// Number of rows labeled c.
    [[nodiscard]] RowIndex class_size(ClassId c) const;

    /// Copy of this sample with one extra labeled row appended; the virtual
    /// row lets out-of-sample instances be explained through the same
    /// row-index API.
    [[nodiscard]] LabeledSample with_row(const Instance& values, ClassId label) const;

private:
    void check_row(RowIndex i) const;

    std::shared_ptr<const Schema> schema_;
    std::vector<ValueId> values_;  // row-major, row_count x feature_count
    std::vector<ClassId> labels_;
    std::string provenance_;
};

struct CsvOptions {
    std::string label_column;  // empty: last column
    ConflictPolicy policy = ConflictPolicy::Reject;
};

/// Loads a header-ed CSV where every non-label column is an opaque
/// categorical feature. Vocabularies are built from observed values in
/// first-occurrence order. Empty cells and conflicting duplicate rows are
/// errors (see CsvOptions).
LabeledSample load_csv(const std::string& path, const CsvOptions& options = {});

/// Inverse of load_csv for the same dialect; reloading the written file
/// yields an identical sample.
void export_csv(const LabeledSample& sample, const std::string& path);

/// size rows drawn uniformly without replacement, deterministic per seed;
/// all rows when size >= |S|. Schema is shared, row order is ascending by
/// original index.
LabeledSample sample(const LabeledSample& s, std::size_t size, std::uint64_t seed);

/// Synthetic dataset with a known relevant-feature set R: rows drawn
/// uniformly over the value grid (or the whole grid when full_grid is set)
/// and labeled (sum of value ids over R) mod 3, making every feature outside
/// R irrelevant by construction.
struct SyntheticSpec {
    int dim = 20;
    int values_per_feature = 3;
    FeatureSet relevant;
    std::size_t rows = 1000;
    std::uint64_t seed = 0;
    bool full_grid = false;  // enumerate the entire grid; rows/seed ignored
};

std::pair<LabeledSample, FeatureSet> generate_synthetic(const SyntheticSpec& spec);

/// Writes the sample as CSV plus a sidecar "<path>.relevant.txt" listing the
/// relevant feature names, one per line.
void export_synthetic(const LabeledSample& sample, FeatureSet relevant, const std::string& path);

}  // namespace cfex
