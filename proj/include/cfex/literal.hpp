#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfex/feature_set.hpp"

namespace cfex {

using ValueId = std::int32_t;
using ClassId = std::int32_t;
using RowIndex = std::uint32_t;

/// The condition "feature has value". Features and values are dense 0-based
/// ids under the active Schema.
struct Literal {
    int feature = 0;
    ValueId value = 0;

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

/// A consistent set of literals: at most one literal per feature. Stored
/// sorted by feature index. Construction rejects inconsistent input, so a
/// LiteralSet is consistent by invariant.
class LiteralSet {
public:
    LiteralSet() = default;

    /// Throws std::invalid_argument if two literals share a feature.
    explicit LiteralSet(std::vector<Literal> literals) {
        auto built = try_from(std::move(literals));
        if (!built) {
            throw std::invalid_argument("LiteralSet: two literals on the same feature");
        }
        *this = std::move(*built);
    }

    /// Nullopt if the literals are inconsistent (two values for one feature).
    static std::optional<LiteralSet> try_from(std::vector<Literal> literals) {
        std::sort(literals.begin(), literals.end());
        literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
        FeatureSet features;
        for (const Literal& l : literals) {
            if (features.contains(l.feature)) return std::nullopt;
            features.add(l.feature);
        }
        LiteralSet s;
        s.literals_ = std::move(literals);
        s.features_ = features;
        return s;
    }

    /// The full literal set of an instance (one literal per feature).
    static LiteralSet of_instance(std::span<const ValueId> values) {
        LiteralSet s;
        s.literals_.reserve(values.size());
        for (std::size_t f = 0; f < values.size(); ++f) {
            s.literals_.push_back({static_cast<int>(f), values[f]});
            s.features_.add(static_cast<int>(f));
        }
        return s;
    }

    [[nodiscard]] int size() const { return static_cast<int>(literals_.size()); }
    [[nodiscard]] bool empty() const { return literals_.empty(); }
    [[nodiscard]] FeatureSet features() const { return features_; }
    [[nodiscard]] std::span<const Literal> literals() const { return literals_; }

    [[nodiscard]] bool contains(const Literal& l) const {
        return std::binary_search(literals_.begin(), literals_.end(), l);
    }

    /// Value asserted for a feature, if any literal mentions it.
    [[nodiscard]] std::optional<ValueId> value_of(int feature) const {
        if (!features_.contains(feature)) return std::nullopt;
        auto it = std::lower_bound(literals_.begin(), literals_.end(),
                                   Literal{feature, std::numeric_limits<ValueId>::min()});
        return it->value;
    }

    [[nodiscard]] bool subset_of(const LiteralSet& other) const {
        if (!features_.subset_of(other.features())) return false;
        return std::includes(other.literals_.begin(), other.literals_.end(),
                             literals_.begin(), literals_.end());
    }

    /// psi is contained in an instance iff the instance carries every
    /// asserted value.
    [[nodiscard]] bool contained_in(std::span<const ValueId> values) const {
        for (const Literal& l : literals_) {
            if (static_cast<std::size_t>(l.feature) >= values.size() || values[l.feature] != l.value) {
                return false;
            }
        }
        return true;
    }

    /// True when no literal of this set appears in the instance.
    [[nodiscard]] bool disjoint_from_instance(std::span<const ValueId> values) const {
        for (const Literal& l : literals_) {
            if (static_cast<std::size_t>(l.feature) < values.size() && values[l.feature] == l.value) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const LiteralSet&) const = default;

private:
    std::vector<Literal> literals_;  // sorted by (feature, value)
    FeatureSet features_;
};

/// Union of two consistent sets; nullopt when the union is inconsistent.
inline std::optional<LiteralSet> consistent_union(const LiteralSet& a, const LiteralSet& b) {
    std::vector<Literal> merged(a.literals().begin(), a.literals().end());
    merged.insert(merged.end(), b.literals().begin(), b.literals().end());
    return LiteralSet::try_from(std::move(merged));
}

}  // namespace cfex
