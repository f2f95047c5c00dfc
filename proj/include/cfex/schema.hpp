#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cfex/feature_set.hpp"
#include "cfex/literal.hpp"

namespace cfex {

/// Per-feature name and finite value vocabulary, plus the label vocabulary.
/// Values and classes are interned to dense 0-based ids; vocabularies keep
/// first-occurrence order so ids are reproducible across runs.
class Schema {
public:
    Schema(std::vector<std::string> feature_names,
           std::vector<std::vector<std::string>> value_names,
           std::vector<std::string> class_names,
           std::string label_name = "class");

    [[nodiscard]] int feature_count() const { return static_cast<int>(feature_names_.size()); }
    [[nodiscard]] const std::string& feature_name(int f) const { return feature_names_.at(f); }
    [[nodiscard]] const std::string& label_name() const { return label_name_; }

    [[nodiscard]] int vocabulary_size(int f) const { return static_cast<int>(value_names_.at(f).size()); }
    [[nodiscard]] const std::string& value_name(int f, ValueId v) const { return value_names_.at(f).at(v); }

    [[nodiscard]] int class_count() const { return static_cast<int>(class_names_.size()); }
    [[nodiscard]] const std::string& class_name(ClassId c) const { return class_names_.at(c); }

    [[nodiscard]] std::optional<int> feature_index(std::string_view name) const;
    [[nodiscard]] std::optional<ValueId> value_id(int f, std::string_view name) const;
    [[nodiscard]] std::optional<ClassId> class_id(std::string_view name) const;

    /// One literal rendered as "name=value".
    [[nodiscard]] std::string render(const Literal& l) const;
    /// "{name=value, ...}" in feature order.
    [[nodiscard]] std::string render(const LiteralSet& s) const;
    /// "{name, ...}" in feature order.
    [[nodiscard]] std::string render(FeatureSet s) const;

    bool operator==(const Schema& other) const {
        return feature_names_ == other.feature_names_ && value_names_ == other.value_names_ &&
               class_names_ == other.class_names_ && label_name_ == other.label_name_;
    }

private:
    std::vector<std::string> feature_names_;
    std::vector<std::vector<std::string>> value_names_;
    std::vector<std::string> class_names_;
    std::string label_name_;

    std::unordered_map<std::string, int> feature_lookup_;
    std::vector<std::unordered_map<std::string, ValueId>> value_lookup_;
    std::unordered_map<std::string, ClassId> class_lookup_;
};

}  // namespace cfex
