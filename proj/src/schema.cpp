#include "cfex/schema.hpp"

#include <stdexcept>
#include <unordered_set>

namespace cfex {

Schema::Schema(std::vector<std::string> feature_names,
               std::vector<std::vector<std::string>> value_names,
               std::vector<std::string> class_names,
               std::string label_name)
    : feature_names_(std::move(feature_names)),
      value_names_(std::move(value_names)),
      class_names_(std::move(class_names)),
      label_name_(std::move(label_name)) {
    if (feature_names_.empty()) {
        throw std::invalid_argument("Schema: no features");
    }
    if (feature_names_.size() != value_names_.size()) {
        throw std::invalid_argument("Schema: one vocabulary required per feature");
    }
    if (static_cast<int>(feature_names_.size()) > FeatureSet::kMaxFeatures) {
        throw std::invalid_argument("Schema: more than 64 features are not supported");
    }
    if (class_names_.empty()) {
        throw std::invalid_argument("Schema: empty label vocabulary");
    }

    for (std::size_t f = 0; f < feature_names_.size(); ++f) {
        if (!feature_lookup_.emplace(feature_names_[f], static_cast<int>(f)).second) {
            throw std::invalid_argument("Schema: duplicate feature name '" + feature_names_[f] + "'");
        }
    }
    value_lookup_.resize(value_names_.size());
    for (std::size_t f = 0; f < value_names_.size(); ++f) {
        if (value_names_[f].empty()) {
            throw std::invalid_argument("Schema: empty vocabulary for feature '" + feature_names_[f] + "'");
        }
        for (std::size_t v = 0; v < value_names_[f].size(); ++v) {
            if (!value_lookup_[f].emplace(value_names_[f][v], static_cast<ValueId>(v)).second) {
                throw std::invalid_argument("Schema: duplicate value '" + value_names_[f][v] +
                                            "' for feature '" + feature_names_[f] + "'");
            }
        }
    }
    for (std::size_t c = 0; c < class_names_.size(); ++c) {
        if (!class_lookup_.emplace(class_names_[c], static_cast<ClassId>(c)).second) {
            throw std::invalid_argument("Schema: duplicate class name '" + class_names_[c] + "'");
        }
    }
}

std::optional<int> Schema::feature_index(std::string_view name) const {
    auto it = feature_lookup_.find(std::string(name));
    if (it == feature_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<ValueId> Schema::value_id(int f, std::string_view name) const {
    const auto& lookup = value_lookup_.at(f);
    auto it = lookup.find(std::string(name));
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

std::optional<ClassId> Schema::class_id(std::string_view name) const {
    auto it = class_lookup_.find(std::string(name));
    if (it == class_lookup_.end()) return std::nullopt;
    return it->second;
}

std::string Schema::render(const Literal& l) const {
    return feature_name(l.feature) + "=" + value_name(l.feature, l.value);
}

std::string Schema::render(const LiteralSet& s) const {
    std::string out = "{";
    bool first = true;
    for (const Literal& l : s.literals()) {
        if (!first) out += ", ";
        out += render(l);
        first = false;
    }
    return out + "}";
}

std::string Schema::render(FeatureSet s) const {
    std::string out = "{";
    bool first = true;
    for (int f : s) {
        if (!first) out += ", ";
        out += feature_name(f);
        first = false;
    }
    return out + "}";
}

}  // namespace cfex
