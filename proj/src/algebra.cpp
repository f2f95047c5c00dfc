#include "cfex/algebra.hpp"

#include <stdexcept>

namespace cfex {

namespace {

void check_comparable(std::span<const ValueId> a, std::span<const ValueId> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("instances with mismatched feature counts");
    }
    if (a.size() > static_cast<std::size_t>(FeatureSet::kMaxFeatures)) {
        throw std::invalid_argument("instances wider than 64 features");
    }
}

}  // namespace

FeatureSet agreement(std::span<const ValueId> a, std::span<const ValueId> b) {
    check_comparable(a, b);
    std::uint64_t bits = 0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        bits |= static_cast<std::uint64_t>(a[f] == b[f]) << f;
    }
    return FeatureSet::from_bits(bits);
}

FeatureSet disagreement(std::span<const ValueId> a, std::span<const ValueId> b) {
    check_comparable(a, b);
    std::uint64_t bits = 0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        bits |= static_cast<std::uint64_t>(a[f] != b[f]) << f;
    }
    return FeatureSet::from_bits(bits);
}

int hamming(std::span<const ValueId> a, std::span<const ValueId> b) {
    check_comparable(a, b);
    int d = 0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        d += a[f] != b[f];
    }
    return d;
}

std::vector<RowIndex> counter_set(const LabeledSample& s, RowIndex query) {
    return counter_set(s, s.label(query));
}

std::vector<RowIndex> counter_set(const LabeledSample& s, ClassId query_label) {
    std::vector<RowIndex> out;
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) != query_label) out.push_back(i);
    }
    return out;
}

}  // namespace cfex
