#include "cfex/rank.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cfex/algebra.hpp"

namespace cfex {

std::vector<RowIndex> hyperball(const LabeledSample& s, RowIndex a, RowIndex b) {
    const auto center = s.row(b);
    const int radius = hamming(s.row(a), center);
    std::vector<RowIndex> members;
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (hamming(s.row(i), center) <= radius) members.push_back(i);
    }
    return members;
}

int cf_power(const LabeledSample& s, RowIndex b, RowIndex a) {
    const auto center = s.row(b);
    const int radius = hamming(s.row(a), center);
    const ClassId center_label = s.label(b);
    int power = 0;
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) != center_label && hamming(s.row(i), center) <= radius) ++power;
    }
    return power;
}

RankingResult rank_minimal(const LabeledSample& s, RowIndex query) {
    RankingResult result;
    std::vector<CounterfactualExplanation> minimal = minimal_counterfactuals(s, query);
    if (minimal.empty()) return result;

    result.ranked.reserve(minimal.size());
    for (CounterfactualExplanation& e : minimal) {
        const int power = cf_power(s, e.witness, query);
        result.ranked.push_back({std::move(e), power, 0});
    }
    std::sort(result.ranked.begin(), result.ranked.end(),
              [](const RankedCounterfactual& x, const RankedCounterfactual& y) {
                  return x.power != y.power ? x.power > y.power
                                            : x.explanation.witness < y.explanation.witness;
              });
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
        result.ranked[i].rank = static_cast<int>(i) + 1;
    }
    result.unique_optimal =
        result.ranked.size() == 1 || result.ranked[0].power > result.ranked[1].power;
    result.gap = power_gap(result.ranked);
    return result;
}

std::optional<Ratio> power_gap(std::span<const RankedCounterfactual> ranked) {
    if (ranked.size() < 2) return std::nullopt;
    const long long p1 = ranked[0].power;
    const long long p2 = ranked[1].power;
    if (p2 > p1) {
        throw std::invalid_argument("power_gap: entries not sorted by power");
    }
    return Ratio(p1 - p2, p1);
}

std::vector<std::pair<CounterfactualExplanation, int>> dag_frequency_rank(const LabeledSample& s,
                                                                          RowIndex query) {
    std::vector<CounterfactualExplanation> minimal = minimal_counterfactuals(s, query);

    // Multiplicity is counted on the disagreement feature set (psi's
    // features), not on psi's values.
    std::map<std::uint64_t, int> freq;
    for (const CounterfactualExplanation& e : minimal) {
        ++freq[e.psi.features().bits()];
    }

    std::vector<std::pair<CounterfactualExplanation, int>> out;
    out.reserve(minimal.size());
    for (CounterfactualExplanation& e : minimal) {
        const int f = freq.at(e.psi.features().bits());
        out.emplace_back(std::move(e), f);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) {
                  return x.second != y.second ? x.second > y.second
                                              : x.first.witness < y.first.witness;
              });
    return out;
}

}  // namespace cfex
