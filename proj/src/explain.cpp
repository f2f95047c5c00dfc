#include "cfex/explain.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfex {

namespace {

/// Does the row agree with `a` on every feature in `mask`?
bool agrees_on(std::span<const ValueId> row, std::span<const ValueId> a, FeatureSet mask) {
    for (int f : mask) {
        if (row[f] != a[f]) return false;
    }
    return true;
}

LiteralSet restrict_to(std::span<const ValueId> a, FeatureSet mask) {
    std::vector<Literal> literals;
    literals.reserve(mask.size());
    for (int f : mask) {
        literals.push_back({f, a[f]});
    }
    return LiteralSet(std::move(literals));
}

}  // namespace

bool is_factual(const LabeledSample& s, RowIndex query, const LiteralSet& psi,
                bool require_subset) {
    const auto a = s.row(query);
    if (require_subset && !psi.contained_in(a)) return false;
    const ClassId target = s.label(query);
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (psi.contained_in(s.row(i)) && s.label(i) != target) return false;
    }
    return true;
}

std::vector<FactualExplanation> minimal_factuals(const LabeledSample& s, RowIndex query,
                                                 int max_size) {
    const auto a = s.row(query);
    const int n = s.feature_count();
    if (max_size < 1) {
        throw std::invalid_argument("minimal_factuals: max_size must be at least 1");
    }
    max_size = std::min(max_size, n);
    const ClassId target = s.label(query);

    std::vector<FactualExplanation> found;
    std::vector<FeatureSet> found_masks;

    // Breadth-first by subset size: once a factual of size k is found, no
    // superset of it is a candidate at larger sizes, so survivors are
    // subset-minimal.
    std::vector<int> combo;
    for (int k = 1; k <= max_size; ++k) {
        combo.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
        while (true) {
            FeatureSet mask;
            for (int f : combo) mask.add(f);

            const bool pruned = std::any_of(found_masks.begin(), found_masks.end(),
                                            [&](FeatureSet m) { return m.subset_of(mask); });
            if (!pruned) {
                bool factual = true;
                std::vector<RowIndex> supporters;
                for (RowIndex i = 0; i < s.row_count(); ++i) {
                    if (!agrees_on(s.row(i), a, mask)) continue;
                    if (s.label(i) != target) {
                        factual = false;
                        break;
                    }
                    supporters.push_back(i);
                }
                if (factual) {
                    found.push_back({restrict_to(a, mask), std::move(supporters)});
                    found_masks.push_back(mask);
                }
            }

            // next k-combination of {0..n-1} in lexicographic order
            int pos = k - 1;
            while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++combo[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i) {
                combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
    return found;
}

LiteralSet counterfactual_of(std::span<const ValueId> a, std::span<const ValueId> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("counterfactual_of: instances of different width");
    }
    std::vector<Literal> literals;
    for (std::size_t f = 0; f < a.size(); ++f) {
        if (a[f] != b[f]) literals.push_back({static_cast<int>(f), b[f]});
    }
    if (literals.empty()) {
        throw std::invalid_argument("counterfactual_of: instances are identical");
    }
    return LiteralSet(std::move(literals));
}

std::vector<CounterfactualExplanation> all_counterfactuals(const LabeledSample& s,
                                                           RowIndex query) {
    const auto a = s.row(query);
    const ClassId target = s.label(query);
    std::vector<CounterfactualExplanation> out;
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) == target) continue;
        LiteralSet psi = counterfactual_of(a, s.row(i));
        const int d = psi.size();
        out.push_back({std::move(psi), i, d, s.label(i)});
    }
    std::sort(out.begin(), out.end(), [](const CounterfactualExplanation& x,
                                         const CounterfactualExplanation& y) {
        return x.distance != y.distance ? x.distance < y.distance : x.witness < y.witness;
    });
    return out;
}

std::vector<CounterfactualExplanation> minimal_counterfactuals(const LabeledSample& s,
                                                               RowIndex query) {
    const auto a = s.row(query);
    const ClassId target = s.label(query);

    int best = s.feature_count() + 1;
    std::vector<RowIndex> witnesses;
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) == target) continue;
        const int d = hamming(a, s.row(i));
        if (d < best) {
            best = d;
            witnesses.clear();
        }
        if (d == best) witnesses.push_back(i);
    }

    std::vector<CounterfactualExplanation> out;
    out.reserve(witnesses.size());
    for (RowIndex i : witnesses) {
        out.push_back({counterfactual_of(a, s.row(i)), i, best, s.label(i)});
    }
    return out;
}

std::optional<CounterfactualExplanation> is_reducible(const LabeledSample& s, RowIndex query,
                                                      const CounterfactualExplanation& psi) {
    const auto a = s.row(query);
    const ClassId target = s.label(query);

    std::optional<CounterfactualExplanation> best;
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) == target) continue;
        const auto c = s.row(i);
        // c \ a must be a strict subset of psi: strictly fewer disagreements,
        // each one asserting a value psi already asserts.
        int d = 0;
        bool contained = true;
        for (std::size_t f = 0; f < a.size() && contained; ++f) {
            if (c[f] == a[f]) continue;
            ++d;
            contained = psi.psi.contains({static_cast<int>(f), c[f]});
        }
        if (!contained || d == 0 || d >= psi.distance) continue;
        if (!best || d < best->distance) {
            best = CounterfactualExplanation{counterfactual_of(a, c), i, d, s.label(i)};
        }
    }
    return best;
}

bool is_irreducible_literal_drop(const LabeledSample& s, RowIndex query, const LiteralSet& psi) {
    const ClassId target = s.label(query);
    const auto literals = psi.literals();
    for (std::size_t drop = 0; drop < literals.size(); ++drop) {
        bool witnessed = false;
        for (RowIndex i = 0; i < s.row_count() && !witnessed; ++i) {
            if (s.label(i) != target) continue;
            const auto x = s.row(i);
            bool contains_rest = true;
            for (std::size_t j = 0; j < literals.size() && contains_rest; ++j) {
                if (j == drop) continue;
                contains_rest = x[literals[j].feature] == literals[j].value;
            }
            witnessed = contains_rest;
        }
        if (!witnessed) return false;
    }
    return true;
}

}  // namespace cfex
