#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cfex/algebra.hpp"
#include "cfex/explain.hpp"
#include "cfex/metrics.hpp"
#include "cfex/rank.hpp"

#include "support/random_data.hpp"

using namespace cfex;
using testsupport::random_dataset;

namespace {

constexpr int kDatasets = 220;

/// The first `rows` rows of `s` as an independent sample. A prefix of a
/// conflict-free sample is itself conflict-free.
LabeledSample prefix_sample(const LabeledSample& s, RowIndex rows) {
    std::vector<ValueId> flat;
    std::vector<ClassId> labels;
    for (RowIndex i = 0; i < rows; ++i) {
        const auto r = s.row(i);
        flat.insert(flat.end(), r.begin(), r.end());
        labels.push_back(s.label(i));
    }
    return LabeledSample(s.schema_ptr(), std::move(flat), std::move(labels), "prefix");
}

std::vector<Literal> to_vec(const LiteralSet& psi) {
    return {psi.literals().begin(), psi.literals().end()};
}

std::set<std::vector<Literal>> psi_set(const std::vector<CounterfactualExplanation>& v) {
    std::set<std::vector<Literal>> out;
    for (const auto& e : v) out.insert(to_vec(e.psi));
    return out;
}

}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("counterfactual changes never overlap the query instance") {
        std::mt19937_64 gen(101);
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            for (const auto& e : all_counterfactuals(s, q)) {
                REQUIRE(!e.psi.empty());
                // (i) every changed feature takes a value different from the query's
                REQUIRE(e.psi.disjoint_from_instance(s.row(q)));
                // (ii) hence the union with the query instance is inconsistent
                REQUIRE_FALSE(
                    consistent_union(LiteralSet::of_instance(s.row(q)), e.psi).has_value());
                // the changes are exactly the disagreement with the witness
                REQUIRE(e.psi.features() == disagreement(s.row(e.witness), s.row(q)));
                REQUIRE(e.distance == static_cast<int>(e.psi.size()));
                REQUIRE(e.target_label != s.label(q));
            }
        }
    }

    TEST_CASE("counterfactuals exist exactly when the counter-set is nonempty") {
        std::mt19937_64 gen(102);
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const bool any = !counter_set(s, q).empty();
            CHECK(all_counterfactuals(s, q).empty() == !any);
            CHECK(minimal_counterfactuals(s, q).empty() == !any);
            CHECK(rank_minimal(s, q).ranked.empty() == !any);
        }
    }

    TEST_CASE("growing the sample only adds counterfactuals") {
        std::mt19937_64 gen(103);
        int informative = 0;
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample big = random_dataset(gen);
            if (big.row_count() < 2) continue;
            const auto cut =
                static_cast<RowIndex>(1 + bounded(gen, big.row_count() - 1));  // 1..rows-1
            const LabeledSample small = prefix_sample(big, cut);
            const auto q = static_cast<RowIndex>(bounded(gen, cut));  // present in both
            const auto small_psis = psi_set(all_counterfactuals(small, q));
            const auto big_psis = psi_set(all_counterfactuals(big, q));
            for (const auto& psi : small_psis) {
                CHECK(big_psis.count(psi) == 1);
            }
            if (!small_psis.empty()) ++informative;
            // minimal distance can only shrink as rows are added
            const auto small_min = minimal_counterfactuals(small, q);
            const auto big_min = minimal_counterfactuals(big, q);
            if (!small_min.empty()) {
                REQUIRE(!big_min.empty());
                CHECK(big_min.front().distance <= small_min.front().distance);
            }
        }
        CHECK(informative > kDatasets / 4);  // the property was exercised, not vacuous
    }

    TEST_CASE("every factual explanation clashes with every counterfactual") {
        std::mt19937_64 gen(104);
        int pairs = 0;
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const auto factuals = minimal_factuals(s, q, 3);
            const auto counterfactuals = all_counterfactuals(s, q);
            for (const auto& f : factuals) {
                for (const auto& c : counterfactuals) {
                    // they assign different values to some shared feature
                    CHECK_FALSE(consistent_union(f.psi, c.psi).has_value());
                    ++pairs;
                }
            }
        }
        CHECK(pairs > 1000);
    }

    TEST_CASE("minimal counterfactuals admit no reduction") {
        std::mt19937_64 gen(105);
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            for (const auto& e : minimal_counterfactuals(s, q)) {
                CHECK_FALSE(is_reducible(s, q, e).has_value());
            }
            // and any reported reduction of a non-minimal one is strictly smaller
            for (const auto& e : all_counterfactuals(s, q)) {
                if (const auto red = is_reducible(s, q, e)) {
                    CHECK(red->distance < e.distance);
                    CHECK(red->psi.size() < e.psi.size());
                    for (const Literal& l : red->psi.literals()) CHECK(e.psi.contains(l));
                }
            }
        }
    }

    TEST_CASE("metrics stay within [0,1] and agree with their definitions") {
        std::mt19937_64 gen(106);
        int two_class_checks = 0;
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            for (const auto& e : minimal_counterfactuals(s, q)) {
                const MetricsReport m = metrics_report(s, q, e.witness);
                for (const Ratio r : {m.typicality, m.capacity, m.universality}) {
                    CHECK(r.value() >= 0.0);
                    CHECK(r.value() <= 1.0);
                }
                CHECK(m.ball_size >= 1);
                CHECK(m.capacity == Ratio(cf_power(s, e.witness, q), m.ball_size));
                CHECK(m.typicality.value() > 0.0);  // the witness itself is in the ball
                // distinct labels on both sides of a two-class sample collapse the two views
                std::set<ClassId> present;
                for (RowIndex i = 0; i < s.row_count(); ++i) present.insert(s.label(i));
                if (present.size() == 2) {
                    CHECK(m.capacity == m.universality);
                    ++two_class_checks;
                }
            }
        }
        CHECK(two_class_checks > 100);
    }

    TEST_CASE("ranking is sorted, one-indexed, and consistent with its gap") {
        std::mt19937_64 gen(107);
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const RankingResult r = rank_minimal(s, q);
            for (std::size_t i = 0; i < r.ranked.size(); ++i) {
                CHECK(r.ranked[i].rank == static_cast<int>(i) + 1);
                CHECK(r.ranked[i].power >= 1);
                if (i > 0) {
                    const bool ordered =
                        r.ranked[i - 1].power > r.ranked[i].power ||
                        (r.ranked[i - 1].power == r.ranked[i].power &&
                         r.ranked[i - 1].explanation.witness < r.ranked[i].explanation.witness);
                    CHECK(ordered);
                }
            }
            if (r.ranked.size() >= 2) {
                REQUIRE(r.gap.has_value());
                CHECK(r.unique_optimal == (r.ranked[0].power > r.ranked[1].power));
                CHECK(*r.gap == Ratio(r.ranked[0].power - r.ranked[1].power, r.ranked[0].power));
            } else {
                CHECK_FALSE(r.gap.has_value());
                CHECK(r.unique_optimal == (r.ranked.size() == 1));
            }
        }
    }

    TEST_CASE("hyperballs contain both endpoints and respect the radius") {
        std::mt19937_64 gen(108);
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const auto b = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const std::vector<RowIndex> ball = hyperball(s, q, b);
            const int radius = hamming(s.row(q), s.row(b));
            std::set<RowIndex> in_ball(ball.begin(), ball.end());
            CHECK(in_ball.count(q) == 1);
            CHECK(in_ball.count(b) == 1);
            for (RowIndex i = 0; i < s.row_count(); ++i) {
                CHECK(in_ball.count(i) == (hamming(s.row(i), s.row(b)) <= radius ? 1U : 0U));
            }
            CHECK(std::is_sorted(ball.begin(), ball.end()));
        }
    }

    TEST_CASE("hamming distance is a metric") {
        std::mt19937_64 gen(109);
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto x = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const auto y = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const auto z = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const int dxy = hamming(s.row(x), s.row(y));
            CHECK(dxy == hamming(s.row(y), s.row(x)));
            CHECK(dxy <= s.feature_count());
            CHECK((dxy == 0) == std::ranges::equal(s.row(x), s.row(y)));
            CHECK(hamming(s.row(x), s.row(z)) <= dxy + hamming(s.row(y), s.row(z)));
            // distance decomposes into the disagreement count
            CHECK(dxy == static_cast<int>(disagreement(s.row(x), s.row(y)).size()));
            CHECK(dxy == s.feature_count() - static_cast<int>(agreement(s.row(x), s.row(y)).size()));
        }
    }

    TEST_CASE("factual explanations hold on the whole sample") {
        std::mt19937_64 gen(110);
        for (int t = 0; t < kDatasets; ++t) {
            const LabeledSample s = random_dataset(gen);
            const auto q = static_cast<RowIndex>(bounded(gen, s.row_count()));
            const auto factuals = minimal_factuals(s, q, 3);
            for (const auto& f : factuals) {
                CHECK(is_factual(s, q, f.psi));
                // subset-minimal: no other result is contained in this one
                for (const auto& g : factuals) {
                    if (&f == &g) continue;
                    CHECK_FALSE(g.psi.subset_of(f.psi));
                }
                // supporting rows really do contain psi and share the label
                for (const RowIndex i : f.supporting_rows) {
                    CHECK(s.label(i) == s.label(q));
                    CHECK(f.psi.contained_in(s.row(i)));
                }
            }
        }
    }

    TEST_CASE("synthetic labels depend only on the relevant features") {
        std::mt19937_64 gen(111);
        for (int t = 0; t < 40; ++t) {
            SyntheticSpec spec;
            spec.dim = 3 + static_cast<int>(bounded(gen, 6));
            spec.values_per_feature = 2 + static_cast<int>(bounded(gen, 3));
            const int r = 1 + static_cast<int>(bounded(gen, static_cast<std::uint64_t>(spec.dim)));
            spec.relevant = FeatureSet::full(r);
            spec.rows = 200;
            spec.seed = bounded(gen, 1'000'000);
            const auto [s, relevant] = generate_synthetic(spec);
            REQUIRE(relevant == spec.relevant);
            for (RowIndex i = 0; i < s.row_count(); ++i) {
                int sum = 0;
                for (const int f : spec.relevant) sum += s.row(i)[static_cast<std::size_t>(f)];
                CHECK(s.label(i) == static_cast<ClassId>(sum % 3));
            }
            // rows agreeing on the relevant features agree on the label
            for (RowIndex i = 1; i < s.row_count(); ++i) {
                if (spec.relevant.subset_of(agreement(s.row(0), s.row(i)))) {
                    CHECK(s.label(0) == s.label(i));
                }
            }
        }
    }
}
