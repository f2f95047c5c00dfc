#include "cfex/metrics.hpp"

#include <random>
#include <vector>

#include "cfex/algebra.hpp"
#include "cfex/rank.hpp"
#include "cfex/rng.hpp"

namespace cfex {

namespace {

struct BallCounts {
    int ball_size = 0;
    int center_class_in_ball = 0;   // ball members labeled like b
    int query_class_in_ball = 0;    // ball members labeled like a
    int counterable_in_ball = 0;    // ball members labeled unlike b
    int center_class_total = 0;     // all sample members labeled like b
};

BallCounts count_ball(const LabeledSample& s, RowIndex a, RowIndex b) {
    const auto center = s.row(b);
    const int radius = hamming(s.row(a), center);
    const ClassId b_label = s.label(b);
    const ClassId a_label = s.label(a);
    BallCounts c;
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        const ClassId l = s.label(i);
        c.center_class_total += l == b_label;
        if (hamming(s.row(i), center) > radius) continue;
        ++c.ball_size;
        c.center_class_in_ball += l == b_label;
        c.query_class_in_ball += l == a_label;
        c.counterable_in_ball += l != b_label;
    }
    return c;
}

}  // namespace

Ratio typicality(const LabeledSample& s, RowIndex a, RowIndex b) {
    const BallCounts c = count_ball(s, a, b);
    return Ratio(c.center_class_in_ball, c.center_class_total);
}

Ratio capacity(const LabeledSample& s, RowIndex a, RowIndex b) {
    const BallCounts c = count_ball(s, a, b);
    return Ratio(c.counterable_in_ball, c.ball_size);
}

Ratio universality(const LabeledSample& s, RowIndex a, RowIndex b) {
    const BallCounts c = count_ball(s, a, b);
    return Ratio(c.query_class_in_ball, c.ball_size);
}

MetricsReport metrics_report(const LabeledSample& s, RowIndex a, RowIndex b) {
    const BallCounts c = count_ball(s, a, b);
    return MetricsReport{Ratio(c.center_class_in_ball, c.center_class_total),
                         Ratio(c.counterable_in_ball, c.ball_size),
                         Ratio(c.query_class_in_ball, c.ball_size), c.ball_size};
}

std::optional<OptimalVsRandom> compare_optimal_vs_random(const LabeledSample& s, RowIndex query,
                                                         std::uint64_t seed) {
    const RankingResult ranking = rank_minimal(s, query);
    if (ranking.ranked.size() < 2) return std::nullopt;

    // Candidates are the strictly non-optimal entries; a tie at the top makes
    // every tied entry optimal and leaves it out of the draw.
    const int top_power = ranking.ranked[0].power;
    std::vector<RowIndex> pool;
    for (const RankedCounterfactual& r : ranking.ranked) {
        if (r.power < top_power) pool.push_back(r.explanation.witness);
    }
    if (pool.empty()) return std::nullopt;

    std::mt19937_64 gen(seed);
    const RowIndex random_witness = pool[bounded(gen, pool.size())];
    const RowIndex optimal_witness = ranking.ranked[0].explanation.witness;

    return OptimalVsRandom{optimal_witness, random_witness,
                           metrics_report(s, query, optimal_witness),
                           metrics_report(s, query, random_witness)};
}

}  // namespace cfex
