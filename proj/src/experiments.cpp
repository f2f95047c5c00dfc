#include "cfex/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "cfex/algebra.hpp"
#include "cfex/explain.hpp"
#include "cfex/metrics.hpp"
#include "cfex/rank.hpp"
#include "cfex/rng.hpp"

namespace cfex {

namespace {

using nlohmann::ordered_json;

std::string format_cell(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", v.get<double>());
        return buf;
    }
    return v.dump();
}

double round4(double x) { return std::round(x * 10000.0) / 10000.0; }

ordered_json config_json(const ExperimentConfig& cfg, bool with_sizes) {
    ordered_json j{{"sample_size", cfg.sample_size}, {"repeats", cfg.repeats}, {"seed", cfg.seed}};
    if (with_sizes) j["sizes"] = cfg.sizes;
    return j;
}

std::uint64_t instance_seed(std::uint64_t repeat_seed, RowIndex i) {
    return mix_seed(repeat_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1));
}

ordered_json literal_json(const Schema& schema, const Literal& l) {
    return ordered_json{{"feature", schema.feature_name(l.feature)},
                        {"value", schema.value_name(l.feature, l.value)}};
}

ordered_json literals_json(const Schema& schema, const LiteralSet& psi) {
    ordered_json arr = ordered_json::array();
    for (const Literal& l : psi.literals()) arr.push_back(literal_json(schema, l));
    return arr;
}

ordered_json counterfactual_json(const Schema& schema, const CounterfactualExplanation& e) {
    return ordered_json{{"changes", literals_json(schema, e.psi)},
                        {"witness", e.witness},
                        {"distance", e.distance},
                        {"target_label", schema.class_name(e.target_label)}};
}

ordered_json metrics_json(const MetricsReport& m) {
    return ordered_json{{"typicality", round4(m.typicality.value())},
                        {"capacity", round4(m.capacity.value())},
                        {"universality", round4(m.universality.value())},
                        {"ball_size", m.ball_size}};
}

}  // namespace

ordered_json ExperimentReport::to_json() const {
    return ordered_json{{"experiment", experiment}, {"dataset", dataset},   {"config", config},
                        {"columns", columns},       {"aggregates", aggregates},
                        {"per_repeat", per_repeat}};
}

std::string ExperimentReport::csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : per_repeat) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

void ExperimentReport::write(const std::string& stem) const {
    {
        std::ofstream csv_out(stem + ".csv");
        if (!csv_out) throw std::runtime_error("cannot write '" + stem + ".csv'");
        csv_out << csv();
    }
    std::ofstream json_out(stem + ".json");
    if (!json_out) throw std::runtime_error("cannot write '" + stem + ".json'");
    json_out << to_json().dump(2) << '\n';
}

std::vector<int> distance_histogram(const LabeledSample& s, RowIndex query) {
    const auto a = s.row(query);
    const ClassId target = s.label(query);
    std::vector<int> hist(static_cast<std::size_t>(s.feature_count()), 0);
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) == target) continue;
        ++hist[static_cast<std::size_t>(hamming(a, s.row(i)) - 1)];
    }
    return hist;
}

ExperimentReport run_distribution(const LabeledSample& s, const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.experiment = "distribution";
    report.dataset = s.provenance();
    report.config = config_json(cfg, false);
    report.columns = {"repeat", "distance", "mean_count"};

    const int n = s.feature_count();
    std::vector<double> overall(static_cast<std::size_t>(n), 0.0);
    for (int r = 0; r < cfg.repeats; ++r) {
        const LabeledSample sub = sample(s, cfg.sample_size, cfg.seed + static_cast<std::uint64_t>(r));
        std::vector<double> sums(static_cast<std::size_t>(n), 0.0);
        for (RowIndex i = 0; i < sub.row_count(); ++i) {
            const std::vector<int> hist = distance_histogram(sub, i);
            for (int d = 0; d < n; ++d) sums[static_cast<std::size_t>(d)] += hist[static_cast<std::size_t>(d)];
        }
        for (int d = 0; d < n; ++d) {
            const double mean = sums[static_cast<std::size_t>(d)] / sub.row_count();
            overall[static_cast<std::size_t>(d)] += mean;
            report.per_repeat.push_back({r, d + 1, mean});
        }
    }
    for (double& v : overall) v /= cfg.repeats;
    report.aggregates = ordered_json{{"mean_count_by_distance", overall}};
    return report;
}

ExperimentReport run_uniqueness(const LabeledSample& s, const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.experiment = "uniqueness";
    report.dataset = s.provenance();
    report.config = config_json(cfg, false);
    report.columns = {"repeat", "instances", "eligible", "unique_optimal", "no_counterfactual",
                      "proportion"};

    double proportion_sum = 0.0;
    double no_cf_sum = 0.0;
    for (int r = 0; r < cfg.repeats; ++r) {
        const LabeledSample sub = sample(s, cfg.sample_size, cfg.seed + static_cast<std::uint64_t>(r));
        int unique = 0;
        int no_cf = 0;
        for (RowIndex i = 0; i < sub.row_count(); ++i) {
            const RankingResult ranking = rank_minimal(sub, i);
            if (ranking.ranked.empty()) {
                ++no_cf;
            } else if (ranking.unique_optimal) {
                ++unique;
            }
        }
        const int instances = static_cast<int>(sub.row_count());
        const int eligible = instances - no_cf;
        const double proportion = eligible > 0 ? static_cast<double>(unique) / eligible : 0.0;
        proportion_sum += proportion;
        no_cf_sum += no_cf;
        report.per_repeat.push_back({r, instances, eligible, unique, no_cf, proportion});
    }
    report.aggregates = ordered_json{{"mean_proportion", proportion_sum / cfg.repeats},
                                     {"mean_no_counterfactual", no_cf_sum / cfg.repeats}};
    return report;
}

ExperimentReport run_gap(const LabeledSample& s, const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.experiment = "gap";
    report.dataset = s.provenance();
    report.config = config_json(cfg, false);
    report.columns = {"repeat", "instances", "eligible", "singletons", "no_counterfactual",
                      "mean_gap"};

    double gap_mean_sum = 0.0;
    double singleton_sum = 0.0;
    for (int r = 0; r < cfg.repeats; ++r) {
        const LabeledSample sub = sample(s, cfg.sample_size, cfg.seed + static_cast<std::uint64_t>(r));
        int eligible = 0;
        int singletons = 0;
        int no_cf = 0;
        double gap_sum = 0.0;
        for (RowIndex i = 0; i < sub.row_count(); ++i) {
            const RankingResult ranking = rank_minimal(sub, i);
            if (ranking.ranked.empty()) {
                ++no_cf;
            } else if (!ranking.gap) {
                ++singletons;
            } else {
                ++eligible;
                gap_sum += ranking.gap->value();
            }
        }
        const double mean_gap = eligible > 0 ? gap_sum / eligible : 0.0;
        gap_mean_sum += mean_gap;
        singleton_sum += singletons;
        report.per_repeat.push_back(
            {r, static_cast<int>(sub.row_count()), eligible, singletons, no_cf, mean_gap});
    }
    report.aggregates = ordered_json{{"mean_gap", gap_mean_sum / cfg.repeats},
                                     {"mean_singletons", singleton_sum / cfg.repeats}};
    return report;
}

ExperimentReport run_metric_comparison(const LabeledSample& s, const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.experiment = "metric_comparison";
    report.dataset = s.provenance();
    report.config = config_json(cfg, false);

    // With two classes capacity equals universality, so the capacity columns
    // would be redundant; they are reported for three classes and up.
    const bool with_capacity = s.schema().class_count() >= 3;
    report.columns = {"repeat", "eligible", "optimal_typicality", "random_typicality"};
    if (with_capacity) {
        report.columns.insert(report.columns.end(), {"optimal_capacity", "random_capacity"});
    }
    report.columns.insert(report.columns.end(), {"optimal_universality", "random_universality"});

    double opt_typ_sum = 0.0, rand_typ_sum = 0.0;
    double opt_cap_sum = 0.0, rand_cap_sum = 0.0;
    double opt_uni_sum = 0.0, rand_uni_sum = 0.0;
    for (int r = 0; r < cfg.repeats; ++r) {
        const std::uint64_t repeat_seed = cfg.seed + static_cast<std::uint64_t>(r);
        const LabeledSample sub = sample(s, cfg.sample_size, repeat_seed);
        int eligible = 0;
        double ot = 0.0, rt = 0.0, oc = 0.0, rc = 0.0, ou = 0.0, ru = 0.0;
        for (RowIndex i = 0; i < sub.row_count(); ++i) {
            const auto cmp = compare_optimal_vs_random(sub, i, instance_seed(repeat_seed, i));
            if (!cmp) continue;
            ++eligible;
            ot += cmp->optimal.typicality.value();
            rt += cmp->random.typicality.value();
            oc += cmp->optimal.capacity.value();
            rc += cmp->random.capacity.value();
            ou += cmp->optimal.universality.value();
            ru += cmp->random.universality.value();
        }
        const double denom = eligible > 0 ? eligible : 1;
        ot /= denom; rt /= denom; oc /= denom; rc /= denom; ou /= denom; ru /= denom;
        opt_typ_sum += ot; rand_typ_sum += rt;
        opt_cap_sum += oc; rand_cap_sum += rc;
        opt_uni_sum += ou; rand_uni_sum += ru;
        std::vector<ordered_json> row = {r, eligible, ot, rt};
        if (with_capacity) {
            row.push_back(oc);
            row.push_back(rc);
        }
        row.push_back(ou);
        row.push_back(ru);
        report.per_repeat.push_back(std::move(row));
    }

    ordered_json agg{{"classes", s.schema().class_count()},
                     {"mean_optimal_typicality", opt_typ_sum / cfg.repeats},
                     {"mean_random_typicality", rand_typ_sum / cfg.repeats}};
    if (with_capacity) {
        agg["mean_optimal_capacity"] = opt_cap_sum / cfg.repeats;
        agg["mean_random_capacity"] = rand_cap_sum / cfg.repeats;
    }
    agg["mean_optimal_universality"] = opt_uni_sum / cfg.repeats;
    agg["mean_random_universality"] = rand_uni_sum / cfg.repeats;
    report.aggregates = std::move(agg);
    return report;
}

ExperimentReport run_relevant_ratio(const SyntheticSpec& spec, const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.experiment = "relevant_ratio";
    report.dataset = "synthetic(relevant=" + std::to_string(spec.relevant.size()) + ")";
    report.config = config_json(cfg, true);
    report.columns = {"size", "repeat", "queries", "mean_ratio", "min_ratio"};

    const int r_size = spec.relevant.size();
    ordered_json mean_by_size = ordered_json::object();
    double overall_min = 1.0;
    for (std::size_t size : cfg.sizes) {
        double size_mean_sum = 0.0;
        for (int r = 0; r < cfg.repeats; ++r) {
            SyntheticSpec draw = spec;
            draw.rows = size;
            draw.full_grid = false;
            draw.seed = mix_seed(mix_seed(cfg.seed + static_cast<std::uint64_t>(r)) ^ size);
            const auto [sub, relevant] = generate_synthetic(draw);

            // Rows are i.i.d. uniform draws, so a prefix is itself a uniform
            // sample of query instances.
            const RowIndex queries =
                static_cast<RowIndex>(std::min<std::size_t>(cfg.sample_size, sub.row_count()));
            double ratio_sum = 0.0;
            double min_ratio = 1.0;
            int counted = 0;
            for (RowIndex i = 0; i < queries; ++i) {
                const RankingResult ranking = rank_minimal(sub, i);
                if (ranking.ranked.empty()) continue;
                const FeatureSet dag = ranking.ranked[0].explanation.psi.features();
                const double ratio = static_cast<double>((dag & relevant).size()) / r_size;
                ratio_sum += ratio;
                min_ratio = std::min(min_ratio, ratio);
                ++counted;
            }
            const double mean_ratio = counted > 0 ? ratio_sum / counted : 0.0;
            size_mean_sum += mean_ratio;
            overall_min = std::min(overall_min, min_ratio);
            report.per_repeat.push_back(
                {static_cast<std::uint64_t>(size), r, counted, mean_ratio, min_ratio});
        }
        mean_by_size[std::to_string(size)] = size_mean_sum / cfg.repeats;
    }
    report.aggregates = ordered_json{{"relevant_count", r_size},
                                     {"mean_ratio_by_size", std::move(mean_by_size)},
                                     {"min_ratio", overall_min}};
    return report;
}

ExplainMode parse_explain_mode(std::string_view text) {
    if (text == "all") return ExplainMode::All;
    if (text == "minimal") return ExplainMode::Minimal;
    if (text == "optimal") return ExplainMode::Optimal;
    if (text == "factual") return ExplainMode::Factual;
    throw std::invalid_argument("unknown mode '" + std::string(text) +
                                "' (expected all|minimal|optimal|factual)");
}

ordered_json explain_instance(const LabeledSample& s, RowIndex row, ExplainMode mode,
                              int factual_max_size) {
    const Schema& schema = s.schema();
    ordered_json out;
    out["row"] = row;
    out["instance"] = literals_json(schema, LiteralSet::of_instance(s.row(row)));
    out["label"] = schema.class_name(s.label(row));

    switch (mode) {
        case ExplainMode::All: {
            out["mode"] = "all";
            ordered_json arr = ordered_json::array();
            for (const CounterfactualExplanation& e : all_counterfactuals(s, row)) {
                arr.push_back(counterfactual_json(schema, e));
            }
            out["counterfactuals"] = std::move(arr);
            break;
        }
        case ExplainMode::Minimal: {
            out["mode"] = "minimal";
            const RankingResult ranking = rank_minimal(s, row);
            ordered_json arr = ordered_json::array();
            for (const RankedCounterfactual& rc : ranking.ranked) {
                ordered_json e = counterfactual_json(schema, rc.explanation);
                e["power"] = rc.power;
                e["rank"] = rc.rank;
                arr.push_back(std::move(e));
            }
            out["counterfactuals"] = std::move(arr);
            break;
        }
        case ExplainMode::Optimal: {
            out["mode"] = "optimal";
            const RankingResult ranking = rank_minimal(s, row);
            if (ranking.ranked.empty()) {
                out["counterfactual"] = nullptr;
                out["note"] = "no counterfactual exists: every sample row shares this label";
                break;
            }
            const RankedCounterfactual& best = ranking.ranked[0];
            ordered_json e = counterfactual_json(schema, best.explanation);
            e["power"] = best.power;
            out["counterfactual"] = std::move(e);
            out["unique_optimal"] = ranking.unique_optimal;
            out["power_gap"] = ranking.gap ? ordered_json(round4(ranking.gap->value()))
                                           : ordered_json(nullptr);
            out["metrics"] = metrics_json(metrics_report(s, row, best.explanation.witness));
            break;
        }
        case ExplainMode::Factual: {
            out["mode"] = "factual";
            ordered_json arr = ordered_json::array();
            for (const FactualExplanation& f : minimal_factuals(s, row, factual_max_size)) {
                arr.push_back(ordered_json{{"conditions", literals_json(schema, f.psi)},
                                           {"support", f.supporting_rows.size()}});
            }
            out["factuals"] = std::move(arr);
            out["max_size"] = factual_max_size;
            break;
        }
    }
    return out;
}

namespace {

std::string literal_line(const ordered_json& lits) {
    std::string s = "{";
    bool first = true;
    for (const auto& l : lits) {
        if (!first) s += ", ";
        first = false;
        s += l.at("feature").get<std::string>() + "=" + l.at("value").get<std::string>();
    }
    s += "}";
    return s;
}

std::string counterfactual_line(const ordered_json& e) {
    std::string s = literal_line(e.at("changes"));
    s += "  witness=" + e.at("witness").dump();
    s += " distance=" + e.at("distance").dump();
    s += " label=" + e.at("target_label").get<std::string>();
    if (e.contains("power")) s += " power=" + e.at("power").dump();
    return s;
}

}  // namespace

std::string render_text(const ordered_json& result) {
    std::string out = "row " + result.at("row").dump() + ": " +
                      literal_line(result.at("instance")) + " -> " +
                      result.at("label").get<std::string>() + "\n";
    const std::string mode = result.at("mode").get<std::string>();
    if (mode == "all" || mode == "minimal") {
        const auto& arr = result.at("counterfactuals");
        out += mode == "all" ? "counterfactual explanations:\n" : "minimal counterfactuals:\n";
        if (arr.empty()) out += "  (none: every sample row shares this label)\n";
        for (const auto& e : arr) out += "  " + counterfactual_line(e) + "\n";
    } else if (mode == "optimal") {
        if (result.at("counterfactual").is_null()) {
            out += result.at("note").get<std::string>() + "\n";
        } else {
            out += "optimal counterfactual:\n  " + counterfactual_line(result.at("counterfactual")) + "\n";
            out += "  unique_optimal=" + result.at("unique_optimal").dump();
            out += " power_gap=" + result.at("power_gap").dump() + "\n";
            const auto& m = result.at("metrics");
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "  typicality=%.4f capacity=%.4f universality=%.4f ball_size=%d\n",
                          m.at("typicality").get<double>(), m.at("capacity").get<double>(),
                          m.at("universality").get<double>(), m.at("ball_size").get<int>());
            out += buf;
        }
    } else if (mode == "factual") {
        out += "minimal factual explanations (size <= " + result.at("max_size").dump() + "):\n";
        if (result.at("factuals").empty()) {
            out += "  (none up to this size)\n";
        }
        for (const auto& f : result.at("factuals")) {
            out += "  " + literal_line(f.at("conditions")) + "  support=" +
                   f.at("support").dump() + "\n";
        }
    }
    return out;
}

}  // namespace cfex
