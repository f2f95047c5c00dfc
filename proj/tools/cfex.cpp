#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfex/dataset.hpp"
#include "cfex/experiments.hpp"

namespace {

struct DataArgs {
    std::string path;
    std::string label;
    bool keep_first = false;

    [[nodiscard]] cfex::LabeledSample load() const {
        cfex::CsvOptions opts;
        opts.label_column = label;
        opts.policy = keep_first ? cfex::ConflictPolicy::KeepFirst : cfex::ConflictPolicy::Reject;
        return cfex::load_csv(path, opts);
    }
};

void add_data_options(CLI::App* cmd, DataArgs& args) {
    cmd->add_option("--data", args.path, "input CSV (header row required)")->required();
    cmd->add_option("--label", args.label, "label column name (default: last column)");
    cmd->add_flag("--dedupe-keep-first", args.keep_first,
                  "on duplicate rows with conflicting labels, keep the first instead of failing");
}

void add_experiment_options(CLI::App* cmd, cfex::ExperimentConfig& cfg, std::string& out) {
    cmd->add_option("--sample-size", cfg.sample_size, "rows drawn per repeat (default 1000)");
    cmd->add_option("--repeats", cfg.repeats, "number of repeats (default 10)");
    cmd->add_option("--seed", cfg.seed, "base seed; repeat r uses seed + r");
    cmd->add_option("--out", out, "output stem: writes <out>.csv and <out>.json");
}

void emit(const cfex::ExperimentReport& report, const std::string& out) {
    std::cout << report.experiment << " on " << report.dataset << "\n"
              << "aggregates: " << report.aggregates.dump(2) << "\n";
    if (!out.empty()) {
        report.write(out);
        std::cout << "wrote " << out << ".csv and " << out << ".json\n";
    }
}

cfex::FeatureSet first_features(int count) {
    return cfex::FeatureSet::full(count);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counterfactual and factual explanations over labeled categorical data"};
    app.require_subcommand(1);

    // explain
    auto* explain_cmd = app.add_subcommand("explain", "explain one sample row");
    DataArgs explain_data;
    add_data_options(explain_cmd, explain_data);
    std::uint32_t row = 0;
    std::string mode_text = "optimal";
    int max_size = 3;
    std::string explain_out;
    explain_cmd->add_option("--row", row, "0-based row index of the query instance")->required();
    explain_cmd->add_option("--mode", mode_text, "all|minimal|optimal|factual (default optimal)");
    explain_cmd->add_option("--max-size", max_size, "size bound for factual search (default 3)");
    explain_cmd->add_option("--out", explain_out, "write the JSON result to this file");

    // distribution / uniqueness / gap / metrics share the experiment options
    struct ExperimentCmd {
        CLI::App* cmd;
        DataArgs data;
        cfex::ExperimentConfig cfg;
        std::string out;
        cfex::ExperimentReport (*run)(const cfex::LabeledSample&, const cfex::ExperimentConfig&);
    };
    std::vector<ExperimentCmd> experiment_cmds;
    experiment_cmds.reserve(4);
    const auto add_experiment = [&](const char* name, const char* help, auto runner) {
        experiment_cmds.push_back({app.add_subcommand(name, help), {}, {}, "", runner});
        ExperimentCmd& e = experiment_cmds.back();
        add_data_options(e.cmd, e.data);
        add_experiment_options(e.cmd, e.cfg, e.out);
    };
    add_experiment("distribution", "counterfactual counts per Hamming distance", cfex::run_distribution);
    add_experiment("uniqueness", "proportion of instances with a unique optimal counterfactual",
                   cfex::run_uniqueness);
    add_experiment("gap", "mean relative power gap between the two top-ranked counterfactuals",
                   cfex::run_gap);
    add_experiment("metrics", "typicality/capacity/universality of optimal vs random counterfactuals",
                   cfex::run_metric_comparison);

    // relevant: synthetic relevant-feature ratio sweep
    auto* relevant_cmd = app.add_subcommand(
        "relevant", "mean share of relevant features in optimal counterfactuals, by sample size");
    cfex::SyntheticSpec relevant_spec;
    int relevant_count = 2;
    cfex::ExperimentConfig relevant_cfg;
    std::string relevant_out;
    relevant_cmd->add_option("--relevant-count", relevant_count,
                             "number of label-relevant features (default 2)");
    relevant_cmd->add_option("--dim", relevant_spec.dim, "number of features (default 20)");
    relevant_cmd->add_option("--values", relevant_spec.values_per_feature,
                             "values per feature (default 3)");
    relevant_cmd->add_option("--sizes", relevant_cfg.sizes, "sample sizes to sweep")
        ->delimiter(',');
    add_experiment_options(relevant_cmd, relevant_cfg, relevant_out);

    // synth: generate and export a synthetic dataset
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset with known relevant features");
    cfex::SyntheticSpec synth_spec;
    int synth_relevant = 2;
    std::string synth_out;
    synth_cmd->add_option("--dim", synth_spec.dim, "number of features (default 20)");
    synth_cmd->add_option("--values", synth_spec.values_per_feature, "values per feature (default 3)");
    synth_cmd->add_option("--relevant-count", synth_relevant,
                          "number of label-relevant features (default 2)");
    synth_cmd->add_option("--rows", synth_spec.rows, "rows to draw (default 1000)");
    synth_cmd->add_option("--seed", synth_spec.seed, "generator seed");
    synth_cmd->add_flag("--full-grid", synth_spec.full_grid,
                        "enumerate the whole value grid instead of sampling rows");
    synth_cmd->add_option("--out", synth_out, "output CSV path (sidecar <out>.relevant.txt)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (explain_cmd->parsed()) {
            const cfex::LabeledSample s = explain_data.load();
            const cfex::ExplainMode mode = cfex::parse_explain_mode(mode_text);
            const auto result = cfex::explain_instance(s, row, mode, max_size);
            std::cout << cfex::render_text(result);
            if (!explain_out.empty()) {
                std::ofstream out(explain_out);
                if (!out) throw std::runtime_error("cannot write '" + explain_out + "'");
                out << result.dump(2) << '\n';
                std::cout << "wrote " << explain_out << "\n";
            }
            return 0;
        }
        for (const ExperimentCmd& e : experiment_cmds) {
            if (e.cmd->parsed()) {
                emit(e.run(e.data.load(), e.cfg), e.out);
                return 0;
            }
        }
        if (relevant_cmd->parsed()) {
            relevant_spec.relevant = first_features(relevant_count);
            emit(cfex::run_relevant_ratio(relevant_spec, relevant_cfg), relevant_out);
            return 0;
        }
        if (synth_cmd->parsed()) {
            synth_spec.relevant = first_features(synth_relevant);
            const auto [sample, relevant] = cfex::generate_synthetic(synth_spec);
            cfex::export_synthetic(sample, relevant, synth_out);
            std::cout << "wrote " << synth_out << " (" << sample.row_count() << " rows) and "
                      << synth_out << ".relevant.txt\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
