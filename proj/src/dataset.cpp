#include "cfex/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cfex/rng.hpp"

namespace cfex {

namespace {

struct RowKey {
    std::span<const ValueId> values;
};

struct RowKeyHash {
    std::size_t operator()(const RowKey& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (ValueId v : k.values) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct RowKeyEq {
    bool operator()(const RowKey& a, const RowKey& b) const {
        return std::equal(a.values.begin(), a.values.end(), b.values.begin(), b.values.end());
    }
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

LabeledSample::LabeledSample(std::shared_ptr<const Schema> schema,
                             std::vector<ValueId> flat_values,
                             std::vector<ClassId> labels,
                             std::string provenance,
                             ConflictPolicy policy)
    : schema_(std::move(schema)),
      values_(std::move(flat_values)),
      labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
    if (!schema_) throw std::invalid_argument("LabeledSample: null schema");
    const std::size_t n = static_cast<std::size_t>(schema_->feature_count());
    if (values_.size() != labels_.size() * n) {
        throw std::invalid_argument("LabeledSample: row/label count mismatch");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 0 || labels_[i] >= schema_->class_count()) {
            throw std::invalid_argument("LabeledSample: label id out of range at row " +
                                        std::to_string(i));
        }
        for (std::size_t f = 0; f < n; ++f) {
            const ValueId v = values_[i * n + f];
            if (v < 0 || v >= schema_->vocabulary_size(static_cast<int>(f))) {
                throw std::invalid_argument("LabeledSample: value id out of range at row " +
                                            std::to_string(i) + ", feature '" +
                                            schema_->feature_name(static_cast<int>(f)) + "'");
            }
        }
    }

    if (policy != ConflictPolicy::Allow) {
        // Identical feature values must carry identical labels; an instance
        // has one label.
        std::unordered_map<RowKey, std::pair<ClassId, std::size_t>, RowKeyHash, RowKeyEq> seen;
        std::vector<bool> drop(labels_.size(), false);
        bool any_dropped = false;
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            RowKey key{std::span<const ValueId>(values_.data() + i * n, n)};
            auto [it, inserted] = seen.emplace(key, std::make_pair(labels_[i], i));
            if (!inserted && it->second.first != labels_[i]) {
                if (policy == ConflictPolicy::Reject) {
                    throw std::invalid_argument(
                        "conflicting labels for duplicate rows " + std::to_string(it->second.second) +
                        " and " + std::to_string(i) + " (use keep-first dedup to override)");
                }
                drop[i] = true;
                any_dropped = true;
            }
        }
        if (any_dropped) {
            std::vector<ValueId> kept_values;
            std::vector<ClassId> kept_labels;
            kept_values.reserve(values_.size());
            kept_labels.reserve(labels_.size());
            for (std::size_t i = 0; i < labels_.size(); ++i) {
                if (drop[i]) continue;
                kept_values.insert(kept_values.end(), values_.begin() + static_cast<std::ptrdiff_t>(i * n),
                                   values_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
                kept_labels.push_back(labels_[i]);
            }
            values_ = std::move(kept_values);
            labels_ = std::move(kept_labels);
        }
    }
}

void LabeledSample::check_row(RowIndex i) const {
    if (i >= row_count()) {
        throw std::out_of_range("row index " + std::to_string(i) + " out of range (rows: " +
                                std::to_string(row_count()) + ")");
    }
}

RowIndex LabeledSample::class_size(ClassId c) const {
    RowIndex count = 0;
    for (ClassId l : labels_) count += l == c;
    return count;
}

LabeledSample LabeledSample::with_row(const Instance& values, ClassId label) const {
    if (static_cast<int>(values.size()) != feature_count()) {
        throw std::invalid_argument("with_row: wrong feature count");
    }
    std::vector<ValueId> flat = values_;
    flat.insert(flat.end(), values.begin(), values.end());
    std::vector<ClassId> labels = labels_;
    labels.push_back(label);
    return LabeledSample(schema_, std::move(flat), std::move(labels), provenance_ + "+row",
                         ConflictPolicy::Reject);
}

LabeledSample load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("'" + path + "': missing header row");
    }
    const std::vector<std::string> header = split_csv_line(line);
    if (header.empty()) {
        throw std::runtime_error("'" + path + "': empty header row");
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i].empty()) {
            throw std::runtime_error("'" + path + "': empty header name in column " +
                                     std::to_string(i + 1));
        }
        for (std::size_t j = i + 1; j < header.size(); ++j) {
            if (header[i] == header[j]) {
                throw std::runtime_error("'" + path + "': duplicate header name '" + header[i] + "'");
            }
        }
    }

    std::size_t label_col;
    if (options.label_column.empty()) {
        label_col = header.size() - 1;
    } else {
        auto it = std::find(header.begin(), header.end(), options.label_column);
        if (it == header.end()) {
            throw std::runtime_error("'" + path + "': label column '" + options.label_column +
                                     "' not in header");
        }
        label_col = static_cast<std::size_t>(it - header.begin());
    }
    if (header.size() < 2) {
        throw std::runtime_error("'" + path + "': need at least one feature column besides the label");
    }

    std::vector<std::string> feature_names;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i != label_col) feature_names.push_back(header[i]);
    }

    // Intern values in first-occurrence order so ids are reproducible.
    std::vector<std::vector<std::string>> vocab(feature_names.size());
    std::vector<std::unordered_map<std::string, ValueId>> vocab_lookup(feature_names.size());
    std::vector<std::string> classes;
    std::unordered_map<std::string, ClassId> class_lookup;
    std::vector<ValueId> flat;
    std::vector<ClassId> labels;

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error("'" + path + "' line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(header.size()) + " cells, found " +
                                     std::to_string(cells.size()));
        }
        std::size_t fi = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].empty()) {
                throw std::runtime_error("'" + path + "' line " + std::to_string(line_no) +
                                         ": empty cell in column '" + header[i] +
                                         "' (missing values are rejected)");
            }
            if (i == label_col) {
                auto [it, inserted] = class_lookup.emplace(cells[i], static_cast<ClassId>(classes.size()));
                if (inserted) classes.push_back(cells[i]);
                labels.push_back(it->second);
            } else {
                auto [it, inserted] =
                    vocab_lookup[fi].emplace(cells[i], static_cast<ValueId>(vocab[fi].size()));
                if (inserted) vocab[fi].push_back(cells[i]);
                flat.push_back(it->second);
                ++fi;
            }
        }
    }
    if (labels.empty()) {
        throw std::runtime_error("'" + path + "': no data rows");
    }

    auto schema = std::make_shared<const Schema>(std::move(feature_names), std::move(vocab),
                                                 std::move(classes), header[label_col]);
    return LabeledSample(std::move(schema), std::move(flat), std::move(labels), path, options.policy);
}

void export_csv(const LabeledSample& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    const Schema& schema = s.schema();
    for (int f = 0; f < schema.feature_count(); ++f) {
        out << schema.feature_name(f) << ',';
    }
    out << schema.label_name() << '\n';
    for (RowIndex i = 0; i < s.row_count(); ++i) {
        const auto row = s.row(i);
        for (int f = 0; f < schema.feature_count(); ++f) {
            out << schema.value_name(f, row[f]) << ',';
        }
        out << schema.class_name(s.label(i)) << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

LabeledSample sample(const LabeledSample& s, std::size_t size, std::uint64_t seed) {
    const std::size_t total = s.row_count();
    if (size >= total) {
        return s;
    }

    // Partial Fisher-Yates: the first `size` slots end up a uniform draw
    // without replacement.
    std::vector<RowIndex> indices(total);
    std::iota(indices.begin(), indices.end(), RowIndex{0});
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded(gen, total - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(size);
    std::sort(indices.begin(), indices.end());

    const std::size_t n = static_cast<std::size_t>(s.feature_count());
    std::vector<ValueId> flat;
    flat.reserve(size * n);
    std::vector<ClassId> labels;
    labels.reserve(size);
    for (RowIndex idx : indices) {
        const auto row = s.row(idx);
        flat.insert(flat.end(), row.begin(), row.end());
        labels.push_back(s.label(idx));
    }
    const std::string provenance = s.provenance() + "#sample(" + std::to_string(size) + "," +
                                   std::to_string(seed) + ")";
    return LabeledSample(s.schema_ptr(), std::move(flat), std::move(labels), provenance,
                         ConflictPolicy::Allow);
}

std::pair<LabeledSample, FeatureSet> generate_synthetic(const SyntheticSpec& spec) {
    if (spec.dim < 1 || spec.dim > FeatureSet::kMaxFeatures) {
        throw std::invalid_argument("generate_synthetic: dim out of range");
    }
    if (spec.values_per_feature < 2) {
        throw std::invalid_argument("generate_synthetic: need at least two values per feature");
    }
    if (spec.relevant.empty()) {
        throw std::invalid_argument("generate_synthetic: empty relevant feature set");
    }
    for (int f : spec.relevant) {
        if (f >= spec.dim) {
            throw std::invalid_argument("generate_synthetic: relevant feature beyond dim");
        }
    }
    if (!spec.full_grid && spec.rows == 0) {
        throw std::invalid_argument("generate_synthetic: zero rows");
    }

    std::vector<std::string> feature_names;
    std::vector<std::vector<std::string>> vocab(spec.dim);
    for (int f = 0; f < spec.dim; ++f) {
        feature_names.push_back("f" + std::to_string(f + 1));
        for (int v = 0; v < spec.values_per_feature; ++v) {
            vocab[f].push_back(std::to_string(v));
        }
    }
    std::vector<std::string> classes = {"0", "1", "2"};
    auto schema = std::make_shared<const Schema>(std::move(feature_names), std::move(vocab),
                                                 std::move(classes), "class");

    const auto label_of = [&](std::span<const ValueId> row) {
        long sum = 0;
        for (int f : spec.relevant) sum += row[f];
        return static_cast<ClassId>(sum % 3);
    };

    const std::size_t n = static_cast<std::size_t>(spec.dim);
    std::vector<ValueId> flat;
    std::vector<ClassId> labels;
    std::string provenance;

    if (spec.full_grid) {
        double cells = 1.0;
        for (int f = 0; f < spec.dim; ++f) cells *= spec.values_per_feature;
        if (cells > 1e6) {
            throw std::invalid_argument("generate_synthetic: full grid larger than 1e6 rows");
        }
        const std::size_t rows = static_cast<std::size_t>(cells);
        flat.reserve(rows * n);
        labels.reserve(rows);
        std::vector<ValueId> row(n, 0);
        for (std::size_t i = 0; i < rows; ++i) {
            flat.insert(flat.end(), row.begin(), row.end());
            labels.push_back(label_of(row));
            for (std::size_t f = n; f-- > 0;) {  // odometer increment, last feature fastest
                if (++row[f] < spec.values_per_feature) break;
                row[f] = 0;
            }
        }
        provenance = "synthetic(grid,dim=" + std::to_string(spec.dim) + ",values=" +
                     std::to_string(spec.values_per_feature) + ",relevant=" +
                     std::to_string(spec.relevant.size()) + ")";
    } else {
        flat.reserve(spec.rows * n);
        labels.reserve(spec.rows);
        std::mt19937_64 gen(spec.seed);
        std::vector<ValueId> row(n);
        for (std::size_t i = 0; i < spec.rows; ++i) {
            for (std::size_t f = 0; f < n; ++f) {
                row[f] = static_cast<ValueId>(bounded(gen, static_cast<std::uint64_t>(spec.values_per_feature)));
            }
            flat.insert(flat.end(), row.begin(), row.end());
            labels.push_back(label_of(row));
        }
        provenance = "synthetic(dim=" + std::to_string(spec.dim) + ",values=" +
                     std::to_string(spec.values_per_feature) + ",relevant=" +
                     std::to_string(spec.relevant.size()) + ",rows=" + std::to_string(spec.rows) +
                     ",seed=" + std::to_string(spec.seed) + ")";
    }

    // Labels are a function of the row, so duplicates can never conflict.
    LabeledSample sample(std::move(schema), std::move(flat), std::move(labels), provenance,
                         ConflictPolicy::Allow);
    return {std::move(sample), spec.relevant};
}

void export_synthetic(const LabeledSample& sample, FeatureSet relevant, const std::string& path) {
    export_csv(sample, path);
    std::ofstream side(path + ".relevant.txt");
    if (!side) {
        throw std::runtime_error("cannot write '" + path + ".relevant.txt'");
    }
    for (int f : relevant) {
        side << sample.schema().feature_name(f) << '\n';
    }
}

}  // namespace cfex
