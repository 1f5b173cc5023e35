#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sumboost {

enum class ColumnKind { continuous, discrete };

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::discrete;
    std::string description;  // optional human-readable meaning; empty if absent

    /// Text used when rendering this attribute in prompts.
    const std::string& display_name() const { return description.empty() ? name : description; }
};

/// Immutable after load; safe to share across threads.
struct TabularDataset {
    std::vector<ColumnSpec> schema;
    std::vector<std::vector<std::string>> rows;  // raw cells, rows x columns
    std::string target;                          // target column name
    int target_col = -1;                         // index of target in schema
    std::vector<std::string> classes;            // ordered class labels, K >= 2
    std::string metadata_text;
    std::vector<double> class_ratios;            // per-class fraction, sums to 1
    std::vector<int> labels;                     // per-row class index

    std::size_t row_count() const { return rows.size(); }
    std::size_t class_count() const { return classes.size(); }

    /// Indices of non-target columns, in schema order.
    std::vector<int> feature_columns() const;

    /// Parsed values of a continuous column over the given row indices
    /// (all rows when idx is empty).
    std::vector<double> numeric_column(int col, const std::vector<int>& idx = {}) const;

    /// Stable hash of column names/kinds and the class list.
    std::string schema_fingerprint() const;
};

struct SplitAssignment {
    std::vector<int> train_idx;
    std::vector<int> val_idx;
    std::vector<int> test_idx;
    std::uint64_t seed = 0;
};

/// Loads a CSV (header row required) plus a JSON metadata document with
/// fields {target, classes, metadata_text, columns:[{name, kind?, description?}]}.
/// A column is continuous iff every cell parses as a finite number and the
/// metadata does not declare it discrete. Missing (empty) cells are rejected.
TabularDataset load_dataset(const std::string& csv_path, const std::string& meta_path);

/// Same loader but from in-memory text; the file-path overload delegates here.
TabularDataset load_dataset_text(const std::string& csv_text, const std::string& meta_json);

/// Deterministic stratified 50/10/40 split. Train gets a largest-remainder
/// apportionment of floor(0.5 N) over classes, validation of floor(0.1 N)
/// next, test takes the rest; per-class counts stay within one of the exact
/// proportion. Requires N >= 10.
SplitAssignment split(const TabularDataset& ds, std::uint64_t seed);

}  // namespace sumboost
