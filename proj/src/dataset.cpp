#include "sumboost/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "sumboost/errors.hpp"
#include "sumboost/util.hpp"

namespace sumboost {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Minimal CSV reader: quoted fields, embedded commas/newlines, doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;

    auto end_field = [&] {
        record.push_back(field);
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
        any = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            any = true;
            continue;
        }
        switch (c) {
            case '"': quoted = true; any = true; break;
            case ',': end_field(); any = true; break;
            case '\r': break;
            case '\n':
                if (any || !field.empty() || !record.empty()) end_record();
                break;
            default: field += c; any = true; break;
        }
    }
    if (any || !field.empty() || !record.empty()) end_record();
    return records;
}

bool parse_finite_number(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stod(t, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == t.size() && std::isfinite(out);
}

/// Largest-remainder apportionment of `total` over quotas proportional to
/// counts[k] (capped by counts[k] itself). Deterministic: ties go to the
/// lower class index.
std::vector<int> apportion(const std::vector<int>& counts, int total) {
    const std::size_t k = counts.size();
    const long long n = std::accumulate(counts.begin(), counts.end(), 0LL);
    std::vector<int> got(k, 0);
    std::vector<double> frac(k, 0.0);
    int assigned = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double exact = n == 0 ? 0.0 : static_cast<double>(total) * counts[i] / static_cast<double>(n);
        got[i] = static_cast<int>(std::floor(exact));
        frac[i] = exact - got[i];
        assigned += got[i];
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t j = 0; assigned < total && j < k; ++j) {
        const std::size_t i = order[j];
        if (got[i] < counts[i]) {
            ++got[i];
            ++assigned;
        }
    }
    // Quotas can exhaust a class before `total` is met; sweep up the rest.
    for (std::size_t i = 0; assigned < total && i < k; ++i) {
        while (got[i] < counts[i] && assigned < total) {
            ++got[i];
            ++assigned;
        }
    }
    return got;
}

}  // namespace

std::vector<int> TabularDataset::feature_columns() const {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(schema.size()); ++c)
        if (c != target_col) out.push_back(c);
    return out;
}

std::vector<double> TabularDataset::numeric_column(int col, const std::vector<int>& idx) const {
    std::vector<double> out;
    auto push = [&](int r) {
        double v = 0.0;
        if (!parse_finite_number(rows[r][col], v))
            throw DataError("non-numeric cell in continuous column " + schema[col].name);
        out.push_back(v);
    };
    if (idx.empty())
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) push(r);
    else
        for (int r : idx) push(r);
    return out;
}

std::string TabularDataset::schema_fingerprint() const {
    Fnv64 h;
    for (const auto& col : schema) {
        h.update(col.name);
        h.update(col.kind == ColumnKind::continuous ? "c" : "d");
    }
    for (const auto& c : classes) h.update(c);
    return hex64(h.digest());
}

TabularDataset load_dataset(const std::string& csv_path, const std::string& meta_path) {
    return load_dataset_text(read_file(csv_path), read_file(meta_path));
}

TabularDataset load_dataset_text(const std::string& csv_text, const std::string& meta_json) {
    nlohmann::json meta;
    try {
        meta = nlohmann::json::parse(meta_json);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid metadata JSON: ") + e.what());
    }

    TabularDataset ds;
    if (!meta.contains("target")) throw MissingTarget("metadata declares no target column");
    ds.target = meta.at("target").get<std::string>();
    if (!meta.contains("classes") || !meta["classes"].is_array())
        throw DataError("metadata must declare a class list");
    for (const auto& c : meta["classes"]) ds.classes.push_back(c.get<std::string>());
    if (ds.classes.size() < 2)
        throw TooFewClasses("need at least two target classes, got " +
                            std::to_string(ds.classes.size()));
    ds.metadata_text = meta.value("metadata_text", std::string());

    const auto records = parse_csv(csv_text);
    if (records.empty()) throw DataError("CSV has no header row");
    const auto& header = records.front();

    struct ColumnMeta {
        bool force_discrete = false;
        bool force_continuous = false;
        std::string description;
    };
    std::vector<ColumnMeta> col_meta(header.size());
    if (meta.contains("columns")) {
        for (const auto& cm : meta["columns"]) {
            const std::string name = cm.at("name").get<std::string>();
            auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end()) throw DataError("metadata mentions unknown column: " + name);
            auto& slot = col_meta[it - header.begin()];
            if (cm.contains("kind")) {
                const std::string kind = cm["kind"].get<std::string>();
                if (kind == "discrete")
                    slot.force_discrete = true;
                else if (kind == "continuous")
                    slot.force_continuous = true;
                else
                    throw DataError("unknown column kind: " + kind);
            }
            slot.description = cm.value("description", std::string());
        }
    }

    ds.target_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == ds.target) ds.target_col = static_cast<int>(c);
        for (std::size_t c2 = c + 1; c2 < header.size(); ++c2)
            if (header[c] == header[c2]) throw DataError("duplicate column name: " + header[c]);
    }
    if (ds.target_col < 0) throw MissingTarget("target column not in CSV header: " + ds.target);

    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != header.size())
            throw RaggedRow("row " + std::to_string(r) + " has " +
                            std::to_string(records[r].size()) + " cells, expected " +
                            std::to_string(header.size()));
        ds.rows.push_back(records[r]);
    }

    for (std::size_t r = 0; r < ds.rows.size(); ++r)
        for (std::size_t c = 0; c < header.size(); ++c)
            if (trim(ds.rows[r][c]).empty())
                throw MissingValue("empty cell at row " + std::to_string(r) + ", column " +
                                   header[c]);

    // Column typing: continuous iff every cell parses as a finite number and
    // the metadata does not override to discrete.
    for (std::size_t c = 0; c < header.size(); ++c) {
        ColumnSpec spec;
        spec.name = header[c];
        spec.description = col_meta[c].description;
        bool all_numeric = !ds.rows.empty();
        double tmp = 0.0;
        for (const auto& row : ds.rows)
            if (!parse_finite_number(row[c], tmp)) {
                all_numeric = false;
                break;
            }
        const bool continuous =
            static_cast<int>(c) != ds.target_col &&
            ((all_numeric && !col_meta[c].force_discrete) || col_meta[c].force_continuous);
        if (col_meta[c].force_continuous && !all_numeric)
            throw DataError("column declared continuous has non-numeric cells: " + spec.name);
        spec.kind = continuous ? ColumnKind::continuous : ColumnKind::discrete;
        ds.schema.push_back(spec);
    }

    std::vector<long long> counts(ds.classes.size(), 0);
    for (const auto& row : ds.rows) {
        const std::string& cell = row[ds.target_col];
        auto it = std::find(ds.classes.begin(), ds.classes.end(), trim(cell));
        if (it == ds.classes.end()) throw UnknownClass("target value not in class list: " + cell);
        ds.labels.push_back(static_cast<int>(it - ds.classes.begin()));
        ++counts[ds.labels.back()];
    }

    ds.class_ratios.resize(ds.classes.size(), 0.0);
    if (!ds.rows.empty())
        for (std::size_t k = 0; k < counts.size(); ++k)
            ds.class_ratios[k] = static_cast<double>(counts[k]) / static_cast<double>(ds.rows.size());
    return ds;
}

SplitAssignment split(const TabularDataset& ds, std::uint64_t seed) {
    const int n = static_cast<int>(ds.row_count());
    if (n < 10) throw TooFewRows("split requires at least 10 rows, got " + std::to_string(n));

    const std::size_t k = ds.class_count();
    std::vector<std::vector<int>> per_class(k);
    for (int r = 0; r < n; ++r) per_class[ds.labels[r]].push_back(r);

    std::vector<int> class_counts(k);
    for (std::size_t i = 0; i < k; ++i) class_counts[i] = static_cast<int>(per_class[i].size());

    const int train_total = n / 2;
    const int val_total = n / 10;
    const auto train_k = apportion(class_counts, train_total);
    std::vector<int> remaining(k);
    for (std::size_t i = 0; i < k; ++i) remaining[i] = class_counts[i] - train_k[i];
    const auto val_k = apportion(remaining, val_total);

    SplitAssignment out;
    out.seed = seed;
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(derive_seed(seed, "split", i));
        auto idx = per_class[i];
        rng.shuffle(idx);
        int pos = 0;
        for (int j = 0; j < train_k[i]; ++j) out.train_idx.push_back(idx[pos++]);
        for (int j = 0; j < val_k[i]; ++j) out.val_idx.push_back(idx[pos++]);
        while (pos < static_cast<int>(idx.size())) out.test_idx.push_back(idx[pos++]);
    }
    std::sort(out.train_idx.begin(), out.train_idx.end());
    std::sort(out.val_idx.begin(), out.val_idx.end());
    std::sort(out.test_idx.begin(), out.test_idx.end());
    return out;
}

}  // namespace sumboost
