#include "sumboost/textualize.hpp"

#include <fstream>

#include <json.hpp>

#include "sumboost/errors.hpp"
#include "sumboost/util.hpp"

namespace sumboost {

ColumnEncoders fit_encoders(const TabularDataset& ds, const std::vector<int>& train_idx,
                            const Encoding& enc) {
    ColumnEncoders out;
    out.encoding = enc;
    for (int c : ds.feature_columns()) {
        if (ds.schema[c].kind != ColumnKind::continuous) continue;
        out.boundaries[ds.schema[c].name] = fit(ds.numeric_column(c, train_idx), enc,
                                                ds.schema[c].name);
    }
    return out;
}

AttributeList encode_row(const TabularDataset& ds, int row, const ColumnEncoders& encoders) {
    AttributeList attrs;
    for (int c : ds.feature_columns()) {
        const ColumnSpec& col = ds.schema[c];
        std::string value = ds.rows[row][c];
        if (col.kind == ColumnKind::continuous) {
            const auto it = encoders.boundaries.find(col.name);
            if (it == encoders.boundaries.end())
                throw NotFitted("no fitted boundaries for column " + col.name);
            value = encode(ds.numeric_column(c, {row}).front(), it->second, encoders.encoding);
        }
        attrs.emplace_back(col.display_name(), value);
    }
    return attrs;
}

std::string render_label(const TabularDataset& ds, int row, const PromptsConfig& prompts) {
    std::string text = prompts.label_template;
    const std::string target_name = ds.schema[ds.target_col].display_name();
    const std::string cls = ds.classes[ds.labels[row]];
    auto replace_all = [&](const std::string& key, const std::string& value) {
        std::size_t pos = 0;
        while ((pos = text.find(key, pos)) != std::string::npos) {
            text.replace(pos, key.size(), value);
            pos += value.size();
        }
    };
    replace_all("{target}", target_name);
    replace_all("{class}", cls);
    return text;
}

DataDescription describe_llm(const TabularDataset& ds, int row, const ColumnEncoders& encoders,
                             const PromptsConfig& prompts, LlmClient& client,
                             const ConvertConfig& cfg) {
    const std::string prompt = build_conversion_prompt(prompts.metadata,
                                                       encode_row(ds, row, encoders));
    for (int attempt = 0; attempt < cfg.resample_cap; ++attempt) {
        CompletionRequest req;
        req.prompt = prompt;
        req.temperature = cfg.temperature;
        req.max_tokens = cfg.max_tokens;
        req.attempt = attempt;
        const CompletionResult res = client.complete(req);
        const std::string text = trim(res.text);
        const int words = word_count(text);
        if (words >= cfg.min_words && words <= cfg.max_words) {
            DataDescription desc;
            desc.feature_text = text;
            desc.label_text = render_label(ds, row, prompts);
            desc.row_index = row;
            desc.word_count = words;
            return desc;
        }
    }
    throw LengthExhausted("no description in the " + std::to_string(cfg.min_words) + "-" +
                          std::to_string(cfg.max_words) + " word window after " +
                          std::to_string(cfg.resample_cap) + " attempts (row " +
                          std::to_string(row) + ")");
}

namespace {

/// Placeholders as they appear in `text`, in order, without duplicates.
std::vector<std::string> placeholders_in(const std::string& text) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while ((pos = text.find('{', pos)) != std::string::npos) {
        const std::size_t end = text.find('}', pos);
        if (end == std::string::npos) break;
        const std::string name = text.substr(pos + 1, end - pos - 1);
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
        pos = end + 1;
    }
    return names;
}

std::string fill_placeholders(const std::string& text,
                              const std::map<std::string, std::string>& values) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t open = text.find('{', pos);
        if (open == std::string::npos) {
            out += text.substr(pos);
            break;
        }
        const std::size_t close = text.find('}', open);
        if (close == std::string::npos) {
            out += text.substr(pos);
            break;
        }
        out += text.substr(pos, open - pos);
        const std::string name = text.substr(open + 1, close - open - 1);
        const auto it = values.find(name);
        if (it == values.end()) throw MissingPlaceholder("no value for placeholder {" + name + "}");
        out += it->second;
        pos = close + 1;
    }
    return out;
}

}  // namespace

DataDescription describe_template(const std::map<std::string, std::string>& values,
                                  const PromptTemplate& tmpl) {
    const std::string filled = fill_placeholders(tmpl.template_text, values);
    DataDescription desc;
    const std::size_t sep = filled.find(kSeparator);
    if (sep == std::string::npos) {
        desc.feature_text = trim(filled);
    } else {
        desc.feature_text = trim(filled.substr(0, sep));
        desc.label_text = trim(filled.substr(sep + std::string(kSeparator).size()));
    }
    desc.word_count = word_count(desc.feature_text);
    return desc;
}

PromptTemplate mask_attribute_names(const PromptTemplate& tmpl) {
    const std::size_t sep = tmpl.template_text.find(kSeparator);
    const std::string feature_part =
        sep == std::string::npos ? tmpl.template_text : tmpl.template_text.substr(0, sep);
    const std::string label_part =
        sep == std::string::npos ? std::string() : tmpl.template_text.substr(sep);

    const auto names = placeholders_in(feature_part);
    if (names.empty()) return tmpl;

    std::string masked = "This example has features ";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) masked += ", ";
        masked += "f" + std::to_string(i + 1) + " = {" + names[i] + "}";
    }
    masked += ".";

    PromptTemplate out = tmpl;
    out.template_text = label_part.empty() ? masked : masked + " " + label_part;
    return out;
}

void save_descriptions(const std::string& path, const std::vector<DataDescription>& descs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write descriptions to " + path);
    for (const auto& d : descs) {
        nlohmann::json line{{"row_index", d.row_index},
                            {"feature_text", d.feature_text},
                            {"label_text", d.label_text}};
        out << line.dump() << '\n';
    }
}

std::vector<DataDescription> load_descriptions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open descriptions file: " + path);
    std::vector<DataDescription> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            const nlohmann::json doc = nlohmann::json::parse(line);
            DataDescription d;
            d.row_index = doc.at("row_index").get<int>();
            d.feature_text = doc.at("feature_text").get<std::string>();
            d.label_text = doc.at("label_text").get<std::string>();
            d.word_count = word_count(d.feature_text);
            out.push_back(std::move(d));
        } catch (const nlohmann::json::exception& e) {
            throw DataError("bad description line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace sumboost
