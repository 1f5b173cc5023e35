#pragma once

#include <map>
#include <string>
#include <vector>

#include "sumboost/dataset.hpp"
#include "sumboost/discretize.hpp"
#include "sumboost/llm.hpp"
#include "sumboost/prompts.hpp"

namespace sumboost {

/// One record rendered as text, features and label separately addressable so
/// the same object serves as a labeled training example and as a query.
struct DataDescription {
    std::string feature_text;
    std::string label_text;
    std::string separator = kSeparator;
    int row_index = -1;
    int word_count = 0;

    std::string joined() const { return render_example(feature_text, label_text); }
};

/// Hand-written description template. The "###" marker splits the feature
/// part from the label part; placeholders are {column_name}.
struct PromptTemplate {
    std::string template_text;
    std::string summary_directive;
    std::string inference_directive;
    std::vector<std::string> classes;
};

/// The fitted per-column encoders used to textualize continuous cells.
struct ColumnEncoders {
    Encoding encoding;
    std::map<std::string, BinBoundaries> boundaries;  // continuous columns only
};

/// Fits encoders for every continuous column on the training rows only.
ColumnEncoders fit_encoders(const TabularDataset& ds, const std::vector<int>& train_idx,
                            const Encoding& enc);

/// (display name, value text) pairs for the feature columns of one row, with
/// continuous cells replaced by their encoded level text. The target column
/// is never included.
AttributeList encode_row(const TabularDataset& ds, int row, const ColumnEncoders& encoders);

/// Renders the label of one row from the prompts config label template.
std::string render_label(const TabularDataset& ds, int row, const PromptsConfig& prompts);

struct ConvertConfig {
    int resample_cap = 8;
    double temperature = 0.8;
    int max_tokens = 200;
    int min_words = 20;
    int max_words = 80;
};

/// LLM-generated description of one record: resamples (bumping the cache
/// attempt) until the completion lands in the word-count window.
DataDescription describe_llm(const TabularDataset& ds, int row, const ColumnEncoders& encoders,
                             const PromptsConfig& prompts, LlmClient& client,
                             const ConvertConfig& cfg = {});

/// Deterministic template fill; `values` maps column name to (encoded) text.
DataDescription describe_template(const std::map<std::string, std::string>& values,
                                  const PromptTemplate& tmpl);

/// Replaces attribute names in the feature part with f1..fd, keeping the
/// placeholders (and therefore the fill behavior) intact. Idempotent.
PromptTemplate mask_attribute_names(const PromptTemplate& tmpl);

// JSONL persistence: one {row_index, feature_text, label_text} object a line.
void save_descriptions(const std::string& path, const std::vector<DataDescription>& descs);
std::vector<DataDescription> load_descriptions(const std::string& path);

}  // namespace sumboost
