#include "sumboost/prompts.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sumboost/errors.hpp"
#include "sumboost/util.hpp"

namespace sumboost {

PromptsConfig prompts_from_json_text(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid prompts JSON: ") + e.what());
    }
    PromptsConfig cfg;
    cfg.metadata = doc.value("metadata", std::string());
    if (doc.contains("classes"))
        for (const auto& c : doc["classes"]) cfg.classes.push_back(c.get<std::string>());
    cfg.summary_directive = doc.value("summary_directive", cfg.summary_directive);
    cfg.inference_directive = doc.value("inference_directive", std::string());
    cfg.label_template = doc.value("label_template", cfg.label_template);
    cfg.template_text = doc.value("template", std::string());
    return cfg;
}

PromptsConfig load_prompts(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open prompts config: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return prompts_from_json_text(ss.str());
}

std::string ensure_classes_named(const std::string& directive,
                                 const std::vector<std::string>& classes) {
    const std::string haystack = to_lower(directive);
    bool all_named = true;
    for (const auto& c : classes)
        if (haystack.find(to_lower(c)) == std::string::npos) {
            all_named = false;
            break;
        }
    if (all_named) return directive;
    return directive + " (" + join(classes, " or ") + ")";
}

std::string build_conversion_prompt(const std::string& metadata, const AttributeList& attrs) {
    std::string out = metadata;
    out += "\n\n";
    out += kAttributesHeading;
    out += "\n";
    for (const auto& [display, value] : attrs) out += "- " + display + ": " + value + "\n";
    out += "\n";
    out += kConvertDirective;
    return out;
}

std::string render_example(const std::string& feature_text, const std::string& label_text) {
    return feature_text + " " + kSeparator + " " + label_text;
}

std::string build_summary_prompt(const std::string& metadata,
                                 const std::vector<std::string>& rendered_examples,
                                 const std::string& directive) {
    std::string out = metadata;
    out += "\n\n";
    out += kExamplesHeading;
    out += "\n";
    for (const auto& ex : rendered_examples) out += ex + "\n";
    out += "\n";
    out += directive;
    return out;
}

std::string build_inference_prompt(const std::string& summary_text,
                                   const std::string& feature_text,
                                   const std::string& inference_prefix) {
    return summary_text + "\n\n" + kQueryPrefix + feature_text + "\n" + inference_prefix;
}

std::string build_zero_shot_prompt(const std::string& metadata, const std::string& feature_text,
                                   const std::string& inference_prefix) {
    return metadata + "\n\n" + kQueryPrefix + feature_text + "\n" + inference_prefix;
}

std::string build_few_shot_prompt(const std::string& metadata,
                                  const std::vector<std::string>& rendered_examples,
                                  const std::string& feature_text,
                                  const std::string& inference_prefix) {
    std::string out = metadata;
    out += "\n\n";
    out += kExamplesHeading;
    out += "\n";
    for (const auto& ex : rendered_examples) out += ex + "\n";
    out += "\n";
    out += kQueryPrefix;
    out += feature_text;
    out += "\n";
    out += inference_prefix;
    return out;
}

}  // namespace sumboost
