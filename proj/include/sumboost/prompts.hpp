#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sumboost {

// Fixed structural markers shared by every backend. The mock oracle keys on
// these substrings to tell prompt kinds apart, so they are part of the wire
// contract, not cosmetics.
inline constexpr const char* kConvertDirective =
    "Describe the record concisely and accurately in natural language. Use your creativity.";
inline constexpr const char* kAttributesHeading = "Attributes:";
inline constexpr const char* kExamplesHeading = "Examples:";
inline constexpr const char* kQueryPrefix = "Record: ";
inline constexpr const char* kSeparator = "###";

/// Per-dataset prompt knobs: metadata paragraph, class list, summary and
/// inference directives, plus optional hand-written description template.
struct PromptsConfig {
    std::string metadata;
    std::vector<std::string> classes;
    std::string summary_directive = "Tl;dr";
    std::string inference_directive;
    std::string label_template = "The {target} is {class}.";
    std::string template_text;  // hand-written description template, optional
};

PromptsConfig load_prompts(const std::string& path);
PromptsConfig prompts_from_json_text(const std::string& json_text);

/// Appends "(a or b or ...)" when the directive does not already name every
/// class; inference prefixes must name the output classes.
std::string ensure_classes_named(const std::string& directive,
                                 const std::vector<std::string>& classes);

using AttributeList = std::vector<std::pair<std::string, std::string>>;  // (display, value)

std::string build_conversion_prompt(const std::string& metadata, const AttributeList& attrs);
std::string render_example(const std::string& feature_text, const std::string& label_text);
std::string build_summary_prompt(const std::string& metadata,
                                 const std::vector<std::string>& rendered_examples,
                                 const std::string& directive);
std::string build_inference_prompt(const std::string& summary_text,
                                   const std::string& feature_text,
                                   const std::string& inference_prefix);
std::string build_zero_shot_prompt(const std::string& metadata, const std::string& feature_text,
                                   const std::string& inference_prefix);
std::string build_few_shot_prompt(const std::string& metadata,
                                  const std::vector<std::string>& rendered_examples,
                                  const std::string& feature_text,
                                  const std::string& inference_prefix);

}  // namespace sumboost
