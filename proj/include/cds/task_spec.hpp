#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cds/corpus.hpp"

namespace cds::harness {

using json = nlohmann::json;

enum class ExtractionRule { boxed_math, the_answer_is, labeled_field, option_letter };
enum class Normalization { numeric, exact_string, uppercase_letter };

/// Per-task prompt template, extraction rule and normalization rule.
/// Together they are total: every completion maps to an extracted answer or
/// an explicit no-answer marker.
struct TaskSpec {
    std::string task;
    std::string template_id;  // math | gsm8k | detectiveqa | banking77 | trec | nlu | wsc | copa
    ExtractionRule extraction = ExtractionRule::boxed_math;
    std::string field_label;  // for labeled_field, e.g. "intent category"
    Normalization normalization = Normalization::numeric;
    corpus::RenderMode cot_mode = corpus::RenderMode::cot_icl;
    std::vector<std::string> categories;  // fills the category list of label tasks
};

/// Resolves the built-in spec for a task id. MATH subject names (geometry,
/// number_theory, ...) map onto the math template.
TaskSpec builtin_task_spec(const std::string& task);
bool has_builtin_task_spec(const std::string& task);

TaskSpec task_spec_from_json(const json& j);
json task_spec_to_json(const TaskSpec& spec);

std::string prompt_header(const TaskSpec& spec);

/// One demonstration rendered under the task template, without surrounding
/// separators. In cot_icl mode the answer slot is "{cot} {answer}" (the
/// chain followed by the final answer); in icl mode it is the answer alone.
std::string render_demo_block(const TaskSpec& spec, const corpus::Demonstration& d,
                              corpus::RenderMode mode);

std::string render_query_block(const TaskSpec& spec, const corpus::QueryInstance& q);

/// Instruction header + demonstrations in the given order + query block.
/// Byte-deterministic: identical inputs give identical prompts.
std::string build_prompt(const TaskSpec& spec,
                         const std::vector<const corpus::Demonstration*>& demos,
                         const corpus::QueryInstance& query);
std::string build_prompt(const TaskSpec& spec, const std::vector<corpus::Demonstration>& demos,
                         const corpus::QueryInstance& query);

std::string extraction_rule_name(ExtractionRule r);
ExtractionRule extraction_rule_from_name(const std::string& name);
std::string normalization_name(Normalization n);
Normalization normalization_from_name(const std::string& name);

} // namespace cds::harness
