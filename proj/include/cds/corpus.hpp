#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cds::corpus {

using json = nlohmann::json;

enum class RenderMode { icl, cot_icl };

/// One (question, chain-of-thought, answer) triple. `cot` is absent for
/// traditional ICL demonstrations. `meta` carries task-specific extras that
/// the core model stays agnostic about (e.g. DetectiveQA context/options,
/// novel id, source split).
struct Demonstration {
    std::string id;
    std::string task;
    std::string question;
    std::optional<std::string> cot;
    std::string answer;
    json meta = json::object();
};

struct DemonstrationPool {
    std::string task;
    std::vector<Demonstration> items;  // order = file order = "original" baseline
    std::string source_uri;
};

struct OptionChoice {
    std::string label;
    std::string text;
};

struct QueryInstance {
    std::string id;
    std::string task;
    std::string question;
    std::string reference_answer;
    std::vector<OptionChoice> options;   // empty when absent
    std::optional<std::string> context;  // long evidence text when present
};

/// Loads a JSONL demonstration file. Item order equals file order. Errors
/// name the offending line or id. `require_cot` rejects records with a
/// missing or empty `cot` (pools destined for CoT-ICL must not silently
/// shrink their shot counts).
DemonstrationPool load_pool(const std::filesystem::path& path, const std::string& task,
                            bool require_cot = false);

std::vector<QueryInstance> load_queries(const std::filesystem::path& path,
                                        const std::string& task);

/// Canonical JSONL form: one object per line, keys sorted, `cot` and `meta`
/// always present. load_pool(save_pool(p)) round-trips byte-identically.
void save_pool(const DemonstrationPool& pool, const std::filesystem::path& path);
std::string pool_to_jsonl(const DemonstrationPool& pool);

json demonstration_to_json(const Demonstration& d);
Demonstration demonstration_from_json(const json& j);

/// Renders the text of a single demonstration under its task's template.
/// In cot_icl mode the chain-of-thought sits between question and answer.
/// `templated` keeps the task template's field labels (the default used for
/// full-demonstration embeddings); `templated = false` concatenates raw
/// fields joined by newlines.
std::string render_demo_text(const Demonstration& d, RenderMode mode, bool templated = true);

/// Replaces every rationale with the first item's chain while keeping each
/// question/answer pair. Ids get a "#corrupted" suffix.
DemonstrationPool corrupt_procedures(const DemonstrationPool& pool);

/// One sampled chain-of-thought for a pool item, annotated by the scorer.
struct GenerationSample {
    std::string demo_id;
    int sample_index = 0;  // 0-based position within the per-item samples
    std::string cot;
    std::optional<std::string> extracted_answer;
    bool is_correct = false;
};

struct PartitionReport {
    std::vector<std::string> no_correct_sample;    // omitted from cr
    std::vector<std::string> no_incorrect_sample;  // omitted from wr
    std::vector<std::string> no_first_sample;      // omitted from first
};

struct PartitionedPools {
    DemonstrationPool cr;     // lowest-indexed correct sample per item
    DemonstrationPool wr;     // lowest-indexed incorrect sample per item
    DemonstrationPool first;  // the index-0 sample per item
    PartitionReport report;
};

/// Splits sampled generations into the cr/wr/first pools. `pool` supplies
/// the question and reference answer for each demo id; samples referencing
/// unknown ids are an error. A derived demonstration carries the sampled
/// chain as `cot` and the sample's extracted answer (falling back to the
/// reference answer when extraction produced nothing).
PartitionedPools partition_generated(const DemonstrationPool& pool,
                                     const std::vector<GenerationSample>& samples);

json generation_sample_to_json(const GenerationSample& s);
GenerationSample generation_sample_from_json(const json& j);

} // namespace cds::corpus
