#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cds/corpus.hpp"
#include "cds/harness/endpoint.hpp"

namespace cds::harness {

/// One query evaluation: the unit of all experiment outputs. Keyed by
/// (query_id, shots, method, seed); re-running a persisted key is a no-op.
struct EvalRecord {
    std::string query_id;
    std::size_t shots = 0;
    std::string method;
    std::uint64_t seed = 0;
    std::string prompt_hash;
    std::string completion;
    std::optional<std::string> extracted;
    std::string reference;
    bool exact_match = false;
    TokenUsage usage;
    std::optional<long> think_tokens;
    double temperature = 0.0;  // decoding parameters recorded for audit
};

std::string record_key(const std::string& query_id, std::size_t shots, const std::string& method,
                       std::uint64_t seed);

json eval_record_to_json(const EvalRecord& r);
EvalRecord eval_record_from_json(const json& j);

/// Append-only JSONL store with idempotent keys. Loading tolerates a file
/// truncated mid-line, so interrupted runs resume from what was flushed.
class RecordStore {
public:
    explicit RecordStore(std::filesystem::path path);

    bool contains(const std::string& key) const;
    void append(const EvalRecord& r);  // flushed per record
    const std::vector<EvalRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::vector<EvalRecord> records_;
    std::map<std::string, std::size_t> by_key_;
};

/// Same idea for sampled generations, keyed by (demo_id, sample_index).
class GenerationStore {
public:
    explicit GenerationStore(std::filesystem::path path);

    bool contains(const std::string& demo_id, int sample_index) const;
    void append(const corpus::GenerationSample& s);
    const std::vector<corpus::GenerationSample>& samples() const { return samples_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::vector<corpus::GenerationSample> samples_;
    std::map<std::string, std::size_t> by_key_;
};

} // namespace cds::harness
