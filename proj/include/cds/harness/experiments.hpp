#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cds/corpus.hpp"
#include "cds/embedding.hpp"
#include "cds/geometry.hpp"
#include "cds/harness/endpoint.hpp"
#include "cds/harness/records.hpp"
#include "cds/ordering.hpp"
#include "cds/task_spec.hpp"

namespace cds::harness {

struct ExperimentConfig {
    TaskSpec task;
    corpus::DemonstrationPool pool;
    std::vector<corpus::QueryInstance> queries;
    std::vector<std::size_t> shot_counts;  // each must be <= pool size

    std::string model;
    double temperature = 0.0;
    int max_tokens = 0;
    std::optional<bool> thinking;

    std::size_t max_concurrency = 4;
    /// 0 = unlimited. A prompt longer than this is a hard error naming the
    /// offending shot count; demonstrations are never dropped silently.
    std::size_t max_prompt_chars = 0;
    std::string think_open = "<think>";
    std::string think_close = "</think>";
};

/// One ordering entered into a scaling run. `permutation` covers the whole
/// pool; each shot count takes its first n entries.
struct OrderingUnderTest {
    std::string method;
    std::uint64_t seed = 0;
    std::vector<std::size_t> permutation;
};

struct AccuracyCell {
    std::size_t shots = 0;
    std::string method;
    std::uint64_t seed = 0;
    std::size_t n_queries = 0;
    std::size_t n_correct = 0;
    double accuracy = 0.0;
};

struct AccuracyTable {
    std::vector<AccuracyCell> cells;

    const AccuracyCell* find(std::size_t shots, const std::string& method,
                             std::uint64_t seed) const;
    std::string to_csv() const;
    std::string to_text(const std::string& task, const std::string& model) const;
};

/// Evaluates every (shot count, ordering, query) cell, persisting records
/// before aggregation. Completed keys in `store` are not re-queried, so a
/// partially persisted run resumes to identical tables.
AccuracyTable run_scaling(const ExperimentConfig& config,
                          const std::vector<OrderingUnderTest>& orderings,
                          ChatEndpoint& endpoint, RecordStore& store);

struct VarianceRow {
    std::size_t shots = 0;
    double mean = 0.0;
    double stddev = 0.0;  // population std over permutation accuracies
    std::vector<double> accuracies;
};

/// Order-variance protocol: per shot count, the first n pool items are
/// permuted `permutations` ways (seeds master_seed + i) and the accuracy
/// spread is summarized.
std::vector<VarianceRow> run_order_variance(const ExperimentConfig& config,
                                            std::size_t permutations, std::uint64_t master_seed,
                                            ChatEndpoint& endpoint, RecordStore& store);

std::string variance_to_csv(const std::vector<VarianceRow>& rows);
std::string variance_to_text(const std::vector<VarianceRow>& rows);

/// Correlation between ordering geometry and accuracy, reported with both
/// signs: smoothness score vs accuracy (the analysis pipeline's native
/// pairing) and mean turning angle vs accuracy (the curvature side, which
/// carries the opposite sign).
struct CorrelationReport {
    geometry::CorrelationResult smoothness_accuracy;
    geometry::CorrelationResult curvature_accuracy;
};

CorrelationReport run_correlation(const std::vector<embedding::EmbeddingVector>& pool_embeddings,
                                  const std::vector<ordering::Ordering>& orderings,
                                  const std::vector<double>& accuracies);

struct GenerationConfig {
    TaskSpec task;
    std::string model;
    int samples_per_item = 10;
    double temperature = 1.0;
    int max_tokens = 0;
    std::optional<bool> thinking;
    std::size_t max_concurrency = 4;
};

/// Samples `samples_per_item` completions per pool item from the endpoint
/// (zero-shot prompt for the item's question), with extraction and
/// correctness annotation against the item's answer. Resumable through the
/// optional store.
std::vector<corpus::GenerationSample> sample_generations(const corpus::DemonstrationPool& pool,
                                                         ChatEndpoint& endpoint,
                                                         const GenerationConfig& config,
                                                         GenerationStore* store = nullptr);

double mean_accuracy(const std::vector<bool>& matches);
double population_std(const std::vector<double>& xs);

} // namespace cds::harness
