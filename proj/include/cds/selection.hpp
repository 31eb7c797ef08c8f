#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cds/corpus.hpp"
#include "cds/embedding.hpp"

namespace cds::selection {

using json = nlohmann::json;

enum class Mode { most_similar, most_dissimilar };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& name);

struct ScoredDemo {
    std::string demo_id;
    double similarity = 0.0;
};

struct SelectionResult {
    std::string query_id;
    Mode mode = Mode::most_similar;
    std::size_t k = 0;
    std::vector<ScoredDemo> chosen;       // presentation order
    std::string presentation_order;       // "similarity_descending" | "similarity_ascending"
};

/// Ranks the pool by cosine similarity between question-only embeddings and
/// slices the top-k (most_similar) or bottom-k (most_dissimilar). Most-
/// similar sets present in descending similarity, most-dissimilar in
/// ascending; `ascending_for_dissimilar = false` forces descending for
/// both. Ties break by demo id ascending. pool_embeddings aligns with
/// pool.items.
SelectionResult select_by_similarity(const corpus::QueryInstance& query,
                                     const corpus::DemonstrationPool& pool,
                                     const embedding::EmbeddingVector& query_embedding,
                                     const std::vector<embedding::EmbeddingVector>& pool_embeddings,
                                     std::size_t k, Mode mode,
                                     bool ascending_for_dissimilar = true);

json selection_to_json(const SelectionResult& r);

} // namespace cds::selection
