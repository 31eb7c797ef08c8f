#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cds::embedding {

using json = nlohmann::json;

struct EmbeddingVector {
    std::vector<double> values;
    std::string provider_id;
    std::string source_hash;

    std::size_t dim() const { return values.size(); }
};

/// Hash identifying an embedded text within a keyspace. `space_tag` keeps
/// question-only and full-demonstration embeddings in separate keyspaces
/// even if their source strings ever coincided.
std::string source_hash_for(std::string_view space_tag, std::string_view text);

class Provider {
public:
    virtual ~Provider() = default;
    virtual const std::string& id() const = 0;
    /// Embeds one batch; output order matches input order.
    virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
};

/// Deterministic offline provider: each component stream is keyed by
/// hash(seed, text), so the same (seed, text) yields the same vector on any
/// platform and across process restarts. Components are uniform in [-1, 1).
class SyntheticProvider final : public Provider {
public:
    explicit SyntheticProvider(std::uint64_t seed = 0, std::size_t dim = 64);
    const std::string& id() const override { return id_; }
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;
    std::size_t dim() const { return dim_; }

private:
    std::uint64_t seed_;
    std::size_t dim_;
    std::string id_;
};

struct HttpProviderConfig {
    std::string url;    // full endpoint URL, e.g. http://host:port/v1/embeddings
    std::string model;
    std::string auth_token;          // sent as "Authorization: Bearer <token>" when non-empty
    int max_retries = 3;             // attempts, not extra retries
    std::chrono::milliseconds initial_backoff{200};
    int timeout_seconds = 120;
};

/// Client for the de facto embeddings-API shape:
/// request {model, input: [text...]}, response {data: [{embedding: [...]}]}.
class HttpProvider final : public Provider {
public:
    explicit HttpProvider(HttpProviderConfig config);
    const std::string& id() const override { return id_; }
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

private:
    HttpProviderConfig config_;
    std::string id_;
};

/// Single-file append-only log of embedding entries, one JSON object per
/// line, with an index footer line refreshed by write_footer(). Lookups hit
/// an in-memory map; appends go straight to disk so an interrupted run
/// keeps everything embedded so far.
class EmbeddingCache {
public:
    EmbeddingCache() = default;                            // in-memory only
    explicit EmbeddingCache(std::filesystem::path storage);  // loads existing entries
    ~EmbeddingCache();

    EmbeddingCache(const EmbeddingCache&) = delete;
    EmbeddingCache& operator=(const EmbeddingCache&) = delete;

    std::optional<EmbeddingVector> lookup(const std::string& provider_id,
                                          const std::string& source_hash) const;
    void insert(const EmbeddingVector& v);
    void write_footer();

    std::size_t size() const { return entries_.size(); }
    /// Dimension pinned for a provider within this cache (0 = none yet).
    std::size_t provider_dim(const std::string& provider_id) const;
    const std::filesystem::path& storage_uri() const { return storage_; }

private:
    void load();

    std::filesystem::path storage_;
    std::map<std::pair<std::string, std::string>, EmbeddingVector> entries_;
    std::map<std::string, std::size_t> provider_dims_;
    bool dirty_ = false;
};

struct BatchOptions {
    std::size_t batch_size = 32;
    std::size_t max_in_flight = 4;  // provider calls issued concurrently
    std::string space_tag;          // keyspace tag mixed into source hashes
    bool normalize = false;         // opt-in L2 normalization of outputs
};

struct BatchStats {
    std::size_t cache_hits = 0;
    std::size_t provider_calls = 0;
    std::size_t embedded = 0;  // texts sent to the provider
    std::size_t dim = 0;
};

/// Embeds texts with cache consultation and order-preserving assembly.
/// Identical texts are embedded once. Vectors stay in the provider's native
/// space; normalization only happens when opted into.
std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts, Provider& provider,
                                         EmbeddingCache* cache = nullptr,
                                         const BatchOptions& options = {},
                                         BatchStats* stats = nullptr);

/// a.b / (|a||b|), clipped to [-1, 1]. Errors on zero norm or dimension
/// mismatch.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

EmbeddingVector l2_normalized(const EmbeddingVector& v);

} // namespace cds::embedding
