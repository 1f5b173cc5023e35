#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace sumboost {

struct EmbeddingVector {
    std::vector<double> values;
    int dimension() const { return static_cast<int>(values.size()); }
};

struct CompletionRequest {
    std::string prompt;
    double temperature = 0.0;  // in [0, 2]
    int max_tokens = 256;
    int attempt = 0;  // part of the cache key; bump it to resample
};

struct CompletionResult {
    std::string text;
    int prompt_tokens = 0;
    int completion_tokens = 0;
};

/// Approximate token count: alphanumeric runs plus individual punctuation
/// characters. Averages out near 4 characters per token on ordinary English
/// text, which is the constant the cost model assumes.
int count_tokens(std::string_view text);

/// A completion/embedding provider. Implementations must be deterministic
/// per (prompt, attempt) when they claim to be (the mock oracle is).
class LlmBackend {
public:
    virtual ~LlmBackend() = default;
    virtual CompletionResult complete_raw(const CompletionRequest& req) = 0;
    virtual std::vector<EmbeddingVector> embed_raw(const std::vector<std::string>& texts) = 0;
    virtual std::string model_id() const = 0;
    virtual int embedding_dimension() const = 0;
};

struct LlmClientConfig {
    std::string cache_path;        // empty: in-memory cache only
    int context_limit = 2048;      // prompt estimate + max_tokens must fit
    int embed_context_limit = 8191;
    int max_attempts = 5;          // network attempts per exchange
    int backoff_ms = 250;          // doubles after each failure
    bool offline = false;          // cache misses become errors
};

/// Cache-first facade over a backend. The cache is an append-only JSONL file
/// keyed by hash(model, prompt, temperature, max_tokens, attempt); a partial
/// trailing line (crash mid-write) is ignored on load. Safe for concurrent
/// callers.
class LlmClient {
public:
    LlmClient(std::shared_ptr<LlmBackend> backend, LlmClientConfig config);

    /// Cache key for a completion request against this client's backend.
    std::string completion_key(const CompletionRequest& req) const;

    CompletionResult complete(const CompletionRequest& req);
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts);

    int context_limit() const { return config_.context_limit; }
    std::uint64_t network_calls() const { return network_calls_; }
    const std::string& model_id() const { return model_id_; }
    int embedding_dimension() const { return backend_->embedding_dimension(); }

private:
    std::string embedding_key(const std::string& text) const;
    void append_line(const std::string& line);
    void load_cache();
    template <typename Fn>
    auto with_retries(Fn&& fn) -> decltype(fn());

    std::shared_ptr<LlmBackend> backend_;
    LlmClientConfig config_;
    std::string model_id_;
    std::unordered_map<std::string, CompletionResult> completions_;
    std::unordered_map<std::string, std::vector<double>> embeddings_;
    std::uint64_t network_calls_ = 0;
    std::mutex mutex_;
};

struct HttpBackendConfig {
    std::string base_url;     // e.g. http://localhost:8080
    std::string model = "curie";
    std::string api_key;      // read from SUMBOOST_API_KEY when empty
    int embedding_dim = 1536;
    int timeout_s = 60;
};

/// Client for a conventional REST completion provider:
/// POST {base}/v1/completions and POST {base}/v1/embeddings.
std::shared_ptr<LlmBackend> make_http_backend(const HttpBackendConfig& config);

}  // namespace sumboost
