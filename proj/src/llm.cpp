#include "sumboost/llm.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "sumboost/errors.hpp"
#include "sumboost/util.hpp"

namespace sumboost {

int count_tokens(std::string_view text) {
    int tokens = 0;
    bool in_word = false;
    for (unsigned char c : text) {
        const bool word_char = std::isalnum(c) || c >= 128;
        if (word_char) {
            if (!in_word) {
                ++tokens;
                in_word = true;
            }
        } else {
            in_word = false;
            if (!std::isspace(c)) ++tokens;  // punctuation counts one apiece
        }
    }
    return tokens;
}

namespace {

std::string canonical_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

LlmClient::LlmClient(std::shared_ptr<LlmBackend> backend, LlmClientConfig config)
    : backend_(std::move(backend)), config_(std::move(config)) {
    model_id_ = backend_->model_id();
    load_cache();
}

std::string LlmClient::completion_key(const CompletionRequest& req) const {
    Fnv64 h;
    h.update("completion").update(model_id_).update(req.prompt);
    h.update(canonical_double(req.temperature));
    h.update_u64(static_cast<std::uint64_t>(req.max_tokens));
    h.update_u64(static_cast<std::uint64_t>(req.attempt));
    return hex64(h.digest());
}

std::string LlmClient::embedding_key(const std::string& text) const {
    Fnv64 h;
    h.update("embedding").update(model_id_).update(text);
    return hex64(h.digest());
}

void LlmClient::append_line(const std::string& line) {
    if (config_.cache_path.empty()) return;
    std::ofstream out(config_.cache_path, std::ios::app | std::ios::binary);
    if (!out) throw ProviderError("cannot open cache for writing: " + config_.cache_path);
    out << line << '\n';
    out.flush();
}

void LlmClient::load_cache() {
    if (config_.cache_path.empty()) return;
    std::ifstream in(config_.cache_path, std::ios::binary);
    if (!in) return;  // no cache yet

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        nlohmann::json entry;
        try {
            entry = nlohmann::json::parse(lines[i]);
        } catch (const nlohmann::json::exception&) {
            // Only the final line may be a torn write; anything earlier means
            // the file is damaged.
            if (i + 1 == lines.size()) return;
            throw CacheCorruption("unparseable cache line " + std::to_string(i + 1) + " in " +
                                  config_.cache_path);
        }
        try {
            const std::string key = entry.at("key").get<std::string>();
            const std::string type = entry.at("type").get<std::string>();
            if (type == "completion") {
                CompletionResult res;
                res.text = entry.at("text").get<std::string>();
                res.prompt_tokens = entry.at("prompt_tokens").get<int>();
                res.completion_tokens = entry.at("completion_tokens").get<int>();
                completions_[key] = std::move(res);
            } else if (type == "embedding") {
                embeddings_[key] = entry.at("values").get<std::vector<double>>();
            } else {
                throw CacheCorruption("unknown cache entry type: " + type);
            }
        } catch (const nlohmann::json::exception& e) {
            throw CacheCorruption(std::string("malformed cache entry: ") + e.what());
        }
    }
}

template <typename Fn>
auto LlmClient::with_retries(Fn&& fn) -> decltype(fn()) {
    int delay_ms = config_.backoff_ms;
    for (int attempt = 1;; ++attempt) {
        try {
            ++network_calls_;
            return fn();
        } catch (const ProviderError&) {
            if (attempt >= config_.max_attempts) throw;
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
    }
}

CompletionResult LlmClient::complete(const CompletionRequest& req) {
    if (req.prompt.empty()) throw DataError("completion prompt must be nonempty");
    const int prompt_estimate = count_tokens(req.prompt);
    if (prompt_estimate + req.max_tokens > config_.context_limit)
        throw ContextOverflow("prompt estimate " + std::to_string(prompt_estimate) +
                              " + max_tokens " + std::to_string(req.max_tokens) +
                              " exceeds context limit " + std::to_string(config_.context_limit));

    std::lock_guard<std::mutex> lock(mutex_);
    const std::string key = completion_key(req);
    if (auto it = completions_.find(key); it != completions_.end()) return it->second;
    if (config_.offline)
        throw ProviderError("cache miss while offline (key " + key + ")");

    CompletionResult res = with_retries([&] { return backend_->complete_raw(req); });
    if (res.prompt_tokens == 0) res.prompt_tokens = prompt_estimate;
    if (res.completion_tokens == 0) res.completion_tokens = count_tokens(res.text);

    nlohmann::json entry{{"key", key},
                         {"type", "completion"},
                         {"model", model_id_},
                         {"prompt", req.prompt},
                         {"temperature", req.temperature},
                         {"max_tokens", req.max_tokens},
                         {"attempt", req.attempt},
                         {"text", res.text},
                         {"prompt_tokens", res.prompt_tokens},
                         {"completion_tokens", res.completion_tokens}};
    append_line(entry.dump());
    completions_[key] = res;
    return res;
}

std::vector<EmbeddingVector> LlmClient::embed(const std::vector<std::string>& texts) {
    for (const auto& t : texts)
        if (count_tokens(t) > config_.embed_context_limit)
            throw ContextOverflow("text exceeds embedding context limit");

    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::string> missing;
    for (const auto& t : texts) {
        const std::string key = embedding_key(t);
        if (!embeddings_.count(key)) {
            bool queued = false;
            for (const auto& m : missing)
                if (m == t) {
                    queued = true;
                    break;
                }
            if (!queued) missing.push_back(t);
        }
    }
    if (!missing.empty()) {
        if (config_.offline) throw ProviderError("embedding cache miss while offline");
        auto fetched = with_retries([&] { return backend_->embed_raw(missing); });
        if (fetched.size() != missing.size())
            throw ProviderError("backend returned wrong embedding count");
        for (std::size_t i = 0; i < missing.size(); ++i) {
            const std::string key = embedding_key(missing[i]);
            nlohmann::json entry{{"key", key},
                                 {"type", "embedding"},
                                 {"model", model_id_},
                                 {"input", missing[i]},
                                 {"values", fetched[i].values}};
            append_line(entry.dump());
            embeddings_[key] = std::move(fetched[i].values);
        }
    }

    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(EmbeddingVector{embeddings_.at(embedding_key(t))});
    return out;
}

}  // namespace sumboost
