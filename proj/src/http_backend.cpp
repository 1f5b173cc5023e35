#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

#include "sumboost/errors.hpp"
#include "sumboost/llm.hpp"

namespace sumboost {

namespace {

class HttpBackend : public LlmBackend {
public:
    explicit HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
        if (config_.api_key.empty()) {
            if (const char* env = std::getenv("SUMBOOST_API_KEY")) config_.api_key = env;
        }
    }

    std::string model_id() const override { return config_.model; }
    int embedding_dimension() const override { return config_.embedding_dim; }

    CompletionResult complete_raw(const CompletionRequest& req) override {
        nlohmann::json body{{"model", config_.model},
                            {"prompt", req.prompt},
                            {"temperature", req.temperature},
                            {"max_tokens", req.max_tokens}};
        const nlohmann::json reply = post("/v1/completions", body);
        CompletionResult res;
        try {
            res.text = reply.at("choices").at(0).at("text").get<std::string>();
            if (reply.contains("usage")) {
                res.prompt_tokens = reply["usage"].value("prompt_tokens", 0);
                res.completion_tokens = reply["usage"].value("completion_tokens", 0);
            }
        } catch (const nlohmann::json::exception& e) {
            throw ProviderError(std::string("malformed completion response: ") + e.what());
        }
        return res;
    }

    std::vector<EmbeddingVector> embed_raw(const std::vector<std::string>& texts) override {
        nlohmann::json body{{"model", config_.model}, {"input", texts}};
        const nlohmann::json reply = post("/v1/embeddings", body);
        std::vector<EmbeddingVector> out;
        try {
            for (const auto& item : reply.at("data"))
                out.push_back(EmbeddingVector{item.at("embedding").get<std::vector<double>>()});
        } catch (const nlohmann::json::exception& e) {
            throw ProviderError(std::string("malformed embedding response: ") + e.what());
        }
        return out;
    }

private:
    nlohmann::json post(const std::string& path, const nlohmann::json& body) {
        httplib::Client client(config_.base_url);
        client.set_connection_timeout(config_.timeout_s);
        client.set_read_timeout(config_.timeout_s);
        httplib::Headers headers;
        if (!config_.api_key.empty())
            headers.emplace("Authorization", "Bearer " + config_.api_key);
        auto result = client.Post(path, headers, body.dump(), "application/json");
        if (!result)
            throw ProviderError("request to " + config_.base_url + path +
                                " failed: " + httplib::to_string(result.error()));
        if (result->status != 200)
            throw ProviderError("provider returned status " + std::to_string(result->status) +
                                " for " + path);
        try {
            return nlohmann::json::parse(result->body);
        } catch (const nlohmann::json::exception& e) {
            throw ProviderError(std::string("provider returned invalid JSON: ") + e.what());
        }
    }

    HttpBackendConfig config_;
};

}  // namespace

std::shared_ptr<LlmBackend> make_http_backend(const HttpBackendConfig& config) {
    return std::make_shared<HttpBackend>(config);
}

}  // namespace sumboost
