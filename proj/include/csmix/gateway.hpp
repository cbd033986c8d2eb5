// Copyright 2026 csmix authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSMIX_GATEWAY_HPP_
#define CSMIX_GATEWAY_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "csmix/errors.hpp"
#include "csmix/hash.hpp"
#include "csmix/prompts.hpp"

namespace csmix {

/// Connection settings for a chat-completions style endpoint. The API
/// key is only ever read from the named environment variable; it is
/// never persisted and never logged.
struct LlmConfig {
  std::string endpoint_url = "http://127.0.0.1:8080/v1/chat/completions";
  std::string model_id = "deepseek-r1";
  double temperature = 0.7;
  int max_output_tokens = 512;
  double timeout_s = 30.0;
  int max_retries = 3;
  int max_in_flight = 4;
  std::string api_key_env_var;
  double retry_initial_delay_ms = 500.0;
  bool split_system_user = false;
  std::uint64_t seed = 0;
};

struct LlmExchange {
  std::string request_text;
  std::string response_text;
  std::string model_id;
  double latency_ms = 0.0;
  int attempt_count = 0;
  std::string finish_reason;
};

/// Connection-level failure (no HTTP status available).
class TransportError : public std::runtime_error {
 public:
  enum class Kind { Connect, Timeout };
  TransportError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct TransportResponse {
  int status = 0;
  std::string body;
};

using HeaderList = std::vector<std::pair<std::string, std::string>>;

class Transport {
 public:
  virtual ~Transport() = default;
  virtual TransportResponse post(const std::string& url, const HeaderList& headers,
                                 const std::string& body, double timeout_s) = 0;
};

class GatewayError : public Error {
 public:
  GatewayError(Errc code, const std::string& message, int attempts, int last_status)
      : Error(code, message), attempts_(attempts), last_status_(last_status) {}
  int attempts() const noexcept { return attempts_; }
  int last_status() const noexcept { return last_status_; }

 private:
  int attempts_;
  int last_status_;
};

struct GatewayFailure {
  Errc code = Errc::RetriesExhausted;
  std::string message;
  int attempts = 0;
  int last_status = 0;
};

struct BatchRequest {
  RenderedPrompt prompt;
  // Distinguishes deliberate re-asks of the same prompt (e.g. retry
  // rounds) in the idempotency key; identical (prompt, salt) pairs are
  // submitted at most once.
  std::string salt;
};

struct BatchOutcome {
  std::optional<LlmExchange> exchange;
  std::optional<GatewayFailure> failure;
  bool from_checkpoint = false;

  bool ok() const { return exchange.has_value(); }
};

struct BatchOptions {
  std::string checkpoint_path;  // empty: no checkpointing
  std::function<void(std::size_t done, std::size_t total)> progress;
};

namespace detail {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

inline Endpoint parse_endpoint(std::string_view url) {
  std::string u(url);
  if (u.find("://") == std::string::npos) u = "http://" + u;
  const std::size_t scheme_end = u.find("://") + 3;
  const std::size_t path_start = u.find('/', scheme_end);
  if (path_start == std::string::npos) return {u, "/"};
  return {u.substr(0, path_start), u.substr(path_start)};
}

}  // namespace detail

class Gateway {
 public:
  using Logger = std::function<void(const std::string&)>;

  Gateway(LlmConfig config, std::shared_ptr<Transport> transport, Logger logger = {})
      : config_(std::move(config)),
        transport_(std::move(transport)),
        logger_(std::move(logger)),
        rng_(config_.seed) {}

  const LlmConfig& config() const { return config_; }

  /// Exponential backoff with additive jitter in [0, 10%]. The jitter
  /// band is narrower than the doubling step, so the schedule is
  /// monotone non-decreasing in the attempt index.
  static double backoff_ms(double initial_ms, int failed_attempts, std::mt19937_64& rng) {
    double base = initial_ms;
    for (int i = 1; i < failed_attempts; ++i) base *= 2.0;
    std::uniform_real_distribution<double> jitter(0.0, base * 0.1);
    return base + jitter(rng);
  }

  std::string request_key(const BatchRequest& item) const {
    return content_key(config_.model_id + '\x1e' + item.prompt.text + '\x1e' + item.salt);
  }

  /// One prompt, one completion. Retries timeouts, connection errors
  /// and HTTP 429/5xx with backoff; other HTTP errors fail fast.
  LlmExchange complete(const RenderedPrompt& prompt) {
    const HeaderList headers = build_headers();
    const std::string body = build_request_body(prompt);
    const auto endpoint = detail::parse_endpoint(config_.endpoint_url);
    const int max_attempts = config_.max_retries + 1;

    const auto started = std::chrono::steady_clock::now();
    int last_status = 0;
    std::string last_detail;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
      bool retryable = false;
      try {
        const TransportResponse res =
            transport_->post(config_.endpoint_url, headers, body, config_.timeout_s);
        last_status = res.status;
        if (res.status >= 200 && res.status < 300) {
          LlmExchange exchange = parse_response(res.body);
          exchange.request_text = prompt.text;
          exchange.model_id = config_.model_id;
          exchange.attempt_count = attempt;
          exchange.latency_ms = elapsed_ms(started);
          return exchange;
        }
        retryable = res.status == 429 || res.status >= 500;
        last_detail = "HTTP " + std::to_string(res.status);
      } catch (const TransportError& e) {
        retryable = true;
        last_detail = e.what();
      }
      if (!retryable) {
        throw GatewayError(Errc::RetriesExhausted,
                           "request to " + endpoint.path + " failed (" + last_detail + ")",
                           attempt, last_status);
      }
      if (attempt < max_attempts) {
        double delay = 0.0;
        {
          std::lock_guard<std::mutex> lock(rng_mutex_);
          delay = backoff_ms(config_.retry_initial_delay_ms, attempt, rng_);
        }
        log("retrying after " + last_detail + " (attempt " + std::to_string(attempt) +
            "/" + std::to_string(max_attempts) + ", backoff " +
            std::to_string(static_cast<long>(delay)) + " ms)");
        std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(delay));
      }
    }
    throw GatewayError(Errc::RetriesExhausted,
                       "gave up after " + std::to_string(max_attempts) + " attempts (" +
                           last_detail + ")",
                       max_attempts, last_status);
  }

  /// Completes a list of prompts with at most max_in_flight requests in
  /// flight. Results come back in input order; per-item failures are
  /// embedded, not thrown. With a checkpoint path, finished items are
  /// appended as JSONL and skipped on rerun.
  std::vector<BatchOutcome> complete_batch(std::span<const BatchRequest> items,
                                           const BatchOptions& options = {}) {
    std::vector<BatchOutcome> results(items.size());
    if (items.empty()) return results;

    std::map<std::string, BatchOutcome> outcomes;
    if (!options.checkpoint_path.empty()) {
      for (auto& [key, exchange] : load_checkpoint(options.checkpoint_path)) {
        BatchOutcome outcome;
        outcome.exchange = std::move(exchange);
        outcome.from_checkpoint = true;
        outcomes.emplace(key, std::move(outcome));
      }
    }

    // Unique keys in first-appearance order; duplicates share one call.
    std::vector<std::string> keys(items.size());
    std::vector<std::string> pending;
    std::map<std::string, std::size_t> first_index;
    for (std::size_t i = 0; i < items.size(); ++i) {
      keys[i] = request_key(items[i]);
      if (first_index.emplace(keys[i], i).second && !outcomes.count(keys[i])) {
        pending.push_back(keys[i]);
      }
    }

    std::ofstream checkpoint_out;
    if (!options.checkpoint_path.empty()) {
      checkpoint_out.open(options.checkpoint_path, std::ios::app);
    }

    std::mutex state_mutex;
    std::atomic<std::size_t> next{0};
    std::size_t done = outcomes.size();
    const std::size_t total = outcomes.size() + pending.size();
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(config_.max_in_flight, 1)),
                              pending.size());

    auto work = [&]() {
      for (;;) {
        const std::size_t slot = next.fetch_add(1);
        if (slot >= pending.size()) return;
        const std::string& key = pending[slot];
        const BatchRequest& item = items[first_index[key]];
        BatchOutcome outcome;
        try {
          outcome.exchange = complete(item.prompt);
        } catch (const GatewayError& e) {
          outcome.failure =
              GatewayFailure{e.code(), e.what(), e.attempts(), e.last_status()};
        } catch (const Error& e) {
          outcome.failure = GatewayFailure{e.code(), e.what(), 0, 0};
        }
        std::lock_guard<std::mutex> lock(state_mutex);
        if (outcome.exchange && checkpoint_out.is_open()) {
          checkpoint_out << checkpoint_line(key, *outcome.exchange) << '\n';
          checkpoint_out.flush();
        }
        outcomes.emplace(key, std::move(outcome));
        ++done;
        if (options.progress) options.progress(done, total);
      }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();

    for (std::size_t i = 0; i < items.size(); ++i) {
      BatchOutcome& outcome = outcomes.at(keys[i]);
      results[i] = outcome;
      if (results[i].exchange) {
        // Checkpointed entries don't store the request; refill it.
        results[i].exchange->request_text = items[i].prompt.text;
      }
    }
    return results;
  }

  std::string build_request_body(const RenderedPrompt& prompt) const {
    nlohmann::json messages = nlohmann::json::array();
    if (config_.split_system_user && !prompt.instruction.empty() &&
        !prompt.user_payload.empty()) {
      messages.push_back({{"role", "system"}, {"content", prompt.instruction}});
      messages.push_back({{"role", "user"}, {"content", prompt.user_payload}});
    } else {
      messages.push_back({{"role", "user"}, {"content", prompt.text}});
    }
    const nlohmann::json body = {{"model", config_.model_id},
                                 {"messages", messages},
                                 {"temperature", config_.temperature},
                                 {"max_tokens", config_.max_output_tokens}};
    return body.dump();
  }

 private:
  HeaderList build_headers() {
    HeaderList headers{{"Content-Type", "application/json"}};
    if (!config_.api_key_env_var.empty()) {
      headers.emplace_back("Authorization", "Bearer " + resolve_api_key());
    }
    return headers;
  }

  std::string resolve_api_key() {
    std::lock_guard<std::mutex> lock(key_mutex_);
    if (!api_key_.empty()) return api_key_;
    const char* key = std::getenv(config_.api_key_env_var.c_str());
    if (key == nullptr || *key == '\0') {
      throw Error(Errc::AuthMissing,
                  "environment variable " + config_.api_key_env_var + " is not set");
    }
    api_key_ = key;
    return api_key_;
  }

  static LlmExchange parse_response(const std::string& body) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception&) {
      throw Error(Errc::MalformedResponse, "response body is not valid JSON");
    }
    if (!doc.contains("choices") || !doc["choices"].is_array() || doc["choices"].empty()) {
      throw Error(Errc::MalformedResponse, "response has no choices");
    }
    const nlohmann::json& choice = doc["choices"][0];
    if (!choice.contains("message") || !choice["message"].contains("content") ||
        !choice["message"]["content"].is_string()) {
      throw Error(Errc::MalformedResponse, "first choice has no message content");
    }
    LlmExchange exchange;
    exchange.response_text = choice["message"]["content"].get<std::string>();
    if (choice.contains("finish_reason") && choice["finish_reason"].is_string()) {
      exchange.finish_reason = choice["finish_reason"].get<std::string>();
    }
    return exchange;
  }

  static std::string checkpoint_line(const std::string& key, const LlmExchange& exchange) {
    const nlohmann::json entry = {{"key", key},
                                  {"model_id", exchange.model_id},
                                  {"response_text", exchange.response_text},
                                  {"finish_reason", exchange.finish_reason},
                                  {"attempt_count", exchange.attempt_count}};
    return entry.dump();
  }

  std::map<std::string, LlmExchange> load_checkpoint(const std::string& path) const {
    std::map<std::string, LlmExchange> entries;
    std::ifstream in(path);
    if (!in.is_open()) return entries;
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(lines[i]);
        LlmExchange exchange;
        exchange.response_text = doc.at("response_text").get<std::string>();
        exchange.model_id = doc.at("model_id").get<std::string>();
        exchange.finish_reason = doc.value("finish_reason", "");
        exchange.attempt_count = doc.at("attempt_count").get<int>();
        entries[doc.at("key").get<std::string>()] = std::move(exchange);
      } catch (const nlohmann::json::exception&) {
        if (i + 1 == lines.size()) {
          // A truncated final line is what an interrupted run leaves
          // behind; drop it and let the item be redone.
          continue;
        }
        throw Error(Errc::CheckpointCorrupt,
                    path + ": unreadable entry at line " + std::to_string(i + 1));
      }
    }
    return entries;
  }

  double elapsed_ms(std::chrono::steady_clock::time_point start) const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }

  void log(const std::string& message) {
    if (!logger_) return;
    std::string scrubbed = message;
    std::string key;
    {
      std::lock_guard<std::mutex> lock(key_mutex_);
      key = api_key_;
    }
    if (!key.empty()) {
      std::size_t pos = 0;
      while ((pos = scrubbed.find(key, pos)) != std::string::npos) {
        scrubbed.replace(pos, key.size(), "[redacted]");
        pos += 10;
      }
    }
    logger_(scrubbed);
  }

  LlmConfig config_;
  std::shared_ptr<Transport> transport_;
  Logger logger_;
  std::mt19937_64 rng_;
  std::mutex rng_mutex_;
  std::mutex key_mutex_;
  std::string api_key_;
};

}  // namespace csmix

#endif  // CSMIX_GATEWAY_HPP_
