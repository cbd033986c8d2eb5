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

#ifndef CSMIX_MOCK_TRANSPORT_HPP_
#define CSMIX_MOCK_TRANSPORT_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "csmix/errors.hpp"
#include "csmix/gateway.hpp"

namespace csmix {

namespace mock_detail {

inline std::string last_user_content(const std::string& body) {
  const nlohmann::json doc = nlohmann::json::parse(body);
  return doc.at("messages").back().at("content").get<std::string>();
}

inline std::vector<std::string> nonempty_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (!line.empty()) lines.emplace_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline std::string chat_completion_body(const std::string& content) {
  const nlohmann::json doc = {
      {"choices",
       {{{"message", {{"role", "assistant"}, {"content", content}}},
         {"finish_reason", "stop"}}}}};
  return doc.dump();
}

}  // namespace mock_detail

/// Replies with the prompt's input sentence (the last non-empty line of
/// the user message). Useful for wiring tests; generation against it
/// fails validation since nothing gets code-switched.
class EchoTransport final : public Transport {
 public:
  TransportResponse post(const std::string&, const HeaderList&, const std::string& body,
                         double) override {
    const auto lines = mock_detail::nonempty_lines(mock_detail::last_user_content(body));
    const std::string content = lines.empty() ? "" : lines.back();
    return {200, mock_detail::chat_completion_body(content)};
  }
};

/// Deterministic stand-in for a real model. Generation prompts get the
/// input sentence back with one English word appended, which passes the
/// default validation rules; judge prompts get a constant "7". Both
/// behaviors are analytically predictable, so pipeline-level tests can
/// assert exact corpus statistics.
class DemoTransport final : public Transport {
 public:
  static constexpr std::string_view kAppendedWord = "okay";
  static constexpr int kJudgeScore = 7;

  TransportResponse post(const std::string&, const HeaderList&, const std::string& body,
                         double) override {
    const std::string content = mock_detail::last_user_content(body);
    if (content.find("expert evaluator") != std::string::npos) {
      return {200, mock_detail::chat_completion_body(std::to_string(kJudgeScore))};
    }
    auto lines = mock_detail::nonempty_lines(content);
    std::string sentence;
    if (!lines.empty()) {
      sentence = lines.back();
      if (sentence.rfind("Words wanted:", 0) == 0 && lines.size() >= 2) {
        sentence = lines[lines.size() - 2];
      }
    }
    return {200, mock_detail::chat_completion_body(sentence + " " +
                                                   std::string(kAppendedWord))};
  }
};

inline std::shared_ptr<Transport> make_mock_transport(const std::string& name) {
  if (name == "echo") return std::make_shared<EchoTransport>();
  if (name == "demo") return std::make_shared<DemoTransport>();
  throw Error(Errc::InvalidInput, "unknown mock transport: " + name);
}

}  // namespace csmix

#endif  // CSMIX_MOCK_TRANSPORT_HPP_
