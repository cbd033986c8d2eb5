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

#ifndef CSMIX_HTTP_TRANSPORT_HPP_
#define CSMIX_HTTP_TRANSPORT_HPP_

#include <cmath>
#include <string>

#include <httplib.h>

#include "csmix/gateway.hpp"

namespace csmix {

/// cpp-httplib backed transport. A fresh client per request keeps the
/// transport safe for concurrent batch workers.
class HttplibTransport final : public Transport {
 public:
  TransportResponse post(const std::string& url, const HeaderList& headers,
                         const std::string& body, double timeout_s) override {
    const detail::Endpoint endpoint = detail::parse_endpoint(url);
    httplib::Client client(endpoint.origin);
    const auto seconds = static_cast<time_t>(timeout_s);
    const auto micros =
        static_cast<time_t>((timeout_s - std::floor(timeout_s)) * 1'000'000.0);
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);

    httplib::Headers hdrs;
    std::string content_type = "application/json";
    for (const auto& [name, value] : headers) {
      if (name == "Content-Type") {
        content_type = value;
      } else {
        hdrs.emplace(name, value);
      }
    }
    const httplib::Result result = client.Post(endpoint.path, hdrs, body, content_type);
    if (!result) {
      const auto kind = result.error() == httplib::Error::ConnectionTimeout ||
                                result.error() == httplib::Error::Read ||
                                result.error() == httplib::Error::Write
                            ? TransportError::Kind::Timeout
                            : TransportError::Kind::Connect;
      throw TransportError(kind, "transport error: " + httplib::to_string(result.error()));
    }
    return {result->status, result->body};
  }
};

}  // namespace csmix

#endif  // CSMIX_HTTP_TRANSPORT_HPP_
