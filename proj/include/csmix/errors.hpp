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

#ifndef CSMIX_ERRORS_HPP_
#define CSMIX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace csmix {

enum class Errc {
  InvalidInput,
  EmptyCorpus,
  EmptySentence,
  EmptyField,
  EmptyResponse,
  RetriesExhausted,
  MalformedResponse,
  AuthMissing,
  CheckpointCorrupt,
  UnparseableScore,
  OutOfRange,
  InsufficientSpeakers,
  EmptyPool,
  DuplicateJob,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::EmptySentence: return "EmptySentence";
    case Errc::EmptyField: return "EmptyField";
    case Errc::EmptyResponse: return "EmptyResponse";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::MalformedResponse: return "MalformedResponse";
    case Errc::AuthMissing: return "AuthMissing";
    case Errc::CheckpointCorrupt: return "CheckpointCorrupt";
    case Errc::UnparseableScore: return "UnparseableScore";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InsufficientSpeakers: return "InsufficientSpeakers";
    case Errc::EmptyPool: return "EmptyPool";
    case Errc::DuplicateJob: return "DuplicateJob";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace csmix

#endif  // CSMIX_ERRORS_HPP_
