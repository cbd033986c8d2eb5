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

#ifndef CSMIX_PROMPTS_HPP_
#define CSMIX_PROMPTS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csmix/errors.hpp"
#include "csmix/prompt_templates.hpp"

namespace csmix {

struct BaselineKind {};

struct EzswitchKind {
  std::vector<std::string> wanted_words;
};

struct IclExample {
  std::string mandarin;
  std::string code_switching;
};

/// The three shipped in-context pairs are placeholders; corpus-matched
/// examples are expected to replace them before real generation runs.
inline std::vector<IclExample> default_sect_examples() {
  return {
      {"(SAMPLE) 请替换成领域内的中文例句一。", "(SAMPLE) 请替换成领域内的 code-switching 例句一。"},
      {"(SAMPLE) 请替换成领域内的中文例句二。", "(SAMPLE) 请替换成领域内的 code-switching 例句二。"},
      {"(SAMPLE) 请替换成领域内的中文例句三。", "(SAMPLE) 请替换成领域内的 code-switching 例句三。"},
  };
}

struct SectKind {
  int max_insertions = 2;
  std::vector<IclExample> icl_examples = default_sect_examples();
};

using PromptKind = std::variant<BaselineKind, EzswitchKind, SectKind>;

inline const char* prompt_kind_name(const PromptKind& kind) {
  if (std::holds_alternative<BaselineKind>(kind)) return "baseline";
  if (std::holds_alternative<EzswitchKind>(kind)) return "ezswitch";
  return "sect";
}

/// A fully rendered prompt. `text` is the whole prompt as one message;
/// `instruction` / `user_payload` carry the same content pre-split for
/// gateways configured to send a system/user message pair. Rendering is
/// byte-stable: identical inputs always produce identical bytes.
struct RenderedPrompt {
  std::string text;
  std::string instruction;
  std::string user_payload;
  std::string input_sentence;
  std::string kind_name;
  std::string template_version;
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (static_cast<unsigned char>(s[b]) <= ' ')) ++b;
  while (e > b && (static_cast<unsigned char>(s[e - 1]) <= ' ')) --e;
  return std::string(s.substr(b, e - b));
}

// Single-pass slot substitution. Values are emitted verbatim and never
// rescanned, so braces inside user data cannot trigger re-substitution.
inline std::string render_slots(std::string_view tpl,
                                const std::map<std::string_view, std::string_view>& slots) {
  std::string out;
  out.reserve(tpl.size() + 64);
  std::size_t i = 0;
  while (i < tpl.size()) {
    if (tpl[i] == '{') {
      const std::size_t close = tpl.find('}', i);
      if (close != std::string_view::npos) {
        const std::string_view name = tpl.substr(i + 1, close - i - 1);
        auto it = slots.find(name);
        if (it != slots.end()) {
          out.append(it->second);
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(tpl[i]);
    ++i;
  }
  return out;
}

inline std::string number_word(int n) {
  static const char* words[] = {"zero", "one", "two",   "three", "four", "five",
                                "six",  "seven", "eight", "nine",  "ten"};
  if (n >= 0 && n <= 10) return words[n];
  return std::to_string(n);
}

// Splits a template at the line holding `marker`: everything above is
// the instruction block, the marker line onward is the per-input part.
inline std::pair<std::string_view, std::string_view> split_at_marker_line(
    std::string_view tpl, std::string_view marker) {
  const std::size_t pos = tpl.find(marker);
  if (pos == std::string_view::npos) return {tpl, std::string_view{}};
  const std::size_t nl = tpl.rfind('\n', pos);
  if (nl == std::string_view::npos) return {std::string_view{}, tpl};
  return {tpl.substr(0, nl), tpl.substr(nl + 1)};
}

inline std::string build_examples_block(const std::vector<IclExample>& examples) {
  if (examples.empty()) return "";
  std::string block = "There are " + number_word(static_cast<int>(examples.size())) +
                      (examples.size() == 1 ? " example:" : " examples:");
  for (std::size_t i = 0; i < examples.size(); ++i) {
    block += "\nExample " + std::to_string(i + 1) + ". Mandarin: " +
             examples[i].mandarin + " Code-switching: " + examples[i].code_switching;
  }
  block += "\n";
  return block;
}

inline RenderedPrompt render_template(std::string_view tpl, std::string_view marker,
                                      const std::map<std::string_view, std::string_view>& slots,
                                      std::string kind_name, std::string input_sentence) {
  RenderedPrompt out;
  const auto [head, tail] = split_at_marker_line(tpl, marker);
  out.text = render_slots(tpl, slots);
  out.instruction = render_slots(head, slots);
  out.user_payload = render_slots(tail, slots);
  out.input_sentence = std::move(input_sentence);
  out.kind_name = std::move(kind_name);
  out.template_version = std::string(kTemplateVersion);
  return out;
}

}  // namespace detail

/// Renders a generation prompt for one Mandarin sentence.
inline RenderedPrompt render_generation(const PromptKind& kind, std::string_view sentence) {
  const std::string input = detail::trim_copy(sentence);
  if (input.empty()) {
    throw Error(Errc::EmptySentence, "generation prompt needs a non-empty sentence");
  }

  if (const auto* ez = std::get_if<EzswitchKind>(&kind)) {
    if (ez->wanted_words.empty()) {
      throw Error(Errc::EmptyField, "EZSwitch prompt needs at least one wanted word");
    }
    std::string words;
    for (std::size_t i = 0; i < ez->wanted_words.size(); ++i) {
      if (i > 0) words += ", ";
      words += ez->wanted_words[i];
    }
    return detail::render_template(kEzswitchTemplate, "{input_sentence}",
                                   {{"input_sentence", input}, {"wanted_words", words}},
                                   "ezswitch", input);
  }

  if (const auto* sect = std::get_if<SectKind>(&kind)) {
    const std::string count = detail::number_word(sect->max_insertions);
    const std::string examples = detail::build_examples_block(sect->icl_examples);
    return detail::render_template(kSectTemplate, "{input_sentence}",
                                   {{"input_sentence", input},
                                    {"max_insertions", count},
                                    {"examples_block", examples}},
                                   "sect", input);
  }

  return detail::render_template(kBaselineTemplate, "{input_sentence}",
                                 {{"input_sentence", input}}, "baseline", input);
}

/// Renders the 1-10 quality-judging prompt for an (original, generated)
/// pair.
inline RenderedPrompt render_judge(std::string_view original, std::string_view generated) {
  const std::string orig = detail::trim_copy(original);
  const std::string gen = detail::trim_copy(generated);
  if (orig.empty() || gen.empty()) {
    throw Error(Errc::EmptyField, "judge prompt needs both the original and the generated text");
  }
  return detail::render_template(kJudgeTemplate, "{original}",
                                 {{"original", orig}, {"generated", gen}}, "judge", gen);
}

}  // namespace csmix

#endif  // CSMIX_PROMPTS_HPP_
