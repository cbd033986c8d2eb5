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

#ifndef CSMIX_SEGMENTER_HPP_
#define CSMIX_SEGMENTER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "csmix/unicode.hpp"

namespace csmix {

/// Script class of a single Unicode scalar. Han and Latin carry language
/// identity; everything else (digits, punctuation, whitespace, symbols,
/// other scripts) is language-neutral.
enum class ScriptClass { Han, Latin, Neutral };

/// Language tag of a token. Man tokens are single Han characters, Eng
/// tokens are maximal Latin-letter runs, Neutral tokens are maximal runs
/// of everything else.
enum class TokenLang { Man, Eng, Neutral };

inline const char* token_lang_name(TokenLang lang) {
  switch (lang) {
    case TokenLang::Man: return "man";
    case TokenLang::Eng: return "eng";
    case TokenLang::Neutral: return "neutral";
  }
  return "neutral";
}

struct ScriptRange {
  char32_t lo = 0;
  char32_t hi = 0;
};

/// Character-class configuration. The defaults cover CJK Unified
/// Ideographs (U+4E00-9FFF) plus Extension A (U+3400-4DBF) and ASCII
/// letters; extension planes or accented Latin ranges can be added.
struct SegmenterConfig {
  std::vector<ScriptRange> extra_han_ranges;
  std::vector<ScriptRange> extra_latin_ranges;
};

inline const SegmenterConfig& default_segmenter_config() {
  static const SegmenterConfig cfg{};
  return cfg;
}

/// Total classification of one Unicode scalar value.
inline ScriptClass classify_char(char32_t cp,
                                 const SegmenterConfig& cfg = default_segmenter_config()) {
  if ((cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF)) {
    return ScriptClass::Han;
  }
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) {
    return ScriptClass::Latin;
  }
  for (const ScriptRange& r : cfg.extra_han_ranges) {
    if (cp >= r.lo && cp <= r.hi) return ScriptClass::Han;
  }
  for (const ScriptRange& r : cfg.extra_latin_ranges) {
    if (cp >= r.lo && cp <= r.hi) return ScriptClass::Latin;
  }
  return ScriptClass::Neutral;
}

/// One token of a segmented utterance. Spans are Unicode scalar indices
/// into the normalized text, half-open [begin, end); the surface equals
/// that slice re-encoded as UTF-8.
struct Token {
  std::string surface;
  TokenLang lang = TokenLang::Neutral;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Utterance {
  std::string id;
  std::string raw;
  std::string normalized;
  std::vector<Token> tokens;
  // Count of adjacent Man/Eng boundaries after dropping Neutral tokens.
  int switch_points = 0;
};

namespace detail {

inline bool is_apostrophe(char32_t cp) {
  return cp == U'\'' || cp == U'’';
}

}  // namespace detail

/// Segments text into language-tagged tokens.
///
/// The input is normalized first (fullwidth Latin folded to ASCII, then
/// NFC). Each Han character becomes one Man token; each maximal run of
/// Latin letters, with apostrophes kept when they sit between letters,
/// becomes one Eng token; each maximal run of anything else becomes one
/// Neutral token. Concatenating the surfaces reproduces the normalized
/// text exactly. Empty input yields no tokens and zero switch points.
inline Utterance tokenize(std::string_view text, std::string id = "",
                          const SegmenterConfig& cfg = default_segmenter_config()) {
  Utterance utt;
  utt.id = std::move(id);
  utt.raw.assign(text.begin(), text.end());
  utt.normalized = normalize_text(text);

  const std::u32string cps = decode_utf8_lossy(utt.normalized);
  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    const ScriptClass cls = classify_char(cps[i], cfg);
    std::size_t j = i + 1;
    TokenLang lang = TokenLang::Neutral;
    if (cls == ScriptClass::Han) {
      lang = TokenLang::Man;  // one token per Han character
    } else if (cls == ScriptClass::Latin) {
      lang = TokenLang::Eng;
      while (j < n) {
        if (classify_char(cps[j], cfg) == ScriptClass::Latin) {
          ++j;
        } else if (detail::is_apostrophe(cps[j]) && j + 1 < n &&
                   classify_char(cps[j + 1], cfg) == ScriptClass::Latin) {
          j += 2;  // internal apostrophe: don't, it's
        } else {
          break;
        }
      }
    } else {
      while (j < n && classify_char(cps[j], cfg) == ScriptClass::Neutral) ++j;
    }
    Token tok;
    tok.lang = lang;
    tok.begin = i;
    tok.end = j;
    tok.surface = encode_utf8(std::u32string_view(cps).substr(i, j - i));
    utt.tokens.push_back(std::move(tok));
    i = j;
  }

  TokenLang prev = TokenLang::Neutral;
  bool seen_lang = false;
  for (const Token& tok : utt.tokens) {
    if (tok.lang == TokenLang::Neutral) continue;
    if (seen_lang && tok.lang != prev) ++utt.switch_points;
    prev = tok.lang;
    seen_lang = true;
  }
  return utt;
}

/// Token tallies feeding the mixing metrics. `neutral_units` counts
/// language-independent scalars (every character inside Neutral tokens),
/// matching the per-character granularity of Man tokens.
struct LanguageCounts {
  int lang_tokens = 0;  // man_tokens + eng_tokens
  int man_tokens = 0;
  int eng_tokens = 0;
  int neutral_units = 0;
};

inline LanguageCounts language_counts(const Utterance& utt) {
  LanguageCounts counts;
  for (const Token& tok : utt.tokens) {
    switch (tok.lang) {
      case TokenLang::Man:
        ++counts.man_tokens;
        break;
      case TokenLang::Eng:
        ++counts.eng_tokens;
        break;
      case TokenLang::Neutral:
        counts.neutral_units += static_cast<int>(tok.end - tok.begin);
        break;
    }
  }
  counts.lang_tokens = counts.man_tokens + counts.eng_tokens;
  return counts;
}

}  // namespace csmix

#endif  // CSMIX_SEGMENTER_HPP_
