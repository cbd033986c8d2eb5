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

#ifndef CSMIX_METRICS_HPP_
#define CSMIX_METRICS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>

#include "csmix/errors.hpp"
#include "csmix/segmenter.hpp"

namespace csmix {

/// Code-mixing index flavors.
///
/// Classic:      100 * (1 - max(w_man, w_eng) / n_lang), 0 when no
///               language tokens are present.
/// SwitchAware:  100 * ((n_lang - max(w_man, w_eng)) + P)
///                   / (2 * (n_lang + neutral_units)),
///               0 when the utterance has no tokens at all; P is the
///               switch-point count.
enum class CmiVariant { Classic, SwitchAware };

inline const char* cmi_variant_name(CmiVariant v) {
  return v == CmiVariant::Classic ? "classic" : "switch_aware";
}

inline CmiVariant cmi_variant_from_name(const std::string& name) {
  if (name == "classic") return CmiVariant::Classic;
  if (name == "switch_aware") return CmiVariant::SwitchAware;
  throw Error(Errc::InvalidInput, "unknown CMI variant: " + name);
}

/// Utterance-level CMI in [0, 100].
inline double utterance_cmi(const Utterance& utt, CmiVariant variant) {
  const LanguageCounts c = language_counts(utt);
  const int max_lang = std::max(c.man_tokens, c.eng_tokens);
  double value = 0.0;
  if (variant == CmiVariant::Classic) {
    if (c.lang_tokens == 0) return 0.0;
    value = 100.0 * static_cast<double>(c.lang_tokens - max_lang) /
            static_cast<double>(c.lang_tokens);
  } else {
    const int total_units = c.lang_tokens + c.neutral_units;
    if (total_units == 0) return 0.0;
    value = 100.0 *
            static_cast<double>((c.lang_tokens - max_lang) + utt.switch_points) /
            static_cast<double>(2 * total_units);
  }
  return std::clamp(value, 0.0, 100.0);
}

/// Corpus-level mixing statistics.
///
/// Utterances with no tokens at all carry no signal and are excluded
/// from every aggregate except n_utterances. Utterances with only
/// Neutral tokens count with CMI 0 and sit in mixed_fraction's
/// denominator but never its numerator.
struct CorpusStats {
  int n_utterances = 0;       // everything handed in
  int n_scored = 0;           // utterances with at least one token
  int n_empty = 0;            // token-less utterances, skipped
  int cs_count = 0;           // utterances containing both languages
  double mean_cmi_all = 0.0;
  double mean_cmi_cs_only = 0.0;
  double token_ratio_man = 0.0;
  double token_ratio_eng = 0.0;
  double mixed_fraction = 0.0;
  double mean_switch_points = 0.0;
  std::array<int, 10> histogram{};  // CMI deciles over scored utterances
  CmiVariant variant = CmiVariant::Classic;
};

inline CorpusStats corpus_stats(std::span<const Utterance> utts, CmiVariant variant) {
  if (utts.empty()) {
    throw Error(Errc::EmptyCorpus, "corpus_stats needs at least one utterance");
  }
  CorpusStats stats;
  stats.variant = variant;
  stats.n_utterances = static_cast<int>(utts.size());

  double cmi_sum = 0.0;
  double cmi_cs_sum = 0.0;
  double switch_sum = 0.0;
  long long man_total = 0;
  long long eng_total = 0;
  for (const Utterance& utt : utts) {
    if (utt.tokens.empty()) {
      ++stats.n_empty;
      continue;
    }
    ++stats.n_scored;
    const LanguageCounts c = language_counts(utt);
    man_total += c.man_tokens;
    eng_total += c.eng_tokens;
    switch_sum += utt.switch_points;
    const double cmi = utterance_cmi(utt, variant);
    cmi_sum += cmi;
    const std::size_t bucket =
        std::min<std::size_t>(9, static_cast<std::size_t>(cmi / 10.0));
    ++stats.histogram[bucket];
    if (c.man_tokens > 0 && c.eng_tokens > 0) {
      ++stats.cs_count;
      cmi_cs_sum += cmi;
    }
  }

  if (stats.n_scored > 0) {
    stats.mean_cmi_all = cmi_sum / stats.n_scored;
    stats.mixed_fraction = static_cast<double>(stats.cs_count) / stats.n_scored;
    stats.mean_switch_points = switch_sum / stats.n_scored;
  }
  if (stats.cs_count > 0) {
    stats.mean_cmi_cs_only = cmi_cs_sum / stats.cs_count;
  }
  const long long lang_total = man_total + eng_total;
  if (lang_total > 0) {
    stats.token_ratio_man = static_cast<double>(man_total) / static_cast<double>(lang_total);
    stats.token_ratio_eng = static_cast<double>(eng_total) / static_cast<double>(lang_total);
  }
  return stats;
}

/// Absolute gap between a corpus mean CMI and a reference CMI; lower is
/// a closer match to the reference corpus.
inline double cmi_similarity(const CorpusStats& generated, double reference_cmi) {
  return std::fabs(generated.mean_cmi_all - reference_cmi);
}

}  // namespace csmix

#endif  // CSMIX_METRICS_HPP_
