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

#ifndef CSMIX_SCORING_HPP_
#define CSMIX_SCORING_HPP_

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csmix/errors.hpp"
#include "csmix/segmenter.hpp"

namespace csmix {

/// A scoring unit: one English word or one Mandarin character. Neutral
/// tokens never reach the aligner, so punctuation and spacing cannot
/// change an error rate.
struct ScoreUnit {
  std::string text;
  TokenLang lang = TokenLang::Neutral;

  friend bool operator==(const ScoreUnit& a, const ScoreUnit& b) {
    return a.lang == b.lang && a.text == b.text;
  }
};

enum class EditOp { Match, Sub, Del, Ins };

inline const char* edit_op_name(EditOp op) {
  switch (op) {
    case EditOp::Match: return "match";
    case EditOp::Sub: return "sub";
    case EditOp::Del: return "del";
    case EditOp::Ins: return "ins";
  }
  return "match";
}

struct AlignmentStep {
  EditOp op = EditOp::Match;
  std::optional<ScoreUnit> ref;
  std::optional<ScoreUnit> hyp;
};

struct LangErrorCounts {
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int n_ref_units = 0;
};

/// Mixed-unit error report: word errors for English, character errors
/// for Mandarin, one combined rate. Substitutions and deletions are
/// attributed to the reference unit's language, insertions to the
/// hypothesis unit's language.
struct MerReport {
  int n_ref_units = 0;
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  bool mer_defined = true;  // false when the reference has no units but errors exist
  double mer = 0.0;
  std::map<std::string, LangErrorCounts> per_lang;
  std::vector<AlignmentStep> alignment;
};

struct ScoreConfig {
  bool fold_english_case = true;
};

inline std::vector<ScoreUnit> score_units_of(const Utterance& utt,
                                             const ScoreConfig& cfg = {}) {
  std::vector<ScoreUnit> units;
  units.reserve(utt.tokens.size());
  for (const Token& tok : utt.tokens) {
    if (tok.lang == TokenLang::Neutral) continue;
    ScoreUnit unit{tok.surface, tok.lang};
    if (tok.lang == TokenLang::Eng && cfg.fold_english_case) {
      std::transform(unit.text.begin(), unit.text.end(), unit.text.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    }
    units.push_back(std::move(unit));
  }
  return units;
}

namespace detail {

inline void attribute_errors(MerReport& report) {
  report.per_lang.clear();
  report.n_ref_units = 0;
  report.substitutions = 0;
  report.deletions = 0;
  report.insertions = 0;
  for (const AlignmentStep& step : report.alignment) {
    if (step.ref) {
      ++report.n_ref_units;
      ++report.per_lang[token_lang_name(step.ref->lang)].n_ref_units;
    }
    switch (step.op) {
      case EditOp::Match:
        break;
      case EditOp::Sub:
        ++report.substitutions;
        ++report.per_lang[token_lang_name(step.ref->lang)].substitutions;
        break;
      case EditOp::Del:
        ++report.deletions;
        ++report.per_lang[token_lang_name(step.ref->lang)].deletions;
        break;
      case EditOp::Ins:
        ++report.insertions;
        ++report.per_lang[token_lang_name(step.hyp->lang)].insertions;
        break;
    }
  }
}

inline void finalize_rate(MerReport& report) {
  const int edits = report.substitutions + report.deletions + report.insertions;
  if (report.n_ref_units > 0) {
    report.mer_defined = true;
    report.mer = static_cast<double>(edits) / report.n_ref_units;
  } else if (edits == 0) {
    report.mer_defined = true;
    report.mer = 0.0;
  } else {
    report.mer_defined = false;
    report.mer = 0.0;
  }
}

}  // namespace detail

/// Aligns hypothesis units against reference units with unit costs
/// (S = D = I = 1). Ties in the backtrace are broken deterministically:
/// match, then substitution, then deletion, then insertion, so the same
/// pair always yields the same alignment.
inline MerReport align_units(const std::vector<ScoreUnit>& ref,
                             const std::vector<ScoreUnit>& hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) dp[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) dp[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub_cost = dp[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const int del_cost = dp[i - 1][j] + 1;
      const int ins_cost = dp[i][j - 1] + 1;
      dp[i][j] = std::min({sub_cost, del_cost, ins_cost});
    }
  }

  MerReport report;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    AlignmentStep step;
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && dp[i][j] == dp[i - 1][j - 1]) {
      step.op = EditOp::Match;
      step.ref = ref[i - 1];
      step.hyp = hyp[j - 1];
      --i;
      --j;
    } else if (i > 0 && j > 0 && dp[i][j] == dp[i - 1][j - 1] + 1) {
      step.op = EditOp::Sub;
      step.ref = ref[i - 1];
      step.hyp = hyp[j - 1];
      --i;
      --j;
    } else if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
      step.op = EditOp::Del;
      step.ref = ref[i - 1];
      --i;
    } else {
      step.op = EditOp::Ins;
      step.hyp = hyp[j - 1];
      --j;
    }
    report.alignment.push_back(std::move(step));
  }
  std::reverse(report.alignment.begin(), report.alignment.end());
  detail::attribute_errors(report);
  detail::finalize_rate(report);
  return report;
}

/// Scores one utterance pair. A reference with no language units and a
/// non-empty hypothesis produces an undefined rate with the insertion
/// count reported.
inline MerReport score_units(const Utterance& ref, const Utterance& hyp,
                             const ScoreConfig& cfg = {}) {
  return align_units(score_units_of(ref, cfg), score_units_of(hyp, cfg));
}

/// Pooled corpus score: sums S, D, I and reference units over all pairs
/// before dividing (not a mean of per-utterance rates). The alignment
/// list is left empty at corpus level.
inline MerReport score_corpus(std::span<const std::pair<Utterance, Utterance>> pairs,
                              const ScoreConfig& cfg = {}) {
  if (pairs.empty()) {
    throw Error(Errc::EmptyCorpus, "score_corpus needs at least one pair");
  }
  MerReport pooled;
  for (const auto& [ref, hyp] : pairs) {
    const MerReport one = score_units(ref, hyp, cfg);
    pooled.n_ref_units += one.n_ref_units;
    pooled.substitutions += one.substitutions;
    pooled.deletions += one.deletions;
    pooled.insertions += one.insertions;
    for (const auto& [lang, counts] : one.per_lang) {
      LangErrorCounts& agg = pooled.per_lang[lang];
      agg.substitutions += counts.substitutions;
      agg.deletions += counts.deletions;
      agg.insertions += counts.insertions;
      agg.n_ref_units += counts.n_ref_units;
    }
  }
  detail::finalize_rate(pooled);
  return pooled;
}

}  // namespace csmix

#endif  // CSMIX_SCORING_HPP_
