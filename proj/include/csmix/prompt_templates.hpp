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

// Generated by scripts/gen_prompt_templates.py from assets/templates/.
// Do not edit by hand; edit the asset files and regenerate.

#ifndef CSMIX_PROMPT_TEMPLATES_HPP_
#define CSMIX_PROMPT_TEMPLATES_HPP_

#include <string_view>

namespace csmix {

inline constexpr std::string_view kTemplateVersion = "v1";

inline constexpr std::string_view kBaselineTemplate =
    R"CSMIXTPL(You are a bilingual English–Mandarin code-switching expert. Your task is to translate the given Mandarin sentence into a natural code-switching sentence.
{input_sentence})CSMIXTPL";

inline constexpr std::string_view kEzswitchTemplate =
    R"CSMIXTPL(You are a bilingual English-Mandarin code-switching expert. Your task is to translate the given Mandarin sentence into a code-mixed sentence with Romanized English and Mandarin with specific keywords that should appear.
{input_sentence}
Words wanted: {wanted_words})CSMIXTPL";

inline constexpr std::string_view kSectTemplate =
    R"CSMIXTPL(You are a bilingual English–Mandarin code-switching expert. Your task is to translate the given Mandarin sentence into a natural code-switching sentence. Please strictly follow the rules below:
1. Preserve the full meaning of the original sentence.
2. At most {max_insertions} English words or short phrases may substitute for Mandarin words in each sentence.
3. The code-switching output must be natural and fluent, consistent with the daily speech habits of Mandarin–English bilinguals.
{examples_block}Please output the code-switching sentence directly without extra text or explanation.:
{input_sentence})CSMIXTPL";

inline constexpr std::string_view kJudgeTemplate =
    R"CSMIXTPL(You are an expert evaluator of code-switched text quality. You will evaluate Mandarin-English code-switched sentences based on the following criteria:
1. Naturalness: How natural and fluent does the code-switched sentence sound?
2. Grammar: Is the sentence grammatically correct in both languages?
3. Semantic preservation: Does the code-switched version preserve the meaning of the original Mandarin?
4. Code-switching appropriateness: Are the language switches natural and appropriate?
Please provide a single score from 1 to 10 (where 10 is excellent and 1 is very poor).
Return ONLY the numerical score as a single digit, nothing else.
Original Mandarin: {original}
Code-Switching text: {generated})CSMIXTPL";

}  // namespace csmix

#endif  // CSMIX_PROMPT_TEMPLATES_HPP_
