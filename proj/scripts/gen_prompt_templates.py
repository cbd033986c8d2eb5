#!/usr/bin/env python3
"""Regenerates include/csmix/prompt_templates.hpp from assets/templates.

The asset files are the source of truth for prompt wording; the header
embeds them so the library stays header-only. A unit test verifies the
two stay in sync.
"""

import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
ASSETS = ROOT / "assets" / "templates"
OUT = ROOT / "include" / "csmix" / "prompt_templates.hpp"

TEMPLATES = [
    ("kBaselineTemplate", "baseline.txt"),
    ("kEzswitchTemplate", "ezswitch.txt"),
    ("kSectTemplate", "sect.txt"),
    ("kJudgeTemplate", "judge.txt"),
]

LICENSE = """\
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
"""


def main() -> None:
    parts = [
        LICENSE,
        "// Generated by scripts/gen_prompt_templates.py from assets/templates/.",
        "// Do not edit by hand; edit the asset files and regenerate.",
        "",
        "#ifndef CSMIX_PROMPT_TEMPLATES_HPP_",
        "#define CSMIX_PROMPT_TEMPLATES_HPP_",
        "",
        "#include <string_view>",
        "",
        "namespace csmix {",
        "",
        'inline constexpr std::string_view kTemplateVersion = "v1";',
        "",
    ]
    for name, filename in TEMPLATES:
        text = (ASSETS / filename).read_text(encoding="utf-8")
        if ")CSMIXTPL(" in text:
            raise SystemExit(f"{filename}: raw-string delimiter collision")
        parts.append(f"inline constexpr std::string_view {name} =")
        parts.append(f'    R"CSMIXTPL({text})CSMIXTPL";')
        parts.append("")
    parts.append("}  // namespace csmix")
    parts.append("")
    parts.append("#endif  // CSMIX_PROMPT_TEMPLATES_HPP_")
    OUT.write_text("\n".join(parts) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
