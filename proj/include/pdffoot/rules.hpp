// Copyright 2026 The pdffoot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PDFFOOT_RULES_HPP
#define PDFFOOT_RULES_HPP

#include "pdffoot/findings.hpp"

#include <filesystem>
#include <memory>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdffoot {

enum class OsHint { Windows, MacOS, Linux, Unknown };

std::string_view to_string(OsHint os);
std::optional<OsHint> os_from_string(std::string_view s);

struct Pattern {
    std::string source;
    std::regex re;
};

struct ToolRule {
    std::string id;
    Pattern pattern; // group 1, when it matches, is the version
    std::string family;
    OsHint os = OsHint::Unknown;
};

struct OsToken {
    OsHint os = OsHint::Unknown;
    Pattern pattern;
};

/// Lexicons, key sets and the tool table. Everything the extractors and the
/// fingerprinter treat as data lives here.
///
/// Text format, one entry per line: `category<TAB>pattern`. `#` starts a
/// comment line. A `reset<TAB>category` line drops what earlier lines (or the
/// embedded defaults) put in that category. Tool rules take four fields:
/// `tool<TAB>rule-id<TAB>regex<TAB>family<TAB>os-hint`.
struct RuleSet {
    std::vector<std::string> canonical_keys;
    std::vector<std::string> core_keys;
    std::vector<std::string> email_keys;
    std::vector<std::string> author_keys;
    std::vector<std::pair<std::string, std::string>> xmp_map; // property -> canonical key
    std::vector<std::string> brands;
    std::vector<std::string> brand_fields;
    std::vector<Pattern> user_path_exact;     // group 1 is the user name
    std::vector<Pattern> user_path_heuristic; // group 1 is the user name
    std::vector<OsToken> os_tokens;
    std::vector<std::string> platform_keys;
    std::set<FindingCategory> demote;
    std::vector<ToolRule> tools;

    bool is_canonical(std::string_view key) const;
    bool is_core(std::string_view key) const;
    bool is_email_key(std::string_view key) const;
    bool is_platform_key(std::string_view key) const;
    /// Canonical key for an XMP property name, or empty.
    std::string xmp_key(std::string_view property) const;

    /// Embedded defaults.
    static std::shared_ptr<const RuleSet> defaults();

    /// Defaults overlaid with `text`. Throws Error(BadRule) with the line number.
    static std::shared_ptr<const RuleSet> parse(std::string_view text);
    static std::shared_ptr<const RuleSet> load(const std::filesystem::path& file);
};

/// The embedded default rule file.
std::string_view default_rules_text();

/// Parses a bare tool table (`rule-id<TAB>regex<TAB>family<TAB>os-hint`).
std::vector<ToolRule> parse_tool_table(std::string_view text);

} // namespace pdffoot

#endif
