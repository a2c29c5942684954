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

#include "pdffoot/rules.hpp"

#include "pdffoot/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pdffoot {

std::string_view to_string(OsHint os)
{
    switch (os) {
    case OsHint::Windows: return "Windows";
    case OsHint::MacOS: return "MacOS";
    case OsHint::Linux: return "Linux";
    case OsHint::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::optional<OsHint> os_from_string(std::string_view s)
{
    for (auto os : {OsHint::Windows, OsHint::MacOS, OsHint::Linux, OsHint::Unknown}) {
        if (s == to_string(os)) {
            return os;
        }
    }
    if (s == "-" || s.empty()) {
        return OsHint::Unknown;
    }
    return std::nullopt;
}

namespace {

bool contains(const std::vector<std::string>& v, std::string_view s)
{
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string_view> split_tabs(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos) {
            break;
        }
        start = tab + 1;
    }
    return out;
}

Pattern make_pattern(std::string_view source, std::size_t line)
{
    try {
        return Pattern{std::string(source),
                       std::regex(std::string(source), std::regex::ECMAScript | std::regex::icase)};
    } catch (const std::regex_error& e) {
        throw Error(ErrorCode::BadRule, "line " + std::to_string(line) + ": bad regex: " + e.what());
    }
}

ToolRule make_tool(const std::vector<std::string_view>& f, std::size_t first, std::size_t line)
{
    if (f.size() != first + 4) {
        throw Error(ErrorCode::BadRule, "line " + std::to_string(line) + ": tool rule needs 4 fields");
    }
    auto os = os_from_string(f[first + 3]);
    if (!os) {
        throw Error(ErrorCode::BadRule, "line " + std::to_string(line) + ": unknown os hint");
    }
    return ToolRule{std::string(f[first]), make_pattern(f[first + 1], line), std::string(f[first + 2]), *os};
}

void reset(RuleSet& rules, std::string_view category, std::size_t line)
{
    if (category == "canonical") {
        rules.canonical_keys.clear();
    } else if (category == "core") {
        rules.core_keys.clear();
    } else if (category == "email_key") {
        rules.email_keys.clear();
    } else if (category == "author_key") {
        rules.author_keys.clear();
    } else if (category == "xmp") {
        rules.xmp_map.clear();
    } else if (category == "brand") {
        rules.brands.clear();
    } else if (category == "brand_field") {
        rules.brand_fields.clear();
    } else if (category == "user_path.exact") {
        rules.user_path_exact.clear();
    } else if (category == "user_path.heuristic") {
        rules.user_path_heuristic.clear();
    } else if (category == "os") {
        rules.os_tokens.clear();
    } else if (category == "platform_key") {
        rules.platform_keys.clear();
    } else if (category == "demote") {
        rules.demote.clear();
    } else if (category == "tool") {
        rules.tools.clear();
    } else {
        throw Error(ErrorCode::BadRule, "line " + std::to_string(line) + ": cannot reset '" + std::string(category) + "'");
    }
}

void add_unique(std::vector<std::string>& v, std::string_view s)
{
    if (!contains(v, s)) {
        v.emplace_back(s);
    }
}

void apply(RuleSet& rules, std::string_view text)
{
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (trim(line).empty() || line.front() == '#') {
            continue;
        }
        auto f = split_tabs(line);
        if (f.size() < 2) {
            throw Error(ErrorCode::BadRule, "line " + std::to_string(line_no) + ": expected category<TAB>pattern");
        }
        std::string_view cat = f[0];
        std::string_view pat = f[1];
        if (cat == "tool") {
            rules.tools.push_back(make_tool(f, 1, line_no));
            continue;
        }
        if (f.size() != 2) {
            throw Error(ErrorCode::BadRule, "line " + std::to_string(line_no) + ": too many fields");
        }
        if (cat == "reset") {
            reset(rules, pat, line_no);
        } else if (cat == "canonical") {
            add_unique(rules.canonical_keys, pat);
        } else if (cat == "core") {
            add_unique(rules.core_keys, pat);
        } else if (cat == "email_key") {
            add_unique(rules.email_keys, pat);
        } else if (cat == "author_key") {
            add_unique(rules.author_keys, pat);
        } else if (cat == "xmp") {
            auto eq = pat.find('=');
            if (eq == std::string_view::npos || eq == 0 || eq + 1 == pat.size()) {
                throw Error(ErrorCode::BadRule, "line " + std::to_string(line_no) + ": xmp entry needs prop=Key");
            }
            rules.xmp_map.emplace_back(std::string(pat.substr(0, eq)), std::string(pat.substr(eq + 1)));
        } else if (cat == "brand") {
            add_unique(rules.brands, pat);
        } else if (cat == "brand_field") {
            add_unique(rules.brand_fields, pat);
        } else if (cat == "user_path.exact") {
            rules.user_path_exact.push_back(make_pattern(pat, line_no));
        } else if (cat == "user_path.heuristic") {
            rules.user_path_heuristic.push_back(make_pattern(pat, line_no));
        } else if (cat.substr(0, 3) == "os.") {
            auto os = os_from_string(cat.substr(3));
            if (!os || *os == OsHint::Unknown) {
                throw Error(ErrorCode::BadRule, "line " + std::to_string(line_no) + ": unknown OS '" +
                                                    std::string(cat.substr(3)) + "'");
            }
            rules.os_tokens.push_back(OsToken{*os, make_pattern(pat, line_no)});
        } else if (cat == "platform_key") {
            add_unique(rules.platform_keys, pat);
        } else if (cat == "demote") {
            auto c = category_from_string(pat);
            if (!c) {
                throw Error(ErrorCode::BadRule, "line " + std::to_string(line_no) + ": unknown finding category '" +
                                                    std::string(pat) + "'");
            }
            rules.demote.insert(*c);
        } else {
            throw Error(ErrorCode::BadRule, "line " + std::to_string(line_no) + ": unknown category '" +
                                                std::string(cat) + "'");
        }
    }
}

} // namespace

bool RuleSet::is_canonical(std::string_view key) const { return contains(canonical_keys, key); }
bool RuleSet::is_core(std::string_view key) const { return contains(core_keys, key); }
bool RuleSet::is_email_key(std::string_view key) const { return contains(email_keys, key); }
bool RuleSet::is_platform_key(std::string_view key) const { return contains(platform_keys, key); }

std::string RuleSet::xmp_key(std::string_view property) const
{
    for (const auto& [prop, key] : xmp_map) {
        if (prop == property) {
            return key;
        }
    }
    return {};
}

std::shared_ptr<const RuleSet> RuleSet::defaults()
{
    static const std::shared_ptr<const RuleSet> rules = [] {
        auto r = std::make_shared<RuleSet>();
        apply(*r, default_rules_text());
        return r;
    }();
    return rules;
}

std::shared_ptr<const RuleSet> RuleSet::parse(std::string_view text)
{
    auto r = std::make_shared<RuleSet>(*defaults());
    apply(*r, text);
    return r;
}

std::shared_ptr<const RuleSet> RuleSet::load(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::BadRule, "cannot read rule file " + file.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::vector<ToolRule> parse_tool_table(std::string_view text)
{
    std::vector<ToolRule> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (trim(line).empty() || line.front() == '#') {
            continue;
        }
        out.push_back(make_tool(split_tabs(line), 0, line_no));
    }
    return out;
}

} // namespace pdffoot
