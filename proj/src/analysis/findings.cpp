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


#include "pdffoot/findings.hpp"

#include <array>

namespace pdffoot {

namespace {

constexpr std::array<std::pair<FindingCategory, std::string_view>, 12> CategoryNames = {{
    {FindingCategory::AuthorName, "AuthorName"},
    {FindingCategory::Email, "Email"},
    {FindingCategory::Path, "Path"},
    {FindingCategory::Username, "Username"},
    {FindingCategory::HardwareBrand, "HardwareBrand"},
    {FindingCategory::Annotation, "Annotation"},
    {FindingCategory::Comment, "Comment"},
    {FindingCategory::PlatformKey, "PlatformKey"},
    {FindingCategory::Script, "Script"},
    {FindingCategory::EmbeddedFile, "EmbeddedFile"},
    {FindingCategory::OrphanObject, "OrphanObject"},
    {FindingCategory::ShadowObject, "ShadowObject"},
}};

} // namespace

std::string_view to_string(FindingCategory c)
{
    for (const auto& [cat, name] : CategoryNames) {
        if (cat == c) {
            return name;
        }
    }
    return "?";
}

std::optional<FindingCategory> category_from_string(std::string_view s)
{
    for (const auto& [cat, name] : CategoryNames) {
        if (name == s) {
            return cat;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Confidence c) { return c == Confidence::Exact ? "Exact" : "Heuristic"; }

std::string_view to_string(Origin o)
{
    switch (o) {
    case Origin::Reachable: return "Reachable";
    case Origin::Orphan: return "Orphan";
    case Origin::Shadow: return "Shadow";
    case Origin::Bytes: return "Bytes";
    }
    return "?";
}

std::string_view to_string(MetadataSource s)
{
    switch (s) {
    case MetadataSource::InfoDict: return "InfoDict";
    case MetadataSource::XmpStream: return "XmpStream";
    case MetadataSource::OrphanInfoDict: return "OrphanInfoDict";
    case MetadataSource::OrphanXmpStream: return "OrphanXmpStream";
    }
    return "?";
}

const MetadataField* MetadataRecord::field(std::string_view key) const
{
    for (const auto& f : fields) {
        if (f.key == key) {
            return &f;
        }
    }
    return nullptr;
}

std::string MetadataRecord::text(std::string_view key) const
{
    const auto* f = field(key);
    return f ? f->value.text : std::string();
}

} // namespace pdffoot
