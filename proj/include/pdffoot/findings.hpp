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

#ifndef PDFFOOT_FINDINGS_HPP
#define PDFFOOT_FINDINGS_HPP

#include "pdffoot/object.hpp"
#include "pdffoot/text.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

enum class FindingCategory {
    AuthorName,
    Email,
    Path,
    Username,
    HardwareBrand,
    Annotation,
    Comment,
    PlatformKey,
    Script,
    EmbeddedFile,
    OrphanObject,
    ShadowObject,
};

std::string_view to_string(FindingCategory c);
std::optional<FindingCategory> category_from_string(std::string_view s);

enum class Confidence { Exact, Heuristic };

std::string_view to_string(Confidence c);

/// Where the object carrying a finding lives.
enum class Origin {
    Reachable,
    Orphan,
    Shadow,
    Bytes, // found by scanning file bytes, not tied to an object
};

std::string_view to_string(Origin o);

struct Evidence {
    std::optional<ObjectId> object;
    std::size_t offset = 0;
    std::string excerpt; // verbatim slice of the input, at most 256 bytes
};

struct Finding {
    FindingCategory category = FindingCategory::AuthorName;
    std::string value;
    /// Dictionary key or metadata field the value came from, when there is one.
    std::string key;
    Confidence confidence = Confidence::Exact;
    Origin origin = Origin::Reachable;
    Evidence evidence;
    /// Value was taken from a metadata record rather than from the object graph.
    bool from_metadata = false;
    /// False for findings that are reported but never count against Level-3
    /// (font registry data, which must survive sanitization unchanged).
    bool identifying = true;
};

enum class MetadataSource { InfoDict, XmpStream, OrphanInfoDict, OrphanXmpStream };

std::string_view to_string(MetadataSource s);

struct MetadataField {
    std::string key; // canonical key, or the original key when unrecognized
    DecodedString value;
    std::string xmp_name; // original XMP property, empty for Info entries
};

struct MetadataRecord {
    MetadataSource source = MetadataSource::InfoDict;
    ObjectId object;
    std::size_t offset = 0;
    std::vector<MetadataField> fields;
    /// Info of the newest trailer, or a Metadata stream a viewer would still reach.
    bool current = false;
    /// Built from a version superseded by a later revision.
    bool superseded = false;

    const MetadataField* field(std::string_view key) const;
    /// Text of `key`, or empty.
    std::string text(std::string_view key) const;
    bool orphan() const { return source == MetadataSource::OrphanInfoDict || source == MetadataSource::OrphanXmpStream; }
};

} // namespace pdffoot

#endif
