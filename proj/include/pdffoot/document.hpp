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

#ifndef PDFFOOT_DOCUMENT_HPP
#define PDFFOOT_DOCUMENT_HPP

#include "pdffoot/object.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

enum class Provenance { XrefTable, XrefStream, ObjectStream, RawScan };

std::string_view to_string(Provenance p);

/// A parsed indirect object and where it came from.
struct ObjectRecord {
    PdfObject object;
    /// Offset of `N G obj`. For members of an object stream this is the
    /// offset of the containing stream object.
    std::size_t offset = 0;
    std::size_t end = 0;
    Provenance provenance = Provenance::RawScan;
    std::optional<ObjectId> container;
};

/// A version of an object superseded by a later revision (or deleted by it).
struct ShadowObject {
    ObjectId id;
    ObjectRecord record;
};

struct ParseOptions {
    /// Turn any parse diagnostic into a MalformedPdf error.
    bool strict = false;
};

/// Result of raw_scan: one `N G obj ... endobj` span.
struct ScannedObject {
    ObjectId id;
    std::size_t offset = 0;
    std::size_t end = 0;
    PdfObject object;
};

/// Object graph of one PDF file. Immutable once parse_document returns.
class PdfDocument {
public:
    std::string header_version;
    std::size_t header_offset = 0;

    /// Newest version of every object, keyed by id. At most one entry per object number.
    std::map<ObjectId, ObjectRecord> objects;
    /// Superseded versions, in discovery order.
    std::vector<ShadowObject> shadows;
    /// Cross-reference streams and object-stream containers. They carry the
    /// file structure and are kept out of the object graph.
    std::map<ObjectId, ObjectRecord> structural;

    /// Trailer dictionaries, newest first.
    std::vector<Dictionary> trailers;

    /// Reachable from the Root or Info entry of any trailer.
    std::set<ObjectId> reachable;
    /// Parsed but not reachable.
    std::set<ObjectId> orphans;
    /// Reachable from the newest trailer only: what a viewer sees.
    std::set<ObjectId> live;

    std::vector<std::string> warnings;
    /// Byte ranges of every stream body seen in the file.
    std::vector<std::pair<std::size_t, std::size_t>> stream_spans;
    bool encrypted = false;

    const PdfObject* get(ObjectId id) const;
    const ObjectRecord* record(ObjectId id) const;

    /// Follows references (bounded depth); returns `obj` itself when it is direct.
    const PdfObject* resolve(const PdfObject& obj) const;

    /// First trailer (newest first) carrying a Root entry.
    const Dictionary* current_trailer() const;

    /// The original file bytes.
    std::string_view bytes() const { return source_ ? std::string_view(*source_) : std::string_view(); }
    std::shared_ptr<const std::string> source() const { return source_; }

    /// Up to `max` bytes of the file starting at `offset`.
    std::string excerpt(std::size_t offset, std::size_t max = 256) const;

private:
    friend PdfDocument parse_document(std::string bytes, const ParseOptions& options);
    std::shared_ptr<const std::string> source_;
};

/// Parses a PDF: follows the startxref / Prev chain, loads object streams,
/// then merges a raw scan so objects absent from every cross-reference
/// section still show up (as orphans).
///
/// Throws Error(NotAPdf) when `%PDF-` is not in the first 1024 bytes and
/// Error(NoObjectsFound) when nothing parses.
PdfDocument parse_document(std::string bytes, const ParseOptions& options = {});

/// Lexical scan for every `N G obj ... endobj` span, in file order. String
/// literals, comments and stream bodies are skipped so that `obj` inside them
/// never matches.
std::vector<ScannedObject> raw_scan(std::string_view bytes);

struct ObjStmMember {
    std::uint32_t number = 0;
    PdfObject object;
};

/// Splits a decoded /Type /ObjStm stream into its members. Members that fail
/// to parse are skipped and described in `warnings`.
///
/// Throws Error(MalformedObjStm) on a bad header or an out-of-range /First.
std::vector<ObjStmMember> parse_object_stream(const Stream& objstm, std::vector<std::string>* warnings = nullptr);

/// Concatenated, decoded /Contents of every page reachable through the page
/// tree of the current trailer. Pages whose content cannot be decoded
/// contribute their raw bytes.
std::vector<std::string> page_contents(const PdfDocument& doc);

} // namespace pdffoot

#endif
