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

#ifndef PDFFOOT_WRITER_HPP
#define PDFFOOT_WRITER_HPP

#include "pdffoot/document.hpp"
#include "pdffoot/object.hpp"

#include <map>
#include <set>
#include <string>

namespace pdffoot {

/// An object graph ready to be written as a single-revision file.
struct WriteGraph {
    std::string header_version = "1.4";
    Dictionary trailer;
    std::map<ObjectId, PdfObject> objects;
};

/// Appends the PDF syntax for `obj`. Streams get a direct /Length.
void write_object(std::string& out, const PdfObject& obj);

/// Objects reachable from trailer /Root and /Info.
std::set<ObjectId> reachable_objects(const WriteGraph& graph);

/// Writes header, the objects reachable from trailer /Root and /Info (in
/// object-number order), one classic xref table and the trailer.
///
/// Throws Error(NoRoot) when the trailer has no /Root.
std::string write_pdf(const WriteGraph& graph);

/// Graph that serialize_document would write: newest object versions and the
/// Root/Info/ID entries of the current trailer.
WriteGraph graph_of(const PdfDocument& doc);

/// Non-incremental rewrite of `doc`. Orphans and superseded versions are not
/// emitted.
std::string serialize_document(const PdfDocument& doc);

} // namespace pdffoot

#endif
