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

#ifndef PDFFOOT_EXTRACT_HPP
#define PDFFOOT_EXTRACT_HPP

#include "pdffoot/document.hpp"
#include "pdffoot/findings.hpp"
#include "pdffoot/rules.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

/// Ids of objects whose content is document metadata: trailer Info
/// dictionaries, Metadata streams, and orphan or superseded dictionaries that
/// look like an Info dictionary (two or more canonical keys).
std::set<ObjectId> metadata_objects(const PdfDocument& doc, const RuleSet& rules);

/// Info dictionaries of every trailer, Metadata streams, and Info-like orphans.
/// Reachable records come first, then orphans by offset, then superseded
/// versions. Unparsable XMP is salvaged and noted in `warnings`.
std::vector<MetadataRecord> extract_metadata(const PdfDocument& doc, const RuleSet& rules,
                                             std::vector<std::string>* warnings = nullptr);
std::vector<MetadataRecord> extract_metadata(const PdfDocument& doc);

/// T, Contents and M of every annotation dictionary, in any revision.
std::vector<Finding> extract_annotations(const PdfDocument& doc);

/// `%` comments outside strings and stream bodies. The header line, the binary
/// marker line after it and `%%EOF` are structural and not reported.
std::vector<Finding> extract_comments(std::string_view bytes, const PdfDocument& doc);

/// Windows, UNC and home-directory paths in string objects and XMP values,
/// plus the account names they reveal.
std::vector<Finding> extract_paths(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                   const RuleSet& rules);
std::vector<Finding> extract_paths(const PdfDocument& doc);

/// Addresses in strings and metadata values, one finding per address
/// (case-insensitive). Exact when the address sits in an e-mail metadata key.
std::vector<Finding> extract_emails(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                    const RuleSet& rules);
std::vector<Finding> extract_emails(const PdfDocument& doc);

/// Brand lexicon matched against whole tokens of the brand fields.
std::vector<Finding> detect_hardware_brands(const std::vector<MetadataRecord>& records, const RuleSet& rules);
std::vector<Finding> detect_hardware_brands(const std::vector<MetadataRecord>& records);

/// Platform keys in non-metadata dictionaries, plus font registry data
/// (CIDSystemInfo and the BaseFont of the font carrying it).
std::vector<Finding> extract_platform_and_tool_objects(const PdfDocument& doc, const RuleSet& rules);
std::vector<Finding> extract_platform_and_tool_objects(const PdfDocument& doc);

/// JavaScript and Launch actions, file specifications.
std::vector<Finding> list_active_content(const PdfDocument& doc);

/// OrphanObject / ShadowObject findings for unreachable or superseded
/// objects that still hold text or metadata.
std::vector<Finding> extract_hidden_objects(const PdfDocument& doc);

/// Author identities from metadata records, plus bylines ("Prepared by ...")
/// in page text strings. Bylines are Heuristic and not identifying.
std::vector<Finding> extract_author_names(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                          const RuleSet& rules);

/// Signs of an embedded search index: a catalog /Search entry, a
/// non-standard name tree called *Index* or *Search*, or an attached `.pdx`
/// file. Reported only; there is no finding category and nothing is removed
/// beyond what the embedded-file rules already remove.
std::vector<std::string> detect_search_index(const PdfDocument& doc);

struct Extraction {
    std::vector<MetadataRecord> records;
    std::vector<Finding> findings;
    std::vector<std::string> warnings;
};

/// Runs every extractor. Findings are de-duplicated on (category, value);
/// the first occurrence is kept. Encrypted documents yield nothing.
Extraction run_extractors(const PdfDocument& doc, const RuleSet& rules);

/// Windows drive, UNC and home-directory paths in `text`, in match order.
std::vector<std::string> find_paths(std::string_view text);

/// Decoded text of the string operands in a content stream.
std::vector<std::string> content_strings(std::string_view content);

} // namespace pdffoot

#endif
