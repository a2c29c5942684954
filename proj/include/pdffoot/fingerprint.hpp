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

#ifndef PDFFOOT_FINGERPRINT_HPP
#define PDFFOOT_FINGERPRINT_HPP

#include "pdffoot/document.hpp"
#include "pdffoot/findings.hpp"
#include "pdffoot/rules.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

enum class DatePrecision { Year, Month, Day, Hour, Minute, Second };

struct Timestamp {
    int year = 0;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    int second = 0;
    /// Offset from UTC in minutes; nullopt when the string carried none.
    std::optional<int> offset_minutes;
    DatePrecision precision = DatePrecision::Second;
    /// Parsed despite a syntax deviation (e.g. missing `D:` prefix).
    bool lenient = false;
    std::string raw;

    /// ISO 8601 rendering; the offset is omitted when unknown.
    std::string iso() const;
    /// Seconds since 1970 of the local fields, ignoring the offset.
    long long naive_seconds() const;
    /// Seconds since 1970 in UTC when the offset is known, else naive.
    long long utc_seconds() const;
};

/// Parses `D:YYYYMMDDHHmmSSOHH'mm'`; every field after the year is optional.
/// A missing `D:` is accepted and marks the result lenient.
///
/// Throws Error(UnparsableDate).
Timestamp parse_pdf_date(std::string_view s);

/// Parses an XMP (ISO 8601) date such as 2019-04-04T13:16:51+02:00.
///
/// Throws Error(UnparsableDate).
Timestamp parse_xmp_date(std::string_view s);

/// Tries the PDF form, then the XMP form.
std::optional<Timestamp> try_parse_date(std::string_view s);

struct ToolFingerprint {
    std::string family;
    std::string version;
    std::string raw;
    OsHint os_hint = OsHint::Unknown;
    /// Substring that produced os_hint.
    std::string os_token;
    std::string rule_id;
};

/// First matching rule of the tool table applied to Producer, or to Creator
/// when Producer is absent or empty. Unmatched strings keep the raw string
/// as family under rule "fallback".
ToolFingerprint classify_tool(const std::optional<std::string>& producer, const std::optional<std::string>& creator,
                              const RuleSet& rules);
ToolFingerprint classify_tool(const std::optional<std::string>& producer, const std::optional<std::string>& creator);

enum class OsSource { Producer, Creator, PlatformKey };

std::string_view to_string(OsSource s);

struct OsEvidence {
    OsSource source = OsSource::Producer;
    OsHint os = OsHint::Unknown;
    std::string token;
};

struct OsVerdict {
    OsHint os = OsHint::Unknown;
    std::string token;
    bool conflict = false;
};

/// OS tokens found in `text`.
std::vector<OsEvidence> os_tokens(std::string_view text, OsSource source, const RuleSet& rules);

/// Producer hints beat Creator hints, which beat PlatformKey hints. Two
/// different systems from the winning source give Unknown with `conflict`.
OsVerdict infer_os(const std::vector<OsEvidence>& hints);

/// As above, with the Platform values of PlatformKey findings added.
OsVerdict infer_os(std::vector<OsEvidence> hints, const std::vector<Finding>& extra, const RuleSet& rules);

struct DocumentFingerprint {
    std::optional<std::string> author;
    ToolFingerprint tool;
    OsHint os = OsHint::Unknown;
    std::string os_token;
    std::optional<Timestamp> created;
    std::optional<Timestamp> modified;
    std::string source_file;
    std::string group_key;
    std::vector<std::string> warnings;

    /// Year of `created`, else of `modified`.
    std::optional<int> year() const;
};

struct FingerprintOptions {
    /// Let orphan metadata records supply identity fields.
    bool include_orphans = false;
};

DocumentFingerprint fingerprint_document(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                         const std::vector<Finding>& findings, const std::string& group_key,
                                         const RuleSet& rules, const FingerprintOptions& options = {});

/// Numeric, component-wise comparison of dotted versions. Missing components
/// sort first ("11" < "11.0"). Returns <0, 0, >0.
int compare_versions(std::string_view a, std::string_view b);

} // namespace pdffoot

#endif
