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

#ifndef PDFFOOT_TEXT_HPP
#define PDFFOOT_TEXT_HPP

#include <string>
#include <string_view>

namespace pdffoot {

enum class TextEncoding {
    PdfDoc,
    Utf16BE,
    Utf8, // XMP packets, and strings starting with EF BB BF
};

std::string_view to_string(TextEncoding e);

/// A PDF text string decoded to UTF-8.
struct DecodedString {
    std::string text; // UTF-8
    TextEncoding encoding = TextEncoding::PdfDoc;
    std::string raw;
    /// Set when undecodable input was replaced with U+FFFD.
    bool replaced = false;

    bool operator==(const DecodedString&) const = default;
};

/// Decodes the unescaped bytes of a string object. FE FF selects UTF-16BE,
/// EF BB BF selects UTF-8,
/// anything else is PDFDocEncoding. Never throws.
DecodedString decode_string(std::string_view raw);

/// Inverse of decode_string for the given encoding. Characters that do not fit
/// PDFDocEncoding force a UTF-16BE result.
std::string encode_string(std::string_view utf8, TextEncoding preferred);

DecodedString utf8_value(std::string text);

void append_utf8(std::string& out, char32_t cp);

/// Lower-cases ASCII letters only.
std::string ascii_lower(std::string_view s);

/// Trims ASCII whitespace at both ends.
std::string_view trim(std::string_view s);

} // namespace pdffoot

#endif
