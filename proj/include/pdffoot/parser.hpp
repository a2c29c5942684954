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

#ifndef PDFFOOT_PARSER_HPP
#define PDFFOOT_PARSER_HPP

#include "pdffoot/errors.hpp"
#include "pdffoot/object.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

namespace pdffoot {

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::MalformedPdf, what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline bool is_pdf_whitespace(char c)
{
    return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0';
}

inline bool is_pdf_delimiter(char c)
{
    return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' || c == '{' || c == '}' || c == '/' ||
           c == '%';
}

inline bool is_regular(char c) { return !is_pdf_whitespace(c) && !is_pdf_delimiter(c); }

/// One `N G obj ... endobj` span.
struct IndirectObject {
    ObjectId id;
    PdfObject object;
    std::size_t offset = 0; // of the object number
    std::size_t end = 0;    // one past `endobj` (or past the object when it is missing)
    bool missing_endobj = false;
    /// Byte range of stream data, if the object is a stream.
    std::optional<std::pair<std::size_t, std::size_t>> stream_data;
};

/// Recursive-descent reader for PDF object syntax over an in-memory buffer.
/// All positions are absolute offsets into the buffer.
class Parser {
public:
    using LengthResolver = std::function<std::optional<std::int64_t>(ObjectId)>;

    explicit Parser(std::string_view data, bool record_offsets = true)
        : data_(data), record_offsets_(record_offsets)
    {
    }

    void set_length_resolver(LengthResolver r) { resolve_length_ = std::move(r); }

    /// Skips whitespace and comments starting at `pos`.
    std::size_t skip_space(std::size_t pos) const;

    /// Parses one direct object; `pos` is advanced past it.
    PdfObject parse_object(std::size_t& pos) const;

    /// Parses `N G obj <object> [stream...] endobj` at `pos`.
    IndirectObject parse_indirect(std::size_t pos) const;

    /// Reads `N G obj` header at `pos`; returns the id and the position after `obj`.
    std::optional<std::pair<ObjectId, std::size_t>> read_object_header(std::size_t pos) const;

    /// True if the keyword `kw` starts at `pos` and is followed by a non-regular byte.
    bool keyword_at(std::size_t pos, std::string_view kw) const;

    std::string_view data() const { return data_; }

private:
    PdfObject parse_value(std::size_t& pos, int depth) const;
    String parse_literal_string(std::size_t& pos) const;
    String parse_hex_string(std::size_t& pos) const;
    Name parse_name(std::size_t& pos) const;
    std::optional<std::int64_t> read_uint(std::size_t& pos) const;

    std::string_view data_;
    bool record_offsets_;
    LengthResolver resolve_length_;
};

} // namespace pdffoot

#endif
