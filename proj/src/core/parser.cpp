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

#include "pdffoot/parser.hpp"

#include <limits>

namespace pdffoot {

namespace {

constexpr int MaxDepth = 256;

int hex_value(char c)
{
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

} // namespace

std::size_t Parser::skip_space(std::size_t pos) const
{
    while (pos < data_.size()) {
        char c = data_[pos];
        if (is_pdf_whitespace(c)) {
            ++pos;
        } else if (c == '%') {
            while (pos < data_.size() && data_[pos] != '\n' && data_[pos] != '\r') {
                ++pos;
            }
        } else {
            break;
        }
    }
    return pos;
}

bool Parser::keyword_at(std::size_t pos, std::string_view kw) const
{
    if (pos > data_.size() || data_.size() - pos < kw.size() || data_.compare(pos, kw.size(), kw) != 0) {
        return false;
    }
    std::size_t after = pos + kw.size();
    return after >= data_.size() || !is_regular(data_[after]);
}

std::optional<std::int64_t> Parser::read_uint(std::size_t& pos) const
{
    std::size_t p = pos;
    std::int64_t v = 0;
    while (p < data_.size() && is_digit(data_[p])) {
        if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
            return std::nullopt;
        }
        v = v * 10 + (data_[p] - '0');
        ++p;
    }
    if (p == pos || (p < data_.size() && is_regular(data_[p]))) {
        return std::nullopt;
    }
    pos = p;
    return v;
}

std::optional<std::pair<ObjectId, std::size_t>> Parser::read_object_header(std::size_t pos) const
{
    std::size_t p = pos;
    auto num = read_uint(p);
    if (!num || p >= data_.size() || !is_pdf_whitespace(data_[p])) {
        return std::nullopt;
    }
    while (p < data_.size() && is_pdf_whitespace(data_[p])) {
        ++p;
    }
    auto gen = read_uint(p);
    if (!gen) {
        return std::nullopt;
    }
    while (p < data_.size() && is_pdf_whitespace(data_[p])) {
        ++p;
    }
    if (!keyword_at(p, "obj")) {
        return std::nullopt;
    }
    if (*num < 1 || *num > std::numeric_limits<std::uint32_t>::max() || *gen > 65535) {
        return std::nullopt;
    }
    ObjectId id{static_cast<std::uint32_t>(*num), static_cast<std::uint16_t>(*gen)};
    return std::make_pair(id, p + 3);
}

PdfObject Parser::parse_object(std::size_t& pos) const { return parse_value(pos, 0); }

String Parser::parse_literal_string(std::size_t& pos) const
{
    String s;
    if (record_offsets_) {
        s.offset = pos;
    }
    ++pos; // (
    int nesting = 1;
    while (pos < data_.size()) {
        char c = data_[pos++];
        if (c == '\\') {
            if (pos >= data_.size()) {
                break;
            }
            char e = data_[pos++];
            switch (e) {
            case 'n': s.bytes.push_back('\n'); break;
            case 'r': s.bytes.push_back('\r'); break;
            case 't': s.bytes.push_back('\t'); break;
            case 'b': s.bytes.push_back('\b'); break;
            case 'f': s.bytes.push_back('\f'); break;
            case '(': s.bytes.push_back('('); break;
            case ')': s.bytes.push_back(')'); break;
            case '\\': s.bytes.push_back('\\'); break;
            case '\r':
                if (pos < data_.size() && data_[pos] == '\n') {
                    ++pos;
                }
                break;
            case '\n': break;
            default:
                if (e >= '0' && e <= '7') {
                    int v = e - '0';
                    for (int k = 0; k < 2 && pos < data_.size() && data_[pos] >= '0' && data_[pos] <= '7'; ++k) {
                        v = v * 8 + (data_[pos++] - '0');
                    }
                    s.bytes.push_back(static_cast<char>(v & 0xFF));
                } else {
                    s.bytes.push_back(e);
                }
            }
        } else if (c == '(') {
            ++nesting;
            s.bytes.push_back(c);
        } else if (c == ')') {
            if (--nesting == 0) {
                return s;
            }
            s.bytes.push_back(c);
        } else if (c == '\r') {
            if (pos < data_.size() && data_[pos] == '\n') {
                ++pos;
            }
            s.bytes.push_back('\n');
        } else {
            s.bytes.push_back(c);
        }
    }
    throw ParseError(pos, "unterminated string");
}

String Parser::parse_hex_string(std::size_t& pos) const
{
    String s;
    s.hex = true;
    if (record_offsets_) {
        s.offset = pos;
    }
    ++pos; // <
    int hi = -1;
    while (pos < data_.size()) {
        char c = data_[pos++];
        if (c == '>') {
            if (hi >= 0) {
                s.bytes.push_back(static_cast<char>(hi << 4));
            }
            return s;
        }
        if (is_pdf_whitespace(c)) {
            continue;
        }
        int v = hex_value(c);
        if (v < 0) {
            throw ParseError(pos - 1, "bad hex digit");
        }
        if (hi < 0) {
            hi = v;
        } else {
            s.bytes.push_back(static_cast<char>((hi << 4) | v));
            hi = -1;
        }
    }
    throw ParseError(pos, "unterminated hex string");
}

Name Parser::parse_name(std::size_t& pos) const
{
    Name n;
    ++pos; // /
    while (pos < data_.size() && is_regular(data_[pos])) {
        char c = data_[pos];
        if (c == '#' && pos + 2 < data_.size() && hex_value(data_[pos + 1]) >= 0 && hex_value(data_[pos + 2]) >= 0) {
            n.value.push_back(static_cast<char>((hex_value(data_[pos + 1]) << 4) | hex_value(data_[pos + 2])));
            pos += 3;
        } else {
            n.value.push_back(c);
            ++pos;
        }
    }
    return n;
}

PdfObject Parser::parse_value(std::size_t& pos, int depth) const
{
    if (depth > MaxDepth) {
        throw ParseError(pos, "nesting too deep");
    }
    pos = skip_space(pos);
    if (pos >= data_.size()) {
        throw ParseError(pos, "unexpected end of data");
    }
    char c = data_[pos];
    if (c == '(') {
        return parse_literal_string(pos);
    }
    if (c == '<') {
        if (pos + 1 < data_.size() && data_[pos + 1] == '<') {
            pos += 2;
            Dictionary dict;
            while (true) {
                pos = skip_space(pos);
                if (pos >= data_.size()) {
                    throw ParseError(pos, "unterminated dictionary");
                }
                if (data_[pos] == '>' && pos + 1 < data_.size() && data_[pos + 1] == '>') {
                    pos += 2;
                    return dict;
                }
                if (data_[pos] != '/') {
                    throw ParseError(pos, "dictionary key is not a name");
                }
                Name key = parse_name(pos);
                pos = skip_space(pos);
                if (pos + 1 < data_.size() && data_[pos] == '>' && data_[pos + 1] == '>') {
                    dict.set(std::move(key.value), Null{});
                    continue;
                }
                PdfObject value = parse_value(pos, depth + 1);
                // First occurrence wins for duplicate keys.
                if (!dict.contains(key.value)) {
                    dict.set(std::move(key.value), std::move(value));
                }
            }
        }
        return parse_hex_string(pos);
    }
    if (c == '[') {
        ++pos;
        Array arr;
        while (true) {
            pos = skip_space(pos);
            if (pos >= data_.size()) {
                throw ParseError(pos, "unterminated array");
            }
            if (data_[pos] == ']') {
                ++pos;
                return arr;
            }
            arr.push_back(parse_value(pos, depth + 1));
        }
    }
    if (c == '/') {
        return parse_name(pos);
    }
    if (is_digit(c) || c == '+' || c == '-' || c == '.') {
        std::size_t start = pos;
        std::size_t p = pos;
        if (data_[p] == '+' || data_[p] == '-') {
            ++p;
        }
        bool dot = false;
        bool digits = false;
        while (p < data_.size() && (is_digit(data_[p]) || (data_[p] == '.' && !dot))) {
            if (data_[p] == '.') {
                dot = true;
            } else {
                digits = true;
            }
            ++p;
        }
        if (!digits) {
            throw ParseError(pos, "malformed number");
        }
        // Some writers emit things like "0.0.0" or "--1"; swallow the junk.
        while (p < data_.size() && is_regular(data_[p]) && (is_digit(data_[p]) || data_[p] == '.' || data_[p] == '-')) {
            ++p;
        }
        std::string_view tok = data_.substr(start, p - start);
        pos = p;
        if (dot) {
            return Real{std::string(tok)};
        }
        std::int64_t value = 0;
        bool neg = tok.front() == '-';
        for (char d : tok) {
            if (is_digit(d)) {
                if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
                    return Real{std::string(tok)};
                }
                value = value * 10 + (d - '0');
            }
        }
        if (neg) {
            value = -value;
        }
        // Look ahead for "G R".
        if (!neg && tok.front() != '+' && value >= 1 && value <= std::numeric_limits<std::uint32_t>::max()) {
            std::size_t q = pos;
            while (q < data_.size() && is_pdf_whitespace(data_[q])) {
                ++q;
            }
            if (q > pos) {
                std::size_t g = q;
                auto gen = read_uint(g);
                if (gen && *gen <= 65535) {
                    std::size_t r = g;
                    while (r < data_.size() && is_pdf_whitespace(data_[r])) {
                        ++r;
                    }
                    if (r > g && keyword_at(r, "R")) {
                        pos = r + 1;
                        return Reference{{static_cast<std::uint32_t>(value), static_cast<std::uint16_t>(*gen)}};
                    }
                }
            }
        }
        return value;
    }
    if (keyword_at(pos, "true")) {
        pos += 4;
        return true;
    }
    if (keyword_at(pos, "false")) {
        pos += 5;
        return false;
    }
    if (keyword_at(pos, "null")) {
        pos += 4;
        return Null{};
    }
    throw ParseError(pos, "unexpected token");
}

IndirectObject Parser::parse_indirect(std::size_t pos) const
{
    auto header = read_object_header(pos);
    if (!header) {
        throw ParseError(pos, "expected object header");
    }
    IndirectObject out;
    out.id = header->first;
    out.offset = pos;
    std::size_t p = header->second;
    out.object = parse_object(p);
    p = skip_space(p);

    if (out.object.is_dict() && keyword_at(p, "stream")) {
        p += 6;
        // EOL after `stream`: CRLF or LF, tolerate a bare CR.
        if (p < data_.size() && data_[p] == '\r') {
            ++p;
        }
        if (p < data_.size() && data_[p] == '\n') {
            ++p;
        }
        std::size_t data_start = p;
        Stream stream;
        stream.dict = std::move(out.object.as_dict());

        std::optional<std::int64_t> declared;
        if (const auto* len = stream.dict.find("Length")) {
            if (len->is_integer()) {
                declared = len->as_integer();
            } else if (len->is_ref() && resolve_length_) {
                declared = resolve_length_(len->as_ref());
            }
        }

        std::optional<std::size_t> data_end;
        if (declared && *declared >= 0 && data_start + static_cast<std::size_t>(*declared) <= data_.size()) {
            std::size_t e = data_start + static_cast<std::size_t>(*declared);
            std::size_t q = e;
            while (q < data_.size() && is_pdf_whitespace(data_[q])) {
                ++q;
            }
            if (keyword_at(q, "endstream")) {
                data_end = e;
                p = q + 9;
            }
        }
        if (!data_end) {
            auto found = data_.find("endstream", data_start);
            if (found == std::string_view::npos) {
                throw ParseError(data_start, "missing endstream");
            }
            std::size_t e = found;
            if (e > data_start && data_[e - 1] == '\n') {
                --e;
                if (e > data_start && data_[e - 1] == '\r') {
                    --e;
                }
            } else if (e > data_start && data_[e - 1] == '\r') {
                --e;
            }
            data_end = e;
            p = found + 9;
            stream.length_mismatch = true;
        }
        stream.data = std::string(data_.substr(data_start, *data_end - data_start));
        out.stream_data = std::make_pair(data_start, *data_end);
        out.object = std::move(stream);
        p = skip_space(p);
    }

    if (keyword_at(p, "endobj")) {
        out.end = p + 6;
    } else {
        out.missing_endobj = true;
        out.end = p;
    }
    return out;
}

} // namespace pdffoot
