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

#include "pdffoot/text.hpp"

#include <array>
#include <optional>

namespace pdffoot {

namespace {

constexpr char32_t Replacement = 0xFFFD;

// PDFDocEncoding code points that differ from Latin-1. Zero marks an
// undefined code.
constexpr std::array<char32_t, 8> Low18 = {0x02D8, 0x02C7, 0x02C6, 0x02D9, 0x02DD, 0x02DB, 0x02DA, 0x02DC};

constexpr std::array<char32_t, 32> High80 = {
    0x2022, 0x2020, 0x2021, 0x2026, 0x2014, 0x2013, 0x0192, 0x2044, 0x2039, 0x203A, 0x2212,
    0x2030, 0x201E, 0x201C, 0x201D, 0x2018, 0x2019, 0x201A, 0x2122, 0xFB01, 0xFB02, 0x0141,
    0x0152, 0x0160, 0x0178, 0x017D, 0x0131, 0x0142, 0x0153, 0x0161, 0x017E, 0,
};

char32_t pdfdoc_to_unicode(unsigned char c)
{
    if (c >= 0x18 && c <= 0x1F) {
        return Low18[c - 0x18];
    }
    if (c >= 0x80 && c <= 0x9F) {
        return High80[c - 0x80];
    }
    if (c == 0xA0) {
        return 0x20AC;
    }
    if (c == 0xAD) {
        return 0;
    }
    return c;
}

std::optional<unsigned char> unicode_to_pdfdoc(char32_t cp)
{
    if (cp < 0x18 || (cp >= 0x20 && cp < 0x80) || (cp > 0xA0 && cp <= 0xFF && cp != 0xAD)) {
        return static_cast<unsigned char>(cp);
    }
    for (std::size_t i = 0; i < Low18.size(); ++i) {
        if (Low18[i] == cp) {
            return static_cast<unsigned char>(0x18 + i);
        }
    }
    for (std::size_t i = 0; i < High80.size(); ++i) {
        if (High80[i] != 0 && High80[i] == cp) {
            return static_cast<unsigned char>(0x80 + i);
        }
    }
    if (cp == 0x20AC) {
        return 0xA0;
    }
    return std::nullopt;
}

// Decodes UTF-8 leniently; invalid sequences become U+FFFD.
std::u32string utf8_to_u32(std::string_view s)
{
    std::u32string out;
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        int len = c < 0x80 ? 1 : (c >> 5) == 6 ? 2 : (c >> 4) == 14 ? 3 : (c >> 3) == 30 ? 4 : 0;
        if (len == 0 || i + len > s.size()) {
            out.push_back(Replacement);
            ++i;
            continue;
        }
        char32_t cp = len == 1 ? c : c & (0x7F >> len);
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!ok) {
            out.push_back(Replacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

} // namespace

std::string_view to_string(TextEncoding e)
{
    switch (e) {
    case TextEncoding::PdfDoc: return "PdfDoc";
    case TextEncoding::Utf16BE: return "Utf16BE";
    case TextEncoding::Utf8: return "Utf8";
    }
    return "?";
}

void append_utf8(std::string& out, char32_t cp)
{
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        cp = Replacement;
    }
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

DecodedString decode_string(std::string_view raw)
{
    DecodedString out;
    out.raw = std::string(raw);
    if (raw.size() >= 2 && static_cast<unsigned char>(raw[0]) == 0xFE && static_cast<unsigned char>(raw[1]) == 0xFF) {
        out.encoding = TextEncoding::Utf16BE;
        std::size_t i = 2;
        while (i + 1 < raw.size()) {
            char32_t unit = (static_cast<unsigned char>(raw[i]) << 8) | static_cast<unsigned char>(raw[i + 1]);
            i += 2;
            if (unit >= 0xD800 && unit <= 0xDBFF) {
                if (i + 1 < raw.size()) {
                    char32_t low = (static_cast<unsigned char>(raw[i]) << 8) | static_cast<unsigned char>(raw[i + 1]);
                    if (low >= 0xDC00 && low <= 0xDFFF) {
                        i += 2;
                        append_utf8(out.text, 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00));
                        continue;
                    }
                }
                append_utf8(out.text, Replacement);
                out.replaced = true;
            } else if (unit >= 0xDC00 && unit <= 0xDFFF) {
                append_utf8(out.text, Replacement);
                out.replaced = true;
            } else {
                append_utf8(out.text, unit);
            }
        }
        if (i < raw.size()) {
            // odd trailing byte
            append_utf8(out.text, Replacement);
            out.replaced = true;
        }
        return out;
    }
    if (raw.size() >= 3 && raw.substr(0, 3) == "\xEF\xBB\xBF") {
        out.encoding = TextEncoding::Utf8;
        for (char32_t cp : utf8_to_u32(raw.substr(3))) {
            append_utf8(out.text, cp);
        }
        out.replaced = out.text != raw.substr(3);
        return out;
    }
    out.encoding = TextEncoding::PdfDoc;
    for (char ch : raw) {
        char32_t cp = pdfdoc_to_unicode(static_cast<unsigned char>(ch));
        if (cp == 0) {
            if (ch == 0) {
                out.text.push_back('\0');
                continue;
            }
            cp = Replacement;
            out.replaced = true;
        }
        append_utf8(out.text, cp);
    }
    return out;
}

std::string encode_string(std::string_view utf8, TextEncoding preferred)
{
    auto cps = utf8_to_u32(utf8);
    if (preferred != TextEncoding::Utf16BE) {
        std::string out;
        bool fits = true;
        for (char32_t cp : cps) {
            auto b = unicode_to_pdfdoc(cp);
            if (!b) {
                fits = false;
                break;
            }
            out.push_back(static_cast<char>(*b));
        }
        if (fits) {
            return out;
        }
    }
    std::string out = "\xFE\xFF";
    auto unit = [&out](char32_t u) {
        out.push_back(static_cast<char>((u >> 8) & 0xFF));
        out.push_back(static_cast<char>(u & 0xFF));
    };
    for (char32_t cp : cps) {
        if (cp >= 0x10000) {
            cp -= 0x10000;
            unit(0xD800 + (cp >> 10));
            unit(0xDC00 + (cp & 0x3FF));
        } else {
            unit(cp);
        }
    }
    return out;
}

DecodedString utf8_value(std::string text)
{
    DecodedString d;
    d.raw = text;
    d.text = std::move(text);
    d.encoding = TextEncoding::Utf8;
    return d;
}

std::string ascii_lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v' || c == '\0'; };
    while (!s.empty() && ws(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && ws(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace pdffoot
