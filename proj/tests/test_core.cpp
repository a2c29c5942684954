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


#include "doctest.h"

#include "pdffoot/document.hpp"
#include "pdffoot/errors.hpp"
#include "pdffoot/filters.hpp"
#include "pdffoot/parser.hpp"
#include "pdffoot/text.hpp"
#include "pdffoot/writer.hpp"

#include "support.hpp"

using namespace pdffoot;
using namespace pdffoot::testkit;

namespace {

PdfObject parse_one(std::string_view text)
{
    Parser p(text);
    std::size_t pos = 0;
    return p.parse_object(pos);
}

std::string written(const PdfObject& obj)
{
    std::string out;
    write_object(out, obj);
    return out;
}

} // namespace

TEST_CASE("objects: scalar tokens")
{
    CHECK(parse_one("null").is_null());
    CHECK(parse_one("true").as_bool());
    CHECK(parse_one("-42").as_integer() == -42);
    CHECK(parse_one("+17").as_integer() == 17);
    CHECK(parse_one("3.25").as_number() == doctest::Approx(3.25));
    CHECK(parse_one(".5").as_number() == doctest::Approx(0.5));
    CHECK(parse_one("/Name#20With#2FEscapes").as_name() == "Name With/Escapes");
    CHECK(parse_one("12 0 R").as_ref() == ObjectId{12, 0});
}

TEST_CASE("objects: literal strings")
{
    CHECK(parse_one("(a (nested) string)").as_string().bytes == "a (nested) string");
    CHECK(parse_one(R"((esc\)aped\\ \n\101))").as_string().bytes == "esc)aped\\ \nA");
    CHECK(parse_one("(line\\\ncontinued)").as_string().bytes == "linecontinued");
    CHECK(parse_one("(cr\r\nlf)").as_string().bytes == "cr\nlf");
}

TEST_CASE("objects: hex strings")
{
    auto s = parse_one("<FEFF 0073 0061 0062>").as_string();
    CHECK(s.hex);
    CHECK(s.bytes == std::string("\xFE\xFF\x00s\x00" "a\x00" "b", 8));
    CHECK(parse_one("<414>").as_string().bytes == "A@");
}

TEST_CASE("objects: containers keep key order")
{
    auto d = parse_one("<< /Z 1 /A [1 2 (x)] /M << /Q /R >> >>");
    REQUIRE(d.is_dict());
    std::vector<std::string> keys;
    for (const auto& [k, v] : d.as_dict()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"Z", "A", "M"});
    CHECK(d.as_dict().find("A")->as_array().size() == 3);
    CHECK(d.as_dict().find("M")->as_dict().name("Q") == "R");
}

TEST_CASE("objects: writer output parses back to the same value")
{
    const char* samples[] = {
        "<< /Type /Page /Rect [0 0 612.5 792] /T <FEFF0073> /S (a\\)b) /N null /B false >>",
        "[/A#20B 1 -2 3.5 (x\\ny) << >> []]",
        "(\\000\\377 bytes)",
    };
    for (const char* s : samples) {
        auto obj = parse_one(s);
        CHECK(parse_one(written(obj)) == obj);
    }
}

TEST_CASE("objects: indirect object with stream")
{
    std::string text = "7 0 obj\n<< /Length 5 >>\nstream\nhello\nendstream\nendobj\n";
    Parser p(text);
    auto io = p.parse_indirect(0);
    CHECK(io.id == ObjectId{7, 0});
    REQUIRE(io.object.is_stream());
    CHECK(io.object.as_stream().data == "hello");
    CHECK_FALSE(io.object.as_stream().length_mismatch);
}

TEST_CASE("objects: wrong stream length falls back to endstream")
{
    std::string text = "7 0 obj\n<< /Length 99 >>\nstream\nhello\nendstream\nendobj\n";
    Parser p(text);
    auto io = p.parse_indirect(0);
    REQUIRE(io.object.is_stream());
    CHECK(io.object.as_stream().data == "hello");
    CHECK(io.object.as_stream().length_mismatch);
}

TEST_CASE("filters: flate round trip and hex")
{
    std::string data = "BT /F1 12 Tf 72 720 Td (Hello) Tj ET\n";
    CHECK(flate_decode(flate_encode(data)) == data);
    CHECK(ascii_hex_decode("48 65 6c6C 6f>") == "Hello");
    CHECK(ascii_hex_decode("414") == "A@");

    Stream s;
    s.dict.set("Filter", PdfObject(Array{PdfObject::name("ASCIIHexDecode"), PdfObject::name("FlateDecode")}));
    std::string packed = flate_encode(data);
    std::string hex;
    for (unsigned char c : packed) {
        static const char* digits = "0123456789ABCDEF";
        hex.push_back(digits[c >> 4]);
        hex.push_back(digits[c & 15]);
    }
    s.data = hex + ">";
    CHECK(decode_stream(s) == data);
}

TEST_CASE("filters: unsupported and corrupt streams")
{
    Stream s;
    s.dict.set("Filter", PdfObject::name("JBIG2Decode"));
    s.data = "xx";
    CHECK_THROWS_AS(decode_stream(s), UnsupportedFilter);

    std::string packed = flate_encode(std::string(1000, 'a'));
    packed.resize(packed.size() / 2);
    try {
        flate_decode(packed);
        FAIL("truncated data decoded");
    } catch (const CorruptStream& e) {
        CHECK(e.code() == ErrorCode::CorruptStream);
    }
}

TEST_CASE("text: string encodings")
{
    auto u = decode_string(std::string("\xFE\xFF\x00s\x00" "a\x00" "b", 8));
    CHECK(u.text == "sab");
    CHECK(u.encoding == TextEncoding::Utf16BE);

    auto p = decode_string("caf\xE9");
    CHECK(p.text == "caf\xC3\xA9");
    CHECK(p.encoding == TextEncoding::PdfDoc);

    CHECK(decode_string("\xEF\xBB\xBFok").text == "ok");
    CHECK(decode_string(encode_string("changes made by john doe", TextEncoding::Utf16BE)).text ==
          "changes made by john doe");
    // Characters outside PDFDocEncoding force UTF-16BE.
    CHECK(decode_string(encode_string("\xE6\x97\xA5", TextEncoding::PdfDoc)).encoding == TextEncoding::Utf16BE);
}

TEST_CASE("document: rejects non-PDF input")
{
    try {
        parse_document("just some text");
        FAIL("parsed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAPdf);
    }
    try {
        parse_document("%PDF-1.7\nnothing here\n%%EOF\n");
        FAIL("parsed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoObjectsFound);
    }
}

TEST_CASE("document: header may be preceded by junk")
{
    auto f = make_fixture("minimal");
    auto doc = parse_document(std::string(200, ' ') + f.bytes);
    CHECK(doc.header_offset == 200);
    CHECK(testing::object_ids(doc) == f.manifest.objects);
}

TEST_CASE("document: object set, orphans and shadows match every manifest")
{
    auto fixtures = all_families();
    auto more = sanitizer_corpus(3, 101);
    fixtures.insert(fixtures.end(), more.begin(), more.end());
    for (const auto& f : fixtures) {
        CAPTURE(f.manifest.id);
        auto doc = parse_document(f.bytes);
        CHECK(testing::object_ids(doc) == f.manifest.objects);
        CHECK(doc.orphans == f.manifest.orphans);
        std::set<ObjectId> shadows;
        for (const auto& s : doc.shadows) {
            shadows.insert(s.id);
        }
        CHECK(shadows == f.manifest.shadows);
        CHECK_FALSE(doc.encrypted);
    }
}

TEST_CASE("document: raw scan finds the objects written outside object streams")
{
    for (const auto& f : all_families()) {
        CAPTURE(f.manifest.id);
        auto scanned = raw_scan(f.bytes);
        std::set<ObjectId> ids;
        for (const auto& s : scanned) {
            ids.insert(s.id);
        }
        auto doc = parse_document(f.bytes);
        // Every manifest object is either scanned directly or a member of a
        // scanned object stream.
        for (const auto& id : f.manifest.objects) {
            const auto* rec = doc.record(id);
            REQUIRE(rec);
            if (rec->provenance == Provenance::ObjectStream) {
                REQUIRE(rec->container);
                CHECK(ids.count(*rec->container));
            } else {
                CHECK(ids.count(id));
            }
        }
        // Nothing spurious from strings, comments or stream bodies.
        for (const auto& id : ids) {
            CHECK((f.manifest.objects.count(id) || doc.structural.count(id)));
        }
    }
}

TEST_CASE("document: weak-exiftool info is an orphan recovered by raw scan")
{
    auto f = make_fixture("weak-exiftool");
    auto doc = parse_document(f.bytes);
    CHECK(doc.current_trailer()->find("Info") == nullptr);
    REQUIRE(f.manifest.orphans.size() == 1);
    auto id = *f.manifest.orphans.begin();
    REQUIRE(doc.get(id));
    CHECK(doc.get(id)->dict()->contains("Author"));
    CHECK_FALSE(doc.live.count(id));
}

TEST_CASE("document: incremental update keeps superseded versions")
{
    auto f = make_fixture("incremental");
    auto doc = parse_document(f.bytes);
    CHECK(doc.trailers.size() == 2);
    bool found_draft = false;
    for (const auto& s : doc.shadows) {
        if (const auto* d = s.record.object.dict(); d && d->find("Title")) {
            found_draft = decode_string(d->find("Title")->as_string().bytes).text == "Draft";
        }
    }
    CHECK(found_draft);
}

TEST_CASE("document: object stream members")
{
    auto f = make_fixture("objstm-metadata");
    auto doc = parse_document(f.bytes);
    std::size_t packed = 0;
    for (const auto& [id, rec] : doc.objects) {
        if (rec.provenance == Provenance::ObjectStream) {
            ++packed;
        }
    }
    CHECK(packed == 3);
    CHECK(doc.structural.size() == 2); // object stream and xref stream
}

TEST_CASE("document: truncated file still yields its objects")
{
    auto f = make_fixture("full-metadata");
    auto cut = f.bytes.substr(0, f.bytes.find("xref"));
    auto doc = parse_document(cut);
    CHECK(testing::object_ids(doc) == f.manifest.objects);
    CHECK_FALSE(doc.warnings.empty());
}

TEST_CASE("document: damaged xref offsets are repaired by the raw scan")
{
    auto f = make_fixture("full-metadata");
    auto bytes = f.bytes;
    auto pos = bytes.find("0000000015 00000 n");
    if (pos != std::string::npos) {
        bytes.replace(pos, 10, "0000000001");
    }
    auto doc = parse_document(bytes);
    CHECK(testing::object_ids(doc) == f.manifest.objects);
}

TEST_CASE("writer: parse, serialize, parse is graph-equivalent for every family")
{
    auto fixtures = all_families();
    auto more = sanitizer_corpus(2, 55);
    fixtures.insert(fixtures.end(), more.begin(), more.end());
    for (const auto& f : fixtures) {
        CAPTURE(f.manifest.id);
        auto a = parse_document(f.bytes);
        auto bytes = serialize_document(a);
        auto b = parse_document(bytes);
        std::string why;
        CHECK_MESSAGE(testing::graph_equivalent(a, b, &why), why);
        CHECK(b.orphans.empty());
        CHECK(b.shadows.empty());
        CHECK(serialize_document(b) == bytes);
    }
}

TEST_CASE("writer: requires a Root")
{
    WriteGraph g;
    try {
        write_pdf(g);
        FAIL("wrote");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoRoot);
    }
}

TEST_CASE("page contents are decoded")
{
    auto f = make_fixture("minimal");
    auto doc = parse_document(f.bytes);
    auto pages = page_contents(doc);
    REQUIRE(pages.size() == 1);
    CHECK(pages[0].find("(Hello, world) Tj") != std::string::npos);
}
