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

#include "pdffoot/errors.hpp"
#include "pdffoot/extract.hpp"
#include "pdffoot/sanitize.hpp"

#include "support.hpp"

using namespace pdffoot;
using namespace pdffoot::testkit;

namespace {

bool has_category(const std::vector<Finding>& findings, FindingCategory c)
{
    for (const auto& f : findings) {
        if (f.category == c && f.identifying) {
            return true;
        }
    }
    return false;
}

std::size_t info_like_objects(std::string_view bytes)
{
    const auto& rules = *RuleSet::defaults();
    std::size_t n = 0;
    for (const auto& s : raw_scan(bytes)) {
        const auto* d = s.object.dict();
        if (!d) {
            continue;
        }
        std::size_t keys = 0;
        for (const auto& [k, v] : *d) {
            keys += rules.is_canonical(k) ? 1 : 0;
        }
        n += keys >= 2 ? 1 : 0;
    }
    return n;
}

} // namespace

TEST_CASE("level 2 removes every metadata record, including hidden ones")
{
    for (const char* family : {"full-metadata", "weak-exiftool", "incremental", "objstm-metadata", "xmp-metadata"}) {
        CAPTURE(family);
        for (std::uint64_t seed : {0, 1, 2, 3}) {
            auto f = make_fixture(family, seed);
            auto r = sanitize(f.bytes, SanitizeOptions{2});
            auto doc = parse_document(r.bytes);
            CHECK(extract_metadata(doc).empty());
            CHECK(info_like_objects(r.bytes) == 0);
            CHECK(r.log.verified_level.value() >= 2);
            CHECK(r.log.requested_level == 2);
        }
    }
}

TEST_CASE("level 2 leaves content streams untouched")
{
    for (const auto& f : sanitizer_corpus(2, 40)) {
        CAPTURE(f.manifest.id);
        auto r = sanitize(f.bytes, SanitizeOptions{2});
        CHECK(testing::raw_page_streams(parse_document(r.bytes)) == testing::raw_page_streams(parse_document(f.bytes)));
        CHECK(r.log.verified_level.value() >= 2);
    }
}

TEST_CASE("level 3 on the annotation example")
{
    auto f = make_fixture("annotation");
    auto r = sanitize(f.bytes);
    auto doc = parse_document(r.bytes);
    auto ex = run_extractors(doc, *RuleSet::defaults());
    CHECK_FALSE(has_category(ex.findings, FindingCategory::Annotation));
    CHECK(r.bytes.find("sab") == std::string::npos);
    CHECK(testing::raw_page_streams(doc) == testing::raw_page_streams(parse_document(f.bytes)));
    CHECK(r.assessment.level == 3);
    CHECK(r.assessment.weak_flags.empty());
    // Removed annotations are logged once; their fields are not listed again.
    REQUIRE(r.log.removed.size() == 2);
    CHECK(r.log.removed[0].category == "Annotation");
    CHECK(r.log.removed[0].description == "annotation Text");
    CHECK(r.log.removed[1].description == "annotation Popup");
    CHECK_FALSE(doc.get(ObjectId{152, 1}));
}

TEST_CASE("level 3 blanking keeps annotation geometry")
{
    auto f = make_fixture("annotation");
    SanitizeOptions opts;
    opts.blank_annotations = true;
    auto r = sanitize(f.bytes, opts);
    auto doc = parse_document(r.bytes);
    const auto* annot = doc.get(ObjectId{152, 1});
    REQUIRE(annot);
    CHECK(annot->dict()->contains("Rect"));
    CHECK_FALSE(annot->dict()->contains("T"));
    CHECK(r.assessment.level == 3);
}

TEST_CASE("level 3 reduces paths to their basename")
{
    auto f = make_fixture("path-alt");
    auto r = sanitize(f.bytes);
    auto doc = parse_document(r.bytes);
    const auto* elem = doc.get(ObjectId{19693, 0});
    REQUIRE(elem);
    CHECK(decode_string(elem->dict()->find("Alt")->as_string().bytes).text == "Description: scml.JPG");
    CHECK(r.bytes.find("Mazhar") == std::string::npos);
}

TEST_CASE("level 3 keeps scripts on request")
{
    auto f = make_fixture("script");
    SanitizeOptions opts;
    opts.keep_scripts = true;
    auto r = sanitize(f.bytes, opts);
    CHECK(r.bytes.find("app.alert") != std::string::npos);
    CHECK(r.assessment.level == 3);
    auto plain = sanitize(f.bytes);
    CHECK(plain.bytes.find("app.alert") == std::string::npos);
}

TEST_CASE("fonts survive level 3")
{
    auto f = make_fixture("platform-object");
    auto r = sanitize(f.bytes);
    auto before = parse_document(f.bytes);
    auto after = parse_document(r.bytes);
    REQUIRE(after.get(ObjectId{15, 0}));
    CHECK(testing::same_object(*before.get(ObjectId{15, 0}), *after.get(ObjectId{15, 0})));
    CHECK(after.get(ObjectId{23, 0}));
    CHECK(r.bytes.find("Macintosh") == std::string::npos);
}

TEST_CASE("already clean input: nothing removed, output stable")
{
    auto f = make_fixture("minimal");
    auto r = sanitize(f.bytes);
    CHECK(r.log.removed.empty());
    CHECK(r.assessment.level == 3);
    CHECK(sanitize(r.bytes).bytes == r.bytes);
}

TEST_CASE("no self-identifying producer")
{
    auto r = sanitize(make_fixture("full-metadata").bytes);
    CHECK(r.bytes.find("Producer") == std::string::npos);
    CHECK(r.bytes.find("pdffoot") == std::string::npos);
}

TEST_CASE("log JSON")
{
    auto r = sanitize(make_fixture("weak-exiftool").bytes);
    auto j = nlohmann::json::parse(r.log.to_json());
    CHECK(j["requested_level"] == 3);
    CHECK(j["verified_level"] == 3);
    CHECK(j["bytes_before"].get<std::size_t>() > 0);
    CHECK(j["removed"].size() >= 1);
}

TEST_CASE("errors")
{
    PdfBuilder b;
    Dictionary cat;
    cat.set("Type", PdfObject::name("Catalog"));
    b.trailer("Root", PdfObject(Reference{b.add(PdfObject(cat))}));
    b.trailer("Encrypt", PdfObject(Reference{b.add(PdfObject(Dictionary{}))}));
    try {
        sanitize(b.build());
        FAIL("sanitized");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EncryptedInput);
    }

    // Font dictionaries are copied unchanged, so a rule flagging a font key
    // cannot be satisfied and the output is withheld.
    auto rules = RuleSet::parse("platform_key\tBaseFont\n");
    try {
        sanitize(make_fixture("minimal").bytes, SanitizeOptions{}, *rules);
        FAIL("sanitized");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VerificationFailed);
    }
    CHECK_THROWS_AS(sanitize(make_fixture("minimal").bytes, SanitizeOptions{4}), Error);
}

TEST_CASE("verify runs the full pipeline")
{
    const auto& rules = *RuleSet::defaults();
    CHECK(verify(make_fixture("weak-exiftool").bytes, rules).level == 2);
    CHECK(verify(make_fixture("script").bytes, rules).level == 2);
    CHECK(verify(make_fixture("script").bytes, rules, true).level == 3);
}
