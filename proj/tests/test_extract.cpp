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
#include "pdffoot/extract.hpp"
#include "pdffoot/fingerprint.hpp"
#include "pdffoot/xmp.hpp"

#include "support.hpp"

#include <algorithm>

using namespace pdffoot;
using namespace pdffoot::testkit;

namespace {

Extraction extract(const Fixture& f)
{
    auto doc = parse_document(f.bytes);
    return run_extractors(doc, *RuleSet::defaults());
}

bool has(const std::vector<Finding>& findings, FindingCategory c, std::string_view value)
{
    return std::any_of(findings.begin(), findings.end(),
                       [&](const Finding& f) { return f.category == c && f.value == value; });
}

const Finding* first(const std::vector<Finding>& findings, FindingCategory c)
{
    for (const auto& f : findings) {
        if (f.category == c) {
            return &f;
        }
    }
    return nullptr;
}

} // namespace

TEST_CASE("findings equal the declared leaks on every fixture")
{
    auto fixtures = all_families();
    auto more = sanitizer_corpus(12);
    fixtures.insert(fixtures.end(), more.begin(), more.end());
    for (const auto& f : fixtures) {
        CAPTURE(f.manifest.id);
        CHECK(testing::leaks_of(extract(f).findings) == f.manifest.leaks);
    }
}

TEST_CASE("path in Alt text")
{
    auto ex = extract(make_fixture("path-alt"));
    CHECK(has(ex.findings, FindingCategory::Path, "C:\\Users\\Mazhar\\Desktop\\scml.JPG"));
    const auto* user = first(ex.findings, FindingCategory::Username);
    REQUIRE(user);
    CHECK(user->value == "Mazhar");
    CHECK(user->confidence == Confidence::Exact);
    CHECK(user->evidence.object == ObjectId{19693, 0});
    CHECK(user->evidence.excerpt.find("Mazhar") != std::string::npos);
}

TEST_CASE("find_paths forms")
{
    CHECK(find_paths("Description: C:\\Users\\Mazhar\\Desktop\\scml.JPG") ==
          std::vector<std::string>{"C:\\Users\\Mazhar\\Desktop\\scml.JPG"});
    CHECK(find_paths("see /home/jdoe/work/fig.png.") == std::vector<std::string>{"/home/jdoe/work/fig.png"});
    CHECK(find_paths("\\\\server\\share\\doc.docx") == std::vector<std::string>{"\\\\server\\share\\doc.docx"});
    CHECK(find_paths("no path, 1/2 of it").empty());
}

TEST_CASE("Documents and Settings user names are heuristic")
{
    for (std::uint64_t seed = 1; seed < 60; ++seed) {
        auto f = make_fixture("path-alt", seed);
        auto ex = extract(f);
        const auto* p = first(ex.findings, FindingCategory::Path);
        REQUIRE(p);
        if (p->value.find("Documents and Settings") == std::string::npos) {
            continue;
        }
        const auto* u = first(ex.findings, FindingCategory::Username);
        REQUIRE(u);
        CHECK(u->confidence == Confidence::Heuristic);
        return;
    }
    FAIL("no Documents and Settings instance generated");
}

TEST_CASE("annotation author and contents, UTF-16BE")
{
    auto ex = extract(make_fixture("annotation"));
    CHECK(has(ex.findings, FindingCategory::Annotation, "sab"));
    CHECK(has(ex.findings, FindingCategory::Annotation, "changes made by john doe"));
    CHECK(has(ex.findings, FindingCategory::Annotation, "D:20210225232546"));
    const auto* a = first(ex.findings, FindingCategory::Annotation);
    REQUIRE(a);
    CHECK(a->evidence.object == ObjectId{152, 1});
}

TEST_CASE("platform object keys")
{
    auto f = make_fixture("platform-object");
    auto ex = extract(f);
    const Finding* mac = nullptr;
    for (const auto& x : ex.findings) {
        if (x.category == FindingCategory::PlatformKey && x.key == "Platform") {
            mac = &x;
        }
    }
    REQUIRE(mac);
    CHECK(mac->value == "Macintosh");
    CHECK(mac->identifying);
    CHECK(mac->evidence.object == ObjectId{1459, 0});
    for (const auto& x : ex.findings) {
        if (x.value == "Adobe" || x.value == "Identity" || x.value == "CAFBBG+TimesNewRomanPSMT") {
            CHECK_FALSE(x.identifying);
        }
    }
    // The creation date of the Info dictionary parses with its offset.
    auto doc = parse_document(f.bytes);
    auto records = extract_metadata(doc);
    REQUIRE_FALSE(records.empty());
    auto ts = parse_pdf_date(records.front().text("CreationDate"));
    CHECK(ts.iso() == "2018-02-20T15:25:19+01:00");
}

TEST_CASE("comments outside streams only")
{
    auto ex = extract(make_fixture("comment"));
    CHECK(has(ex.findings, FindingCategory::Comment, "% internal draft v3 jdoe"));
    for (const auto& x : ex.findings) {
        if (x.category == FindingCategory::Comment) {
            CHECK(x.value.find("content stream") == std::string::npos);
            CHECK(x.value.rfind("%PDF", 0) != 0);
            CHECK(x.value != "%%EOF");
        }
    }
}

TEST_CASE("scripts and attachments")
{
    auto s = extract(make_fixture("script"));
    CHECK(has(s.findings, FindingCategory::Script, "app.alert('hi')"));
    auto a = extract(make_fixture("attachment"));
    CHECK(has(a.findings, FindingCategory::EmbeddedFile, "notes.txt"));
}

TEST_CASE("email keys and hardware brands")
{
    auto e = extract(make_fixture("email"));
    CHECK(has(e.findings, FindingCategory::Email, "a.b@agency.gov"));
    auto h = extract(make_fixture("hardware-brand"));
    CHECK(has(h.findings, FindingCategory::HardwareBrand, "Toshiba"));
    CHECK(has(h.findings, FindingCategory::HardwareBrand, "HP"));
    // Brand tokens must be whole words: "HPC" or "Shp" do not count.
    MetadataRecord r;
    r.fields.push_back({"Author", utf8_value("HPC cluster"), ""});
    r.fields.push_back({"Creator", utf8_value("DELL-PC"), ""});
    auto brands = detect_hardware_brands({r});
    REQUIRE(brands.size() == 1);
    CHECK(brands[0].value == "DELL");
    CHECK(brands[0].confidence == Confidence::Heuristic);
}

TEST_CASE("metadata: Info, XMP and orphan records")
{
    auto full = parse_document(make_fixture("full-metadata").bytes);
    auto records = extract_metadata(full);
    REQUIRE(records.size() == 1);
    CHECK(records[0].current);
    CHECK(records[0].text("Author") == "chocholaty");
    CHECK(records[0].text("Producer") == "Microsoft Word 2010");

    auto xmp = parse_document(make_fixture("xmp-metadata").bytes);
    records = extract_metadata(xmp);
    REQUIRE(records.size() == 1);
    CHECK(records[0].source == MetadataSource::XmpStream);
    CHECK(records[0].text("Author") == "chocholaty");
    CHECK(records[0].text("Creator") == "Microsoft Word 2010");
    CHECK(records[0].field("Creator")->xmp_name == "xmp:CreatorTool");

    auto weak = make_fixture("weak-exiftool");
    records = extract_metadata(parse_document(weak.bytes));
    REQUIRE(records.size() == 1);
    CHECK(records[0].source == MetadataSource::OrphanInfoDict);
    CHECK_FALSE(records[0].current);
    for (const auto& [k, v] : weak.manifest.info_fields) {
        CHECK(records[0].text(k) == v);
    }
}

TEST_CASE("metadata: superseded Info versions are kept")
{
    auto records = extract_metadata(parse_document(make_fixture("incremental").bytes));
    REQUIRE(records.size() == 2);
    CHECK(records[0].text("Title") == "Final");
    CHECK(records[0].current);
    CHECK(records[1].text("Title") == "Draft");
    CHECK(records[1].superseded);
}

TEST_CASE("xmp: tolerant parsing")
{
    auto p = parse_xmp("<x:xmpmeta><rdf:RDF><rdf:Description pdf:Producer=\"A &amp; B\">"
                       "<dc:creator><rdf:Seq><rdf:li>One</rdf:li><rdf:li>Two</rdf:li></rdf:Seq></dc:creator>"
                       "</rdf:Description></rdf:RDF></x:xmpmeta>");
    bool producer = false, creator = false;
    for (const auto& prop : p.properties) {
        producer |= prop.name == "pdf:Producer" && prop.value == "A & B";
        creator |= prop.name == "dc:creator" && prop.value.find("One") != std::string::npos;
    }
    CHECK(producer);
    CHECK(creator);

    auto broken = parse_xmp("<x:xmpmeta><rdf:RDF><rdf:Description><pdf:Producer>Tool 1.0</pdf:Producer><dc:title");
    CHECK(broken.salvaged);
    bool salvaged = false;
    for (const auto& prop : broken.properties) {
        salvaged |= prop.name == "pdf:Producer" && prop.value == "Tool 1.0";
    }
    CHECK(salvaged);
}

TEST_CASE("encrypted files yield no findings")
{
    PdfBuilder b;
    Dictionary cat;
    cat.set("Type", PdfObject::name("Catalog"));
    auto root = b.add(PdfObject(cat));
    Dictionary info;
    info.set("Author", PdfObject::string("someone"));
    auto info_id = b.add(PdfObject(info));
    Dictionary enc;
    enc.set("Filter", PdfObject::name("Standard"));
    auto enc_id = b.add(PdfObject(enc));
    b.trailer("Root", PdfObject(Reference{root}));
    b.trailer("Info", PdfObject(Reference{info_id}));
    b.trailer("Encrypt", PdfObject(Reference{enc_id}));
    auto doc = parse_document(b.build());
    CHECK(doc.encrypted);
    auto ex = run_extractors(doc, *RuleSet::defaults());
    CHECK(ex.findings.empty());
    CHECK_FALSE(ex.warnings.empty());
}

TEST_CASE("author bylines in page text are not identifying")
{
    PdfBuilder b;
    auto content = b.add(PdfObject(Stream{Dictionary{}, "BT (Prepared by Jane Roe) Tj ET", false}));
    Dictionary page;
    page.set("Type", PdfObject::name("Page"));
    page.set("Contents", PdfObject(Reference{content}));
    auto page_id = b.add(PdfObject(page));
    Dictionary pages;
    pages.set("Type", PdfObject::name("Pages"));
    pages.set("Kids", PdfObject(Array{PdfObject(Reference{page_id})}));
    pages.set("Count", 1);
    auto pages_id = b.add(PdfObject(pages));
    Dictionary cat;
    cat.set("Type", PdfObject::name("Catalog"));
    cat.set("Pages", PdfObject(Reference{pages_id}));
    b.trailer("Root", PdfObject(Reference{b.add(PdfObject(cat))}));
    auto ex = run_extractors(parse_document(b.build()), *RuleSet::defaults());
    const auto* a = first(ex.findings, FindingCategory::AuthorName);
    REQUIRE(a);
    CHECK(a->value == "Jane Roe");
    CHECK(a->confidence == Confidence::Heuristic);
    CHECK_FALSE(a->identifying);
}

TEST_CASE("embedded search index is reported, not a finding")
{
    PdfBuilder b;
    auto catalog = b.allocate();
    auto pages = b.allocate();
    auto spec = b.allocate();
    Dictionary fs;
    fs.set("Type", PdfObject::name("Filespec"));
    fs.set("F", PdfObject::string("index.pdx"));
    b.put(spec, PdfObject(std::move(fs)));
    Dictionary tree;
    tree.set("Type", PdfObject::name("Pages"));
    tree.set("Kids", PdfObject(Array{}));
    tree.set("Count", 0);
    b.put(pages, PdfObject(std::move(tree)));
    Dictionary names;
    names.set("SearchIndex", PdfObject(Dictionary{}));
    Dictionary search;
    search.set("Indexes", PdfObject(Array{PdfObject::ref(spec.number)}));
    Dictionary cat;
    cat.set("Type", PdfObject::name("Catalog"));
    cat.set("Pages", PdfObject::ref(pages.number));
    cat.set("Names", PdfObject(std::move(names)));
    cat.set("Search", PdfObject(std::move(search)));
    b.put(catalog, PdfObject(std::move(cat)));
    b.trailer("Root", PdfObject::ref(catalog.number));

    auto doc = parse_document(b.build());
    auto notes = detect_search_index(doc);
    REQUIRE(notes.size() == 3);
    CHECK(notes[0] == "possible embedded search index: catalog /Search");
    CHECK(notes[1] == "possible embedded search index: name tree /SearchIndex");
    CHECK(notes[2].find("index.pdx") != std::string::npos);
    auto ex = run_extractors(doc, *RuleSet::defaults());
    CHECK(ex.warnings == notes);

    for (const auto& f : all_families()) {
        CAPTURE(f.manifest.id);
        CHECK(detect_search_index(parse_document(f.bytes)).empty());
    }
}
