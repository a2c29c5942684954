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
#include "pdffoot/testkit.hpp"

#include <filesystem>
#include <fstream>
#include <map>

using namespace pdffoot;
using namespace pdffoot::testkit;

TEST_CASE("families: at least thirteen, all parseable without warnings")
{
    CHECK(family_names().size() >= 13);
    for (const auto& f : all_families()) {
        CAPTURE(f.manifest.id);
        auto doc = parse_document(f.bytes);
        CHECK(doc.warnings.empty());
        CHECK(f.bytes.rfind("%PDF-", 0) == 0);
    }
}

TEST_CASE("families: generation is deterministic")
{
    for (const auto& name : family_names()) {
        CHECK(make_fixture(name, 5).bytes == make_fixture(name, 5).bytes);
    }
    CHECK(make_fixture("full-metadata", 1).bytes != make_fixture("full-metadata", 2).bytes);
}

TEST_CASE("families: unknown family")
{
    CHECK_THROWS_AS(make_fixture("no-such-family"), std::invalid_argument);
}

TEST_CASE("manifest: JSON round trip")
{
    auto corpus = sanitizer_corpus(1, 9);
    auto pop = population_corpus(PopulationSpec{});
    corpus.insert(corpus.end(), pop.begin(), pop.end());
    for (const auto& f : corpus) {
        auto j = nlohmann::json::parse(f.manifest.to_json().dump());
        auto back = FixtureManifest::from_json(j);
        CHECK(back.to_json() == f.manifest.to_json());
    }
}

TEST_CASE("drop_info_reference keeps every offset")
{
    auto f = make_fixture("full-metadata", 3);
    auto weak = drop_info_reference(f.bytes);
    CHECK(weak.size() == f.bytes.size());
    CHECK(weak.find("/Info") == std::string::npos);
    CHECK(weak.find("/Author") != std::string::npos);
}

TEST_CASE("weak-exiftool: exiftool-style structure")
{
    auto f = make_fixture("weak-exiftool");
    CHECK(f.bytes.find("/Info") == std::string::npos);
    CHECK(f.bytes.find("chocholaty") != std::string::npos);
}

TEST_CASE("level corpus: declared proportions")
{
    auto corpus = level_corpus();
    REQUIRE(corpus.size() == 100);
    std::map<int, int> counts;
    for (const auto& f : corpus) {
        ++counts[f.manifest.level];
    }
    CHECK(counts[0] == 41);
    CHECK(counts[1] == 35);
    CHECK(counts[2] == 16);
    CHECK(counts[3] == 8);
}

TEST_CASE("population corpus: declared profile mix")
{
    PopulationSpec spec{"agency.example", 2, 1, 3};
    std::map<std::string, std::set<std::string>> authors;
    for (const auto& f : population_corpus(spec)) {
        authors[f.manifest.profile].insert(f.manifest.author);
    }
    CHECK(authors["Profile-1"].size() == 2);
    CHECK(authors["Profile-2"].size() == 1);
    CHECK(authors["Profile-3"].size() == 3);
}

TEST_CASE("author history corpus sizes")
{
    std::map<std::string, int> files;
    for (const auto& f : author_history_corpus()) {
        ++files[f.manifest.author];
    }
    CHECK(files["Author-X"] == 29);
    CHECK(files["Author-Y"] == 43);
    CHECK(files["Author-Z"] == 9);
}

TEST_CASE("write_fixtures writes pdf and manifest pairs")
{
    auto dir = std::filesystem::temp_directory_path() / "pdffoot_testkit_write";
    std::filesystem::remove_all(dir);
    auto fixtures = all_families();
    write_fixtures(fixtures, dir);
    for (const auto& f : fixtures) {
        CHECK(std::filesystem::file_size(dir / f.name) == f.bytes.size());
        std::ifstream in(dir / (f.manifest.id + ".json"));
        auto j = nlohmann::json::parse(in);
        CHECK(j["id"] == f.manifest.id);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("builder: classic and stream cross-reference sections agree")
{
    for (bool xs : {false, true}) {
        PdfBuilder b;
        b.use_xref_stream(xs);
        Dictionary cat;
        cat.set("Type", PdfObject::name("Catalog"));
        auto id = b.add(PdfObject(cat));
        b.trailer("Root", PdfObject(Reference{id}));
        auto hidden = b.add(PdfObject(Dictionary{}));
        b.unlisted(hidden);
        auto doc = parse_document(b.build());
        CHECK(doc.get(id));
        CHECK(doc.get(hidden));
        CHECK(doc.orphans.count(hidden));
        CHECK(doc.record(hidden)->provenance == Provenance::RawScan);
    }
}
