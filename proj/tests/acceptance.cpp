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


// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any fails.

#include "pdffoot/assess.hpp"
#include "pdffoot/corpus.hpp"
#include "pdffoot/document.hpp"
#include "pdffoot/errors.hpp"
#include "pdffoot/extract.hpp"
#include "pdffoot/fingerprint.hpp"
#include "pdffoot/profile.hpp"
#include "pdffoot/sanitize.hpp"
#include "pdffoot/testkit.hpp"
#include "pdffoot/writer.hpp"

#include "support.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace pdffoot;
using namespace pdffoot::testkit;
namespace fs = std::filesystem;

namespace {

using Steady = std::chrono::steady_clock;

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && failures.size() < 10) {
            failures.push_back(what);
        }
        if (!ok && failures.size() == 10) {
            failures.push_back("...");
        }
    }
};

double seconds_since(Steady::time_point start)
{
    return std::chrono::duration<double>(Steady::now() - start).count();
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

bool has_finding(const std::vector<Finding>& fs, FindingCategory c, const std::string& value)
{
    for (const auto& f : fs) {
        if (f.category == c && f.value == value) {
            return true;
        }
    }
    return false;
}

std::vector<Source> in_memory(const std::vector<Fixture>& fixtures, const std::string& default_group)
{
    std::vector<Source> out;
    for (const auto& f : fixtures) {
        Source s;
        s.location = f.name;
        s.group_key = f.manifest.group.empty() ? default_group : f.manifest.group;
        s.bytes = std::make_shared<const std::string>(f.bytes);
        out.push_back(std::move(s));
    }
    return out;
}

void criterion1(Check& c)
{
    auto s = score_corpus(45, 24, 13, 0);
    c.expect(s.n() == 82, "n = " + std::to_string(s.n()));
    c.expect(s.render() == "0.60", "rendered " + s.render());
}

void criterion2(Check& c)
{
    auto entries = run_pipeline(in_memory(author_history_corpus(), "history.example"), PipelineOptions{});
    std::vector<DocumentFingerprint> fps;
    for (const auto& e : entries) {
        if (e.counted()) {
            fps.push_back(e.fingerprint);
        }
    }
    std::map<std::string, std::string> got;
    for (const auto& t : build_timelines(fps).timelines) {
        got[t.author] = std::string(to_string(classify_profile(t).profile));
    }
    const std::map<std::string, std::string> want = {
        {"author-x", "Profile-3"}, {"author-y", "Profile-1"}, {"author-z", "Profile-2"}};
    for (const auto& [author, profile] : want) {
        auto it = got.find(author);
        c.expect(it != got.end() && it->second == profile,
                 author + ": " + (it == got.end() ? std::string("missing") : it->second));
    }
}

void criterion3(Check& c)
{
    auto rules = RuleSet::defaults();
    std::size_t fields = 0, recovered = 0, flagged = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto f = make_fixture("weak-exiftool", seed);
        auto doc = parse_document(f.bytes);
        auto ex = run_extractors(doc, *rules);
        const MetadataRecord* orphan = nullptr;
        for (const auto& r : ex.records) {
            if (r.orphan() && r.source == MetadataSource::OrphanInfoDict) {
                orphan = &r;
            }
        }
        for (const auto& [k, v] : f.manifest.info_fields) {
            ++fields;
            if (orphan && orphan->text(k) == v) {
                ++recovered;
            } else {
                c.expect(false, f.manifest.id + ": " + k + " not recovered");
            }
        }
        auto a = assess_level(doc, ex.records, ex.findings, *rules);
        if (a.weak_flags.count(WeakFlag::OrphanMetadataRecoverable)) {
            ++flagged;
        } else {
            c.expect(false, f.manifest.id + ": not flagged");
        }
    }
    c.expect(fields > 0 && recovered == fields,
             std::to_string(recovered) + "/" + std::to_string(fields) + " fields recovered");
    c.expect(flagged == 100, std::to_string(flagged) + "/100 flagged");
}

void criterion4(Check& c, std::size_t& count)
{
    auto rules = RuleSet::defaults();
    auto fixtures = sanitizer_corpus(12, 4);
    count = fixtures.size();
    c.expect(count >= 200, "only " + std::to_string(count) + " fixtures");
    std::size_t verification_failures = 0;
    for (const auto& f : fixtures) {
        const auto& id = f.manifest.id;
        try {
            auto r = sanitize(f.bytes, SanitizeOptions{}, *rules);
            c.expect(r.assessment.level == 3, id + ": output level is not 3");
            c.expect(r.assessment.weak_flags.empty(), id + ": output has weak flags");
            auto v = verify(r.bytes, *rules);
            c.expect(v.level == 3 && v.weak_flags.empty(), id + ": independent verify disagrees");
            auto before = testing::raw_page_streams(parse_document(f.bytes));
            auto after = testing::raw_page_streams(parse_document(r.bytes));
            c.expect(!before.empty() && before == after, id + ": page streams changed");
            auto again = sanitize(r.bytes, SanitizeOptions{}, *rules);
            c.expect(again.bytes == r.bytes, id + ": not idempotent");
        } catch (const Error& e) {
            if (e.code() == ErrorCode::VerificationFailed) {
                ++verification_failures;
            }
            c.expect(false, id + ": " + e.what());
        }
    }
    c.expect(verification_failures == 0, std::to_string(verification_failures) + " verification failures");
}

void criterion5(Check& c)
{
    auto rules = RuleSet::defaults();
    auto run = [&](const char* family) { return run_extractors(parse_document(make_fixture(family).bytes), *rules); };

    auto path = run("path-alt");
    c.expect(has_finding(path.findings, FindingCategory::Path, "C:\\Users\\Mazhar\\Desktop\\scml.JPG"), "path");
    c.expect(has_finding(path.findings, FindingCategory::Username, "Mazhar"), "username");

    auto annot = run("annotation");
    c.expect(has_finding(annot.findings, FindingCategory::Annotation, "sab"), "annotation author");
    c.expect(has_finding(annot.findings, FindingCategory::Annotation, "changes made by john doe"),
             "annotation contents");

    auto platform = run("platform-object");
    c.expect(has_finding(platform.findings, FindingCategory::PlatformKey, "Macintosh"), "platform key");
    std::string iso;
    for (const auto& r : platform.records) {
        if (r.current && r.field("CreationDate")) {
            if (auto ts = try_parse_date(r.text("CreationDate"))) {
                iso = ts->iso();
            }
        }
    }
    c.expect(iso == "2018-02-20T15:25:19+01:00", "creation date " + iso);
}

// A one-page file whose Info dictionary carries `producer`.
std::string file_with_producer(const std::string& producer)
{
    PdfBuilder b;
    auto catalog = b.allocate();
    auto pages = b.allocate();
    auto info = b.allocate();
    Dictionary cat;
    cat.set("Type", PdfObject::name("Catalog"));
    cat.set("Pages", PdfObject::ref(pages.number));
    b.put(catalog, PdfObject(std::move(cat)));
    Dictionary tree;
    tree.set("Type", PdfObject::name("Pages"));
    tree.set("Kids", PdfObject(Array{}));
    tree.set("Count", 0);
    b.put(pages, PdfObject(std::move(tree)));
    Dictionary meta;
    meta.set("Producer", PdfObject::string(producer));
    b.put(info, PdfObject(std::move(meta)));
    b.trailer("Root", PdfObject::ref(catalog.number));
    b.trailer("Info", PdfObject::ref(info.number));
    return b.build();
}

void criterion6(Check& c)
{
    auto rules = RuleSet::defaults();
    const std::vector<std::pair<std::string, OsHint>> pins = {
        {"Mac OS X 10.6.6 Quartz PDFContext", OsHint::MacOS},
        {"Antenna House PDF Output Library 6.2.553 (Linux64)", OsHint::Linux},
        {"Acrobat Distiller 10.1.0 (Windows)", OsHint::Windows},
        {"Acrobat Distiller 8.3.1 (Windows)", OsHint::Windows},
        {"LibreOffice 6.0", OsHint::Unknown},
    };
    for (const auto& [producer, want] : pins) {
        auto doc = parse_document(file_with_producer(producer));
        auto ex = run_extractors(doc, *rules);
        auto fp = fingerprint_document(doc, ex.records, ex.findings, "g", *rules);
        c.expect(fp.os == want, producer + " -> " + std::string(to_string(fp.os)));
    }
}

void criterion7(Check& c)
{
    auto dir = fs::temp_directory_path() / "pdffoot_acceptance_levels";
    fs::remove_all(dir);
    auto corpus = level_corpus();
    std::map<int, int> declared;
    for (const auto& f : corpus) {
        ++declared[f.manifest.level];
    }
    c.expect(declared[0] == 41 && declared[1] == 35 && declared[2] == 16 && declared[3] == 8,
             "declared level mix differs");
    write_fixtures(corpus, dir / "in" / "levels.example");
    auto sources = collect_files({dir / "in"});

    std::map<std::string, int> want;
    for (const auto& f : corpus) {
        want[f.name] = f.manifest.level;
    }
    auto first = run_pipeline(sources, PipelineOptions{nullptr, 1, {}});
    for (const auto& e : first) {
        auto name = fs::path(e.source).filename().string();
        c.expect(e.assessment.level == want[name], name + ": level differs from the manifest");
    }
    auto report = aggregate(first);
    c.expect(report.overall.n0 == 41 && report.overall.n1 == 35 && report.overall.n2 == 16 &&
                 report.overall.n3 == 8,
             "aggregate counts differ");

    auto second = run_pipeline(sources, PipelineOptions{nullptr, 4, {}});
    write_reports(first, dir / "r1", false);
    write_reports(second, dir / "r2", false);
    for (const auto& entry : fs::directory_iterator(dir / "r1")) {
        auto name = entry.path().filename();
        c.expect(read_file(entry.path()) == read_file(dir / "r2" / name), name.string() + " differs between runs");
    }
    fs::remove_all(dir);
}

void criterion8(Check& c, double& audit_seconds)
{
    auto fixtures = all_families();
    auto more = sanitizer_corpus(4, 9);
    fixtures.insert(fixtures.end(), more.begin(), more.end());
    auto levels = level_corpus();
    fixtures.insert(fixtures.end(), levels.begin(), levels.end());

    for (const auto& f : fixtures) {
        const auto& id = f.manifest.id;
        auto a = parse_document(f.bytes);
        c.expect(testing::object_ids(a) == f.manifest.objects, id + ": object set differs from the manifest");
        c.expect(a.orphans == f.manifest.orphans, id + ": orphan set differs from the manifest");
        std::set<ObjectId> shadows;
        for (const auto& s : a.shadows) {
            shadows.insert(s.id);
        }
        c.expect(shadows == f.manifest.shadows, id + ": shadow set differs from the manifest");

        std::set<ObjectId> scanned;
        for (const auto& s : raw_scan(f.bytes)) {
            scanned.insert(s.id);
        }
        for (const auto& oid : f.manifest.objects) {
            const auto* rec = a.record(oid);
            bool found = rec && (rec->provenance == Provenance::ObjectStream ? rec->container && scanned.count(*rec->container)
                                                                              : scanned.count(oid) > 0);
            c.expect(found, id + ": raw scan misses " + oid.str());
        }

        auto b = parse_document(serialize_document(a));
        std::string why;
        c.expect(testing::graph_equivalent(a, b, &why), id + ": round trip: " + why);
    }

    // Audit of 1000 files from disk.
    auto dir = fs::temp_directory_path() / "pdffoot_acceptance_audit";
    fs::remove_all(dir);
    auto big = sanitizer_corpus(56, 21);
    big.resize(1000);
    write_fixtures(big, dir / "in" / "bulk.example");
    auto start = Steady::now();
    auto entries = run_pipeline(collect_files({dir / "in"}), PipelineOptions{});
    write_reports(entries, dir / "out", false);
    audit_seconds = seconds_since(start);
    std::size_t ok = 0;
    for (const auto& e : entries) {
        ok += e.status == EntryStatus::Ok;
    }
    c.expect(entries.size() == 1000, std::to_string(entries.size()) + " entries");
    c.expect(ok == 1000, std::to_string(ok) + " parsed");
    c.expect(audit_seconds < 60.0, "audit took " + std::to_string(audit_seconds) + " s");
    fs::remove_all(dir);
}

bool report(int n, const std::string& what, const std::function<void(Check&)>& body)
{
    Check c;
    auto start = Steady::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double t = seconds_since(start);
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " ("
         << t << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures) {
        std::cout << "    " << f << "\n";
    }
    return c.failures.empty();
}

} // namespace

int main()
{
    bool ok = true;
    ok &= report(1, "corpus score of 45/24/13/0 renders 0.60", criterion1);
    ok &= report(2, "author histories classify as Profile-3, Profile-1, Profile-2", criterion2);
    ok &= report(3, "orphaned Info fields recovered and flagged on 100 files", [](Check& c) {
        auto start = Steady::now();
        criterion3(c);
        double t = seconds_since(start);
        c.expect(t < 5.0, "took " + std::to_string(t) + " s");
    });
    ok &= report(4, "sanitizer reaches Level-3, keeps page content, is idempotent", [](Check& c) {
        std::size_t n = 0;
        auto start = Steady::now();
        criterion4(c, n);
        double t = seconds_since(start);
        c.expect(t < 30.0, "took " + std::to_string(t) + " s for " + std::to_string(n) + " files");
    });
    ok &= report(5, "path, username, annotation, platform key and date pins", criterion5);
    ok &= report(6, "operating system pins", criterion6);
    ok &= report(7, "level corpus matches its manifests, reports are reproducible", criterion7);
    ok &= report(8, "object graph fidelity and a 1000-file audit", [](Check& c) {
        double audit = 0;
        criterion8(c, audit);
        std::cout << "    audit of 1000 files: " << audit << " s\n";
    });
    return ok ? 0 : 1;
}
