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

#include "pdffoot/corpus.hpp"
#include "pdffoot/errors.hpp"

#include "support.hpp"

#include <fstream>
#include <map>
#include <sstream>

using namespace pdffoot;
using namespace pdffoot::testkit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name)
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, std::string_view bytes)
{
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

class FakeClock : public Clock {
public:
    time_point now() override
    {
        std::lock_guard lock(m_);
        return t_;
    }
    void sleep_until(time_point t) override
    {
        std::lock_guard lock(m_);
        t_ = std::max(t_, t);
    }
    void advance(std::chrono::milliseconds d)
    {
        std::lock_guard lock(m_);
        t_ += d;
    }

private:
    std::mutex m_;
    time_point t_{};
};

class MockTransport : public Transport {
public:
    explicit MockTransport(FakeClock& clock) : clock_(clock) {}

    std::map<std::string, HttpResponse> responses;
    std::vector<std::pair<std::string, Clock::time_point>> log;

    HttpResponse get(const std::string& url, const FetchOptions&) override
    {
        {
            std::lock_guard lock(m_);
            log.emplace_back(url, clock_.now());
        }
        clock_.advance(std::chrono::milliseconds(30)); // time spent on the request
        auto it = responses.find(url);
        if (it == responses.end()) {
            return HttpResponse{404, "", ""};
        }
        return it->second;
    }

private:
    FakeClock& clock_;
    std::mutex m_;
};

} // namespace

TEST_CASE("registrable domains")
{
    CHECK(registrable_domain("www.nsa.gov") == "nsa.gov");
    CHECK(registrable_domain("docs.fia.gov.pk") == "fia.gov.pk");
    CHECK(registrable_domain("www.defensa.gob.es") == "defensa.gob.es");
    CHECK(registrable_domain("nabis.police.uk") == "nabis.police.uk");
    CHECK(registrable_domain("WWW.Customs.GOV.HK.") == "customs.gov.hk");
    CHECK(registrable_domain("example.com") == "example.com");
    CHECK(registrable_domain("a.b.example.co.uk") == "example.co.uk");
    CHECK(registrable_domain("10.0.0.1") == "10.0.0.1");
}

TEST_CASE("url hosts")
{
    CHECK(url_host("https://www.nsa.gov/docs/a.pdf") == "www.nsa.gov");
    CHECK(url_host("http://user@Host.Example:8080/x") == "host.example");
    CHECK(url_host("/local/path.pdf").empty());
}

TEST_CASE("group map")
{
    auto m = GroupMap::parse("# comment\nhttps://www.nsa.gov/\tNSA\nhttps://www.nsa.gov/press/\tNSA press\nfia.gov.pk\tFIA\n");
    CHECK(m.lookup("https://www.nsa.gov/a.pdf") == "NSA");
    CHECK(m.lookup("https://www.nsa.gov/press/b.pdf") == "NSA press");
    CHECK(m.lookup("https://fia.gov.pk/x.pdf") == "FIA");
    CHECK_FALSE(m.lookup("https://other.org/x.pdf"));
    CHECK_THROWS_AS(GroupMap::parse("no tab here\n"), Error);
}

TEST_CASE("sha256")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("collect files: group keys and extensions")
{
    TempDir dir("pdffoot_collect");
    auto root = dir.path / "agency";
    write(root / "a.pdf", make_fixture("minimal").bytes);
    write(root / "b.PDF", make_fixture("full-metadata").bytes);
    write(root / "c.pdf", make_fixture("partial-metadata").bytes);
    write(root / "notes.txt", "not a pdf");
    write(root / "press" / "d.pdf", make_fixture("comment").bytes);
    auto sources = collect_files({root});
    REQUIRE(sources.size() == 4);
    std::map<std::string, std::string> groups;
    for (const auto& s : sources) {
        groups[s.path->filename().string()] = s.group_key;
    }
    CHECK(groups["a.pdf"] == "agency");
    CHECK(groups["b.PDF"] == "agency");
    CHECK(groups["d.pdf"] == "press");

    CHECK_THROWS_AS(collect_files({}), Error);
    CHECK_THROWS_AS(collect_files({dir.path / "missing"}), Error);
}

TEST_CASE("pipeline: duplicates, unparsable files and crash isolation")
{
    TempDir dir("pdffoot_pipeline");
    auto f = make_fixture("full-metadata");
    write(dir.path / "g" / "one.pdf", f.bytes);
    write(dir.path / "g" / "two.pdf", f.bytes);
    write(dir.path / "g" / "broken.pdf", "%PDF-1.7\ngarbage only\n");
    write(dir.path / "g" / "text.pdf", "plain text");
    auto entries = run_pipeline(collect_files({dir.path}), PipelineOptions{nullptr, 2, {}});
    REQUIRE(entries.size() == 4);
    std::map<std::string, const CorpusEntry*> by_name;
    for (const auto& e : entries) {
        by_name[fs::path(e.source).filename().string()] = &e;
    }
    CHECK(by_name["one.pdf"]->status == EntryStatus::Ok);
    CHECK(by_name["one.pdf"]->assessment.level == 0);
    CHECK(by_name["two.pdf"]->duplicate_of == by_name["one.pdf"]->source);
    CHECK(by_name["broken.pdf"]->status == EntryStatus::Unparsable);
    CHECK(by_name["broken.pdf"]->diagnostic.find("NoObjectsFound") != std::string::npos);
    CHECK(by_name["text.pdf"]->status == EntryStatus::Unparsable);

    auto report = aggregate(entries);
    CHECK(report.overall.n() == 1);
    CHECK(report.duplicates == 1);
    CHECK(report.unassessable == 2);
}

TEST_CASE("pipeline: single unparsable file gives an EmptyCorpus notice")
{
    TempDir dir("pdffoot_empty");
    write(dir.path / "x.pdf", "nothing");
    auto entries = run_pipeline(collect_files({dir.path}), PipelineOptions{});
    auto j = nlohmann::json::parse(report_json(aggregate(entries)));
    CHECK(j["files"]["unassessable"] == 1);
    CHECK(j["score"]["notice"] == "EmptyCorpus");
}

TEST_CASE("pipeline: level corpus counts and deterministic reports")
{
    TempDir dir("pdffoot_levels");
    auto corpus = level_corpus();
    write_fixtures(corpus, dir.path / "in" / "levels.example");
    // Manifests are JSON files and are not picked up.
    auto sources = collect_files({dir.path / "in"});
    REQUIRE(sources.size() == 100);

    auto a = run_pipeline(sources, PipelineOptions{nullptr, 1, {}});
    auto b = run_pipeline(sources, PipelineOptions{nullptr, 3, {}});
    auto report = aggregate(a);
    CHECK(report.overall.n0 == 41);
    CHECK(report.overall.n1 == 35);
    CHECK(report.overall.n2 == 16);
    CHECK(report.overall.n3 == 8);

    write_reports(a, dir.path / "r1", false);
    write_reports(b, dir.path / "r2", false);
    for (const char* name : {"results.jsonl", "report.json", "levels.csv", "buckets.csv", "timelines.csv",
                             "profiles.csv", "os_trend.csv"}) {
        CAPTURE(name);
        CHECK(read(dir.path / "r1" / name) == read(dir.path / "r2" / name));
        CHECK_FALSE(read(dir.path / "r1" / name).empty());
    }

    std::istringstream lines(read(dir.path / "r1" / "results.jsonl"));
    std::string line, previous;
    std::size_t n = 0;
    for (; std::getline(lines, line); ++n) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["schema"] == "pdffoot.entry/1");
        CHECK(j["sha256"].get<std::string>() >= previous);
        previous = j["sha256"].get<std::string>();
    }
    CHECK(n == 100);

    write_reports(a, dir.path / "csv", true);
    CHECK(read(dir.path / "csv" / "results.csv").rfind("source,group,sha256,status,level", 0) == 0);
}

TEST_CASE("rate limiter spaces requests per host")
{
    FakeClock clock;
    RateLimiter limiter(clock, std::chrono::milliseconds(1000));
    std::vector<Clock::time_point> a, b;
    for (int i = 0; i < 3; ++i) {
        limiter.acquire("a");
        a.push_back(clock.now());
        limiter.release("a");
        limiter.acquire("b");
        b.push_back(clock.now());
        limiter.release("b");
    }
    for (int i = 1; i < 3; ++i) {
        CHECK(a[i] - a[i - 1] >= std::chrono::milliseconds(1000));
        CHECK(b[i] - b[i - 1] >= std::chrono::milliseconds(1000));
    }
}

TEST_CASE("robots.txt rules")
{
    auto r = RobotsRules::parse("User-agent: *\nDisallow: /private/\nAllow: /private/public/\nDisallow: /*.zip$\n",
                                "pdffoot/0.1");
    CHECK(r.allowed("/docs/a.pdf"));
    CHECK_FALSE(r.allowed("/private/a.pdf"));
    CHECK(r.allowed("/private/public/a.pdf"));
    CHECK_FALSE(r.allowed("/x/y.zip"));
    CHECK(r.allowed("/x/y.zip.pdf"));

    auto specific = RobotsRules::parse("User-agent: *\nDisallow: /\n\nUser-agent: pdffoot\nDisallow: /tmp/\n",
                                       "pdffoot/0.1");
    CHECK(specific.allowed("/docs/a.pdf"));
    CHECK_FALSE(specific.allowed("/tmp/a.pdf"));
    CHECK(RobotsRules::parse("", "x").allowed("/anything"));
}

TEST_CASE("fetch: rate limit, robots, errors")
{
    FakeClock clock;
    MockTransport transport(clock);
    auto pdf = make_fixture("full-metadata").bytes;
    transport.responses["https://www.a.gov/robots.txt"] = {200, "User-agent: *\nDisallow: /secret/\n", ""};
    transport.responses["https://www.a.gov/1.pdf"] = {200, pdf, ""};
    transport.responses["https://www.a.gov/2.pdf"] = {200, pdf, ""};
    transport.responses["https://www.a.gov/secret/3.pdf"] = {200, pdf, ""};
    transport.responses["https://docs.b.gov.pk/4.pdf"] = {200, make_fixture("minimal").bytes, ""};
    transport.responses["https://docs.b.gov.pk/5.pdf"] = {0, "", "Connection timed out"};
    std::vector<std::string> urls = {"https://www.a.gov/1.pdf",        "https://www.a.gov/2.pdf",
                                     "https://www.a.gov/secret/3.pdf", "https://www.a.gov/missing.pdf",
                                     "https://docs.b.gov.pk/4.pdf",    "https://docs.b.gov.pk/5.pdf",
                                     "ftp://c.org/6.pdf"};
    FetchOptions opts;
    opts.jobs = 2;
    auto sources = fetch_urls(urls, transport, clock, opts);
    REQUIRE(sources.size() == urls.size());
    CHECK(sources[0].bytes);
    CHECK(sources[0].group_key == "a.gov");
    CHECK(sources[2].fetch_error == "disallowed by robots.txt");
    CHECK(sources[3].fetch_error == "HTTP 404");
    CHECK(sources[4].group_key == "b.gov.pk");
    CHECK(sources[5].fetch_error == "Connection timed out");
    CHECK(sources[6].fetch_error);

    std::map<std::string, std::vector<Clock::time_point>> per_host;
    for (const auto& [url, t] : transport.log) {
        per_host[url_host(url)].push_back(t);
        CHECK(url.find("/secret/") == std::string::npos);
    }
    for (auto& [host, times] : per_host) {
        CAPTURE(host);
        for (std::size_t i = 1; i < times.size(); ++i) {
            CHECK(times[i] - times[i - 1] >= opts.interval);
        }
    }

    // The failed URLs become FetchError entries; the run goes on.
    auto entries = run_pipeline(sources, PipelineOptions{nullptr, 2, {}});
    auto report = aggregate(entries);
    CHECK(report.fetch_errors == 4);
    CHECK(report.duplicates == 1);
    CHECK(report.overall.n() == 2);
}

TEST_CASE("fetch: robots can be ignored")
{
    FakeClock clock;
    MockTransport transport(clock);
    transport.responses["https://a.org/robots.txt"] = {200, "User-agent: *\nDisallow: /\n", ""};
    transport.responses["https://a.org/x.pdf"] = {200, "%PDF-1.4", ""};
    FetchOptions opts;
    CHECK(fetch_urls({"https://a.org/x.pdf"}, transport, clock, opts)[0].fetch_error);
    opts.robots = false;
    CHECK_FALSE(fetch_urls({"https://a.org/x.pdf"}, transport, clock, opts)[0].fetch_error);
}
