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
#include "pdffoot/profile.hpp"

#include "support.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

using namespace pdffoot;
using namespace pdffoot::testkit;

namespace {

std::vector<DocumentFingerprint> fingerprints(const std::vector<Fixture>& fixtures)
{
    const auto& rules = *RuleSet::defaults();
    std::vector<DocumentFingerprint> out;
    for (const auto& f : fixtures) {
        auto doc = parse_document(f.bytes);
        auto ex = run_extractors(doc, rules);
        out.push_back(fingerprint_document(doc, ex.records, ex.findings, f.manifest.group, rules));
    }
    return out;
}

std::map<std::string, ProfileVerdict> verdicts_by_author(const std::vector<Fixture>& fixtures)
{
    std::map<std::string, ProfileVerdict> out;
    for (const auto& t : build_timelines(fingerprints(fixtures)).timelines) {
        out[t.author] = classify_profile(t);
    }
    return out;
}

AuthorTimeline timeline(std::vector<TimelineEvent> events)
{
    AuthorTimeline t{"g", "a", std::move(events)};
    normalize_events(t.events);
    return t;
}

DocumentFingerprint fp(const std::string& group, int year, OsHint os)
{
    DocumentFingerprint f;
    f.group_key = group;
    f.os = os;
    Timestamp ts;
    ts.year = year;
    f.created = ts;
    return f;
}

} // namespace

TEST_CASE("reference author histories")
{
    auto v = verdicts_by_author(author_history_corpus());
    REQUIRE(v.size() == 3);
    CHECK(to_string(v.at("author-x").profile) == "Profile-3");
    CHECK(to_string(v.at("author-y").profile) == "Profile-1");
    CHECK(to_string(v.at("author-z").profile) == "Profile-2");
    CHECK(v.at("author-x").span_years == 5);
    CHECK(v.at("author-x").rationale.rfind("Using same tool", 0) == 0);
    CHECK(v.at("author-z").rationale.rfind("Changing tools", 0) == 0);
}

TEST_CASE("timeline of Author-Y")
{
    auto ts = build_timelines(fingerprints(author_history_corpus()));
    const AuthorTimeline* y = nullptr;
    for (const auto& t : ts.timelines) {
        if (t.author == "author-y") {
            y = &t;
        }
    }
    REQUIRE(y);
    CHECK(y->group_key == "defensa.gob.es");
    CHECK(y->files() == 43);
    CHECK(y->span() == 8);
    CHECK(y->events.front() == TimelineEvent{2010, "Acrobat Distiller", "7.0.5", 4});
    CHECK(y->events.back() == TimelineEvent{2018, "Acrobat Distiller", "11.0", 1});
}

TEST_CASE("population corpus profile counts")
{
    PopulationSpec spec{"agency.example", 2, 1, 3};
    auto fixtures = population_corpus(spec);
    std::map<std::string, std::string> declared;
    for (const auto& f : fixtures) {
        declared[normalize_author(f.manifest.author)] = f.manifest.profile;
    }
    std::vector<ProfileVerdict> verdicts;
    for (const auto& t : build_timelines(fingerprints(fixtures)).timelines) {
        auto v = classify_profile(t);
        CHECK(std::string(to_string(v.profile)) == declared.at(t.author));
        verdicts.push_back(v);
    }
    auto summary = group_profile_counts(verdicts);
    REQUIRE(summary.groups.size() == 1);
    CHECK(summary.groups[0].profile1 == 2);
    CHECK(summary.groups[0].profile2 == 1);
    CHECK(summary.groups[0].profile3 == 3);
    CHECK(summary.groups_with_profile3 == 1);
}

TEST_CASE("population corpora of other sizes")
{
    for (std::uint64_t seed : {1, 2, 3}) {
        PopulationSpec spec{"other.example", 4, 3, 5};
        auto summary = [&] {
            std::vector<ProfileVerdict> verdicts;
            for (const auto& t : build_timelines(fingerprints(population_corpus(spec, seed))).timelines) {
                verdicts.push_back(classify_profile(t));
            }
            return group_profile_counts(verdicts);
        }();
        REQUIRE(summary.groups.size() == 1);
        CHECK(summary.groups[0].profile1 == 4);
        CHECK(summary.groups[0].profile2 == 3);
        CHECK(summary.groups[0].profile3 == 5);
    }
}

TEST_CASE("classification rules")
{
    CHECK(classify_profile(timeline({{2019, "Word", "2010", 5}})).profile == Profile::Unclassified);
    CHECK(classify_profile(timeline({{2018, "Word", "2010", 1}, {2019, "Word", "2010", 1}})).profile ==
          Profile::Unclassified); // one-year span
    CHECK(classify_profile(timeline({{2016, "Word", "2010", 1}, {2018, "Word", "2010", 1}})).profile ==
          Profile::Profile3);
    CHECK(classify_profile(timeline({{2016, "Word", "2010", 1}, {2017, "Writer", "6.0", 1}})).profile ==
          Profile::Profile2);
    CHECK(classify_profile(timeline({{2016, "Distiller", "9.0", 1}, {2017, "Distiller", "10.0", 1}})).profile ==
          Profile::Profile1);
    CHECK(classify_profile(timeline({{2016, "Distiller", "10.0", 1}, {2017, "Distiller", "9.0", 1}})).profile ==
          Profile::Unclassified);
}

TEST_CASE("classification ignores event order and duplicate events")
{
    std::vector<TimelineEvent> events = {{2010, "Acrobat Distiller", "7.0.5", 4}, {2011, "Acrobat Distiller", "8.0.0", 1},
                                         {2014, "Acrobat Distiller", "10.1.0", 10}, {2015, "Acrobat Distiller", "10.1.0", 16},
                                         {2018, "Acrobat Distiller", "11.0", 1}};
    auto base = classify_profile(timeline(events));
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto shuffled = events;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(shuffled.front());
        auto v = classify_profile(timeline(shuffled));
        CHECK(v.profile == base.profile);
        CHECK(v.span_years == base.span_years);
    }
}

TEST_CASE("author names normalize")
{
    CHECK(normalize_author("  John   DOE ") == "john doe");
    CHECK(normalize_author("Author-X") == "author-x");
}

TEST_CASE("same author in two groups is two identities")
{
    auto make = [](const std::string& group) {
        DocumentFingerprint f;
        f.group_key = group;
        f.author = "Jane";
        f.tool.family = "Word";
        f.tool.version = "2010";
        Timestamp ts;
        ts.year = 2015;
        f.created = ts;
        return f;
    };
    auto ts = build_timelines({make("a.gov"), make("b.gov")});
    CHECK(ts.timelines.size() == 2);
}

TEST_CASE("os trend per period")
{
    std::vector<DocumentFingerprint> fps = {
        fp("win.gov", 2016, OsHint::Windows), fp("win.gov", 2019, OsHint::Windows),
        fp("mix.gov", 2017, OsHint::Windows), fp("mix.gov", 2018, OsHint::MacOS),
        fp("none.gov", 2017, OsHint::Unknown),
    };
    auto trend = os_trend(fps, {YearRange{2016, 2020}});
    std::map<std::string, OsUsage> usage;
    for (const auto& r : trend.ranges) {
        usage[r.group_key] = r.usage;
    }
    CHECK(usage.at("win.gov") == OsUsage::SameOs);
    CHECK(usage.at("mix.gov") == OsUsage::Mixed);
    CHECK(usage.at("none.gov") == OsUsage::None);
    CHECK(to_string(OsUsage::SameOs) == "same-OS");
}

TEST_CASE("periods")
{
    auto p = parse_periods("2000-2005,2006-2010");
    REQUIRE(p.size() == 2);
    CHECK(p[1].label() == "2006-2010");
    CHECK(default_periods().size() == 4);
    CHECK(parse_periods("2000")[0].last == 2000);
    for (const char* bad : {"2005-2000", "a-b", "2000-2005,", "2000-2005x", ""}) {
        CAPTURE(bad);
        try {
            parse_periods(bad);
            FAIL("parsed");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadRule);
        }
    }
}

TEST_CASE("CSV outputs have fixed headers and quoting")
{
    auto ts = build_timelines(fingerprints(author_history_corpus()));
    std::ostringstream t, p, o;
    write_timelines_csv(t, ts.timelines);
    CHECK(t.str().rfind("group,author,year,family,version,count\n", 0) == 0);
    std::vector<ProfileVerdict> verdicts;
    for (const auto& x : ts.timelines) {
        verdicts.push_back(classify_profile(x));
    }
    write_profiles_csv(p, verdicts);
    CHECK(p.str().rfind("group,author,profile,span_years,rationale\n", 0) == 0);
    write_os_trend_csv(o, os_trend(fingerprints(author_history_corpus()), default_periods()));
    CHECK(o.str().rfind("group,kind,period,usage,windows,macos,linux,unknown\n", 0) == 0);
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("plain") == "plain");
}
