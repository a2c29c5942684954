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


#include "pdffoot/corpus.hpp"

#include "pdffoot/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <set>

namespace pdffoot {

namespace {

void add_level(CorpusScore& s, int level)
{
    switch (level) {
    case 0: ++s.n0; break;
    case 1: ++s.n1; break;
    case 2: ++s.n2; break;
    default: ++s.n3; break;
    }
}

nlohmann::ordered_json score_json(const CorpusScore& s)
{
    if (s.n() == 0) {
        return nullptr;
    }
    return score_corpus(s.n0, s.n1, s.n2, s.n3).render();
}

} // namespace

CorpusReport aggregate(const std::vector<CorpusEntry>& entries)
{
    CorpusReport r;
    std::map<std::string, GroupLevels> groups;
    for (const auto& e : entries) {
        ++r.entries;
        if (e.duplicate_of) {
            ++r.duplicates;
            continue;
        }
        if (e.status == EntryStatus::FetchError) {
            ++r.fetch_errors;
            continue;
        }
        auto& g = groups[e.group_key];
        g.group_key = e.group_key;
        if (e.status == EntryStatus::Encrypted) {
            ++r.encrypted;
            ++g.encrypted;
            continue;
        }
        if (e.status != EntryStatus::Ok || !e.assessment.level) {
            ++r.unassessable;
            ++g.unassessable;
            continue;
        }
        add_level(r.overall, *e.assessment.level);
        add_level(g.counts, *e.assessment.level);
        for (auto f : e.assessment.weak_flags) {
            ++r.weak_flags[std::string(to_string(f))];
        }
        std::set<FindingCategory> cats;
        for (const auto& f : e.findings) {
            cats.insert(f.category);
        }
        for (auto c : cats) {
            ++r.findings[std::string(to_string(c))];
        }
        r.fingerprints.push_back(e.fingerprint);
    }
    for (auto& [key, g] : groups) {
        r.groups.push_back(std::move(g));
    }
    return r;
}

std::string report_json(const CorpusReport& r)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = "pdffoot.report/1";
    j["files"] = {{"entries", r.entries},           {"assessed", r.overall.n()}, {"duplicates", r.duplicates},
                  {"unassessable", r.unassessable}, {"encrypted", r.encrypted},  {"fetch_errors", r.fetch_errors}};
    j["levels"] = {{"0", r.overall.n0}, {"1", r.overall.n1}, {"2", r.overall.n2}, {"3", r.overall.n3}};
    if (r.overall.n() == 0) {
        j["score"] = {{"notice", "EmptyCorpus"}, {"message", "no assessable file; no score computed"}};
    } else {
        auto s = score_corpus(r.overall.n0, r.overall.n1, r.overall.n2, r.overall.n3);
        j["score"] = {{"value", s.render()}, {"weighted", s.weighted()}, {"n", s.n()}};
    }
    j["weak_flags"] = r.weak_flags;
    j["findings"] = r.findings;
    auto groups = ordered_json::array();
    std::vector<std::pair<std::string, CorpusScore>> scored;
    for (const auto& g : r.groups) {
        ordered_json x;
        x["group"] = g.group_key;
        x["levels"] = {{"0", g.counts.n0}, {"1", g.counts.n1}, {"2", g.counts.n2}, {"3", g.counts.n3}};
        x["unassessable"] = g.unassessable;
        x["encrypted"] = g.encrypted;
        x["score"] = score_json(g.counts);
        if (g.counts.n() > 0) {
            x["bucket"] = std::string(to_string(bucket_of(g.counts)));
            scored.emplace_back(g.group_key, g.counts);
        } else {
            x["bucket"] = nullptr;
        }
        groups.push_back(std::move(x));
    }
    j["groups"] = std::move(groups);
    auto buckets = ordered_json::array();
    for (const auto& [b, count] : bucket_scores(scored)) {
        buckets.push_back({{"bucket", std::string(to_string(b))}, {"groups", count}});
    }
    j["buckets"] = std::move(buckets);
    return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

void write_levels_csv(std::ostream& out, const CorpusReport& r)
{
    out << "group,n0,n1,n2,n3,unassessable,encrypted,score\n";
    auto row = [&](const std::string& name, const CorpusScore& s, std::size_t un, std::size_t enc) {
        out << csv_field(name) << ',' << s.n0 << ',' << s.n1 << ',' << s.n2 << ',' << s.n3 << ',' << un << ',' << enc
            << ',' << (s.n() ? score_corpus(s.n0, s.n1, s.n2, s.n3).render() : "") << '\n';
    };
    for (const auto& g : r.groups) {
        row(g.group_key, g.counts, g.unassessable, g.encrypted);
    }
    row("*", r.overall, r.unassessable, r.encrypted);
}

void write_buckets_csv(std::ostream& out, const CorpusReport& r)
{
    std::vector<std::pair<std::string, CorpusScore>> scored;
    for (const auto& g : r.groups) {
        if (g.counts.n() > 0) {
            scored.emplace_back(g.group_key, g.counts);
        }
    }
    out << "bucket,groups\n";
    for (const auto& [b, count] : bucket_scores(scored)) {
        out << csv_field(to_string(b)) << ',' << count << '\n';
    }
}

namespace {

std::ofstream open_out(const std::filesystem::path& p)
{
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + p.string());
    }
    return out;
}

} // namespace

void write_reports(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir, bool csv,
                   const ReportOptions& options)
{
    std::filesystem::create_directories(dir);
    if (csv) {
        auto out = open_out(dir / "results.csv");
        write_entries_csv(out, entries);
    } else {
        auto out = open_out(dir / "results.jsonl");
        write_jsonl(out, entries);
    }
    auto report = aggregate(entries);
    open_out(dir / "report.json") << report_json(report);
    {
        auto out = open_out(dir / "levels.csv");
        write_levels_csv(out, report);
    }
    {
        auto out = open_out(dir / "buckets.csv");
        write_buckets_csv(out, report);
    }
    auto timelines = build_timelines(report.fingerprints);
    {
        auto out = open_out(dir / "timelines.csv");
        write_timelines_csv(out, timelines.timelines);
    }
    {
        std::vector<ProfileVerdict> verdicts;
        for (const auto& t : timelines.timelines) {
            verdicts.push_back(classify_profile(t));
        }
        auto out = open_out(dir / "profiles.csv");
        write_profiles_csv(out, verdicts);
    }
    {
        auto out = open_out(dir / "os_trend.csv");
        write_os_trend_csv(out, os_trend(report.fingerprints, options.periods));
    }
}

} // namespace pdffoot
