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

#include "pdffoot/profile.hpp"

#include "pdffoot/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <map>
#include <set>

namespace pdffoot {

int AuthorTimeline::span() const
{
    if (events.empty()) {
        return 0;
    }
    auto [lo, hi] = std::minmax_element(events.begin(), events.end(),
                                        [](const TimelineEvent& a, const TimelineEvent& b) { return a.year < b.year; });
    return hi->year - lo->year;
}

std::size_t AuthorTimeline::files() const
{
    std::size_t n = 0;
    for (const auto& e : events) {
        n += e.count;
    }
    return n;
}

std::string normalize_author(std::string_view author)
{
    std::string out;
    bool space = false;
    for (char c : trim(author)) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = true;
            continue;
        }
        if (space && !out.empty()) {
            out.push_back(' ');
        }
        space = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

void normalize_events(std::vector<TimelineEvent>& events)
{
    std::sort(events.begin(), events.end(), [](const TimelineEvent& a, const TimelineEvent& b) {
        if (a.year != b.year) {
            return a.year < b.year;
        }
        if (a.family != b.family) {
            return a.family < b.family;
        }
        int c = compare_versions(a.version, b.version);
        return c != 0 ? c < 0 : a.version < b.version;
    });
    std::vector<TimelineEvent> merged;
    for (auto& e : events) {
        if (!merged.empty() && merged.back().year == e.year && merged.back().family == e.family &&
            merged.back().version == e.version) {
            merged.back().count += e.count;
        } else {
            merged.push_back(std::move(e));
        }
    }
    events = std::move(merged);
}

TimelineSet build_timelines(const std::vector<DocumentFingerprint>& fps)
{
    TimelineSet set;
    std::map<std::pair<std::string, std::string>, std::vector<TimelineEvent>> groups;
    for (const auto& fp : fps) {
        std::string author = fp.author ? normalize_author(*fp.author) : std::string();
        if (author.empty()) {
            ++set.skipped_no_author;
            continue;
        }
        auto year = fp.year();
        if (!year) {
            ++set.skipped_no_year;
            continue;
        }
        if (fp.tool.family.empty()) {
            ++set.skipped_no_tool;
            continue;
        }
        groups[{fp.group_key, author}].push_back({*year, fp.tool.family, fp.tool.version, 1});
    }
    for (auto& [key, events] : groups) {
        normalize_events(events);
        set.timelines.push_back({key.first, key.second, std::move(events)});
    }
    return set;
}

std::string_view to_string(Profile p)
{
    switch (p) {
    case Profile::Profile1: return "Profile-1";
    case Profile::Profile2: return "Profile-2";
    case Profile::Profile3: return "Profile-3";
    case Profile::Unclassified: return "Unclassified";
    }
    return "?";
}

ProfileVerdict classify_profile(const AuthorTimeline& timeline)
{
    ProfileVerdict v;
    v.group_key = timeline.group_key;
    v.author = timeline.author;
    auto events = timeline.events;
    normalize_events(events);
    AuthorTimeline t{timeline.group_key, timeline.author, events};
    v.span_years = t.span();

    std::set<int> years;
    std::set<std::string> families;
    std::vector<std::string> versions;
    for (const auto& e : events) {
        years.insert(e.year);
        families.insert(e.family);
        if (std::none_of(versions.begin(), versions.end(),
                         [&](const std::string& x) { return compare_versions(x, e.version) == 0; })) {
            versions.push_back(e.version);
        }
    }

    if (years.size() < 2 || t.files() < 2) {
        v.profile = Profile::Unclassified;
        v.rationale = "fewer than two years or two files";
        return v;
    }
    if (families.size() >= 2) {
        v.profile = Profile::Profile2;
        v.rationale = "Changing tools:";
        for (const auto& f : families) {
            v.rationale += " " + f + ";";
        }
        v.rationale.pop_back();
        return v;
    }
    if (versions.size() >= 2) {
        bool monotone = true;
        for (const auto& a : events) {
            for (const auto& b : events) {
                if (a.year < b.year && compare_versions(a.version, b.version) > 0) {
                    monotone = false;
                }
            }
        }
        if (monotone) {
            v.profile = Profile::Profile1;
            v.rationale = "Updating regularly: " + *families.begin() + " " + events.front().version + " to " +
                          events.back().version;
            return v;
        }
        v.profile = Profile::Unclassified;
        v.rationale = "versions do not increase over time";
        return v;
    }
    if (v.span_years >= 2) {
        v.profile = Profile::Profile3;
        v.rationale = "Using same tool: " + *families.begin() +
                      (events.front().version.empty() ? "" : " " + events.front().version) + " for " +
                      std::to_string(v.span_years) + " years";
        return v;
    }
    v.profile = Profile::Unclassified;
    v.rationale = "same tool over less than two years";
    return v;
}

ProfileSummary group_profile_counts(const std::vector<ProfileVerdict>& verdicts)
{
    std::map<std::string, GroupProfileCounts> by_group;
    for (const auto& v : verdicts) {
        auto& g = by_group[v.group_key];
        g.group_key = v.group_key;
        switch (v.profile) {
        case Profile::Profile1: ++g.profile1; break;
        case Profile::Profile2: ++g.profile2; break;
        case Profile::Profile3: ++g.profile3; break;
        case Profile::Unclassified: ++g.unclassified; break;
        }
    }
    ProfileSummary s;
    for (auto& [k, g] : by_group) {
        if (g.profile3 > 0) {
            ++s.groups_with_profile3;
        }
        s.groups.push_back(std::move(g));
    }
    return s;
}

std::string YearRange::label() const { return std::to_string(first) + "-" + std::to_string(last); }

std::vector<YearRange> default_periods() { return {{2000, 2005}, {2006, 2010}, {2011, 2015}, {2016, 2020}}; }

std::vector<YearRange> parse_periods(std::string_view spec)
{
    std::vector<YearRange> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        auto item = trim(spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        pos = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
        auto year = [&](std::string_view t) {
            t = trim(t);
            int y = 0;
            auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), y);
            if (t.empty() || ec != std::errc() || end != t.data() + t.size()) {
                throw Error(ErrorCode::BadRule, "bad year range '" + std::string(item) + "'");
            }
            return y;
        };
        auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            int y = year(item);
            out.push_back({y, y});
        } else {
            out.push_back({year(item.substr(0, dash)), year(item.substr(dash + 1))});
        }
        if (out.back().first > out.back().last) {
            throw Error(ErrorCode::BadRule, "empty year range '" + std::string(item) + "'");
        }
    }
    return out;
}

std::string_view to_string(OsUsage u)
{
    switch (u) {
    case OsUsage::SameOs: return "same-OS";
    case OsUsage::Mixed: return "mixed";
    case OsUsage::None: return "none";
    }
    return "?";
}

void OsCounts::add(OsHint os)
{
    switch (os) {
    case OsHint::Windows: ++windows; break;
    case OsHint::MacOS: ++macos; break;
    case OsHint::Linux: ++linux_; break;
    case OsHint::Unknown: ++unknown; break;
    }
}

OsTrend os_trend(const std::vector<DocumentFingerprint>& fps, const std::vector<YearRange>& periods)
{
    std::map<std::string, std::map<int, OsCounts>> per_year;
    std::set<std::string> groups;
    for (const auto& fp : fps) {
        groups.insert(fp.group_key);
        if (auto y = fp.year()) {
            per_year[fp.group_key][*y].add(fp.os);
        }
    }
    OsTrend trend;
    for (const auto& g : groups) {
        const auto& years = per_year[g];
        for (const auto& range : periods) {
            OsRangeRow row{g, range, OsUsage::None, {}};
            for (auto it = years.lower_bound(range.first); it != years.end() && it->first <= range.last; ++it) {
                row.counts.windows += it->second.windows;
                row.counts.macos += it->second.macos;
                row.counts.linux_ += it->second.linux_;
                row.counts.unknown += it->second.unknown;
            }
            int kinds = (row.counts.windows > 0) + (row.counts.macos > 0) + (row.counts.linux_ > 0);
            row.usage = kinds == 0 ? OsUsage::None : kinds == 1 ? OsUsage::SameOs : OsUsage::Mixed;
            trend.ranges.push_back(row);
        }
        for (const auto& [year, counts] : years) {
            trend.years.push_back({g, year, counts});
        }
    }
    return trend;
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out += '"';
    return out;
}

void write_timelines_csv(std::ostream& out, const std::vector<AuthorTimeline>& timelines)
{
    out << "group,author,year,family,version,count\n";
    for (const auto& t : timelines) {
        for (const auto& e : t.events) {
            out << csv_field(t.group_key) << ',' << csv_field(t.author) << ',' << e.year << ',' << csv_field(e.family)
                << ',' << csv_field(e.version) << ',' << e.count << '\n';
        }
    }
}

void write_profiles_csv(std::ostream& out, const std::vector<ProfileVerdict>& verdicts)
{
    out << "group,author,profile,span_years,rationale\n";
    for (const auto& v : verdicts) {
        out << csv_field(v.group_key) << ',' << csv_field(v.author) << ',' << to_string(v.profile) << ','
            << v.span_years << ',' << csv_field(v.rationale) << '\n';
    }
}

void write_os_trend_csv(std::ostream& out, const OsTrend& trend)
{
    out << "group,kind,period,usage,windows,macos,linux,unknown\n";
    for (const auto& r : trend.ranges) {
        out << csv_field(r.group_key) << ",range," << r.range.label() << ',' << to_string(r.usage) << ','
            << r.counts.windows << ',' << r.counts.macos << ',' << r.counts.linux_ << ',' << r.counts.unknown << '\n';
    }
    for (const auto& r : trend.years) {
        out << csv_field(r.group_key) << ",year," << r.year << ",," << r.counts.windows << ',' << r.counts.macos << ','
            << r.counts.linux_ << ',' << r.counts.unknown << '\n';
    }
}

} // namespace pdffoot
