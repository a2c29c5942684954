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

#ifndef PDFFOOT_PROFILE_HPP
#define PDFFOOT_PROFILE_HPP

#include "pdffoot/fingerprint.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

struct TimelineEvent {
    int year = 0;
    std::string family;
    std::string version;
    std::size_t count = 0;

    bool operator==(const TimelineEvent&) const = default;
};

struct AuthorTimeline {
    std::string group_key;
    std::string author; // normalized
    std::vector<TimelineEvent> events;

    int span() const;
    std::size_t files() const;
};

/// Case-folds ASCII letters and collapses runs of whitespace.
std::string normalize_author(std::string_view author);

/// Sorts by (year, family, version) and merges identical rows.
void normalize_events(std::vector<TimelineEvent>& events);

struct TimelineSet {
    std::vector<AuthorTimeline> timelines; // sorted by (group, author)
    std::size_t skipped_no_author = 0;
    std::size_t skipped_no_year = 0;
    std::size_t skipped_no_tool = 0;
};

TimelineSet build_timelines(const std::vector<DocumentFingerprint>& fps);

enum class Profile { Profile1, Profile2, Profile3, Unclassified };

std::string_view to_string(Profile p);

struct ProfileVerdict {
    std::string group_key;
    std::string author;
    Profile profile = Profile::Unclassified;
    std::string rationale;
    int span_years = 0;
};

/// Rules in order: fewer than two years or files -> Unclassified; two or more
/// families -> Profile-2; two or more versions, never decreasing from one
/// year to a later one -> Profile-1; a single version over two or more
/// years -> Profile-3; otherwise Unclassified.
ProfileVerdict classify_profile(const AuthorTimeline& t);

struct GroupProfileCounts {
    std::string group_key;
    std::size_t profile1 = 0;
    std::size_t profile2 = 0;
    std::size_t profile3 = 0;
    std::size_t unclassified = 0;
};

struct ProfileSummary {
    std::vector<GroupProfileCounts> groups; // sorted by group
    std::size_t groups_with_profile3 = 0;
};

ProfileSummary group_profile_counts(const std::vector<ProfileVerdict>& verdicts);

struct YearRange {
    int first = 0;
    int last = 0;
    std::string label() const; // "2016-2020"
};

std::vector<YearRange> default_periods();

/// Parses "2000-2005,2006-2010"; throws Error(BadRule) on bad syntax.
std::vector<YearRange> parse_periods(std::string_view spec);

enum class OsUsage { SameOs, Mixed, None };

std::string_view to_string(OsUsage u);

struct OsCounts {
    std::size_t windows = 0;
    std::size_t macos = 0;
    std::size_t linux_ = 0;
    std::size_t unknown = 0;

    void add(OsHint os);
};

struct OsRangeRow {
    std::string group_key;
    YearRange range;
    OsUsage usage = OsUsage::None;
    OsCounts counts;
};

struct OsYearRow {
    std::string group_key;
    int year = 0;
    OsCounts counts;
};

struct OsTrend {
    std::vector<OsRangeRow> ranges;
    std::vector<OsYearRow> years;
};

OsTrend os_trend(const std::vector<DocumentFingerprint>& fps, const std::vector<YearRange>& periods);

void write_timelines_csv(std::ostream& out, const std::vector<AuthorTimeline>& timelines);
void write_profiles_csv(std::ostream& out, const std::vector<ProfileVerdict>& verdicts);
void write_os_trend_csv(std::ostream& out, const OsTrend& trend);

/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(std::string_view s);

} // namespace pdffoot

#endif
