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


// Batch analysis of many files: ingest from directories or URL lists,
// per-file analysis on a worker pool, JSON-Lines results and aggregate
// reports.

#ifndef PDFFOOT_CORPUS_HPP
#define PDFFOOT_CORPUS_HPP

#include "pdffoot/assess.hpp"
#include "pdffoot/findings.hpp"
#include "pdffoot/fingerprint.hpp"
#include "pdffoot/profile.hpp"
#include "pdffoot/rules.hpp"

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

// Grouping ----------------------------------------------------------------

/// Registrable domain of a host name, approximated without the public suffix
/// list: three labels when the second-level label is a common public
/// second-level domain under a two-letter country code ("fia.gov.pk",
/// "nabis.police.uk"), two labels otherwise. IP addresses are returned as is.
std::string registrable_domain(std::string_view host);

/// Host part of an http(s) URL, lowercased, without port; empty when `url`
/// is not a URL.
std::string url_host(std::string_view url);

/// Overrides for group keys, read from lines `prefix<TAB>group`. A source
/// matches when it starts with the prefix or when its host equals it; the
/// longest matching prefix wins.
class GroupMap {
public:
    GroupMap() = default;
    /// Throws Error(BadRule) with the line number.
    static GroupMap parse(std::string_view text);
    static GroupMap load(const std::filesystem::path& file);

    std::optional<std::string> lookup(std::string_view source) const;
    bool empty() const { return entries_.empty(); }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

// Ingest ------------------------------------------------------------------

/// One file to analyze. Either `path` is set and read by the worker, or
/// `bytes` already holds the content (fetched files).
struct Source {
    std::string location; // path or URL
    std::string group_key;
    std::optional<std::filesystem::path> path;
    std::shared_ptr<const std::string> bytes;
    /// Set when the file could not be obtained.
    std::optional<std::string> fetch_error;
};

/// Walks `roots` (files or directories) for `*.pdf`, case-insensitively, in
/// sorted order. The group key is the first directory below the root, or
/// the root's own name for files directly inside it. Paths named explicitly
/// use their parent directory's name.
///
/// Throws Error(EmptyInput) when no root is given or a root does not exist.
std::vector<Source> collect_files(const std::vector<std::filesystem::path>& roots, const GroupMap& groups = {});

// Fetching ----------------------------------------------------------------

struct HttpResponse {
    int status = 0;
    std::string body;
    /// Transport failure (DNS, timeout, oversize); empty on a completed exchange.
    std::string error;
};

struct FetchOptions {
    /// Minimum spacing between two requests to the same host.
    std::chrono::milliseconds interval{1000};
    std::string user_agent = "pdffoot/0.1 (+metadata audit)";
    std::chrono::seconds timeout{30};
    std::size_t max_size = 64u << 20;
    bool robots = true;
    /// Hosts fetched concurrently.
    std::size_t jobs = 4;
};

class Transport {
public:
    virtual ~Transport() = default;
    virtual HttpResponse get(const std::string& url, const FetchOptions& options) = 0;
};

/// HTTP(S) through cpp-httplib, following redirects.
class HttpTransport : public Transport {
public:
    HttpResponse get(const std::string& url, const FetchOptions& options) override;
};

class Clock {
public:
    using time_point = std::chrono::steady_clock::time_point;
    virtual ~Clock() = default;
    virtual time_point now() = 0;
    virtual void sleep_until(time_point t) = 0;
};

class SystemClock : public Clock {
public:
    time_point now() override;
    void sleep_until(time_point t) override;
};

/// Per-host request spacing: a request starts no earlier than `interval`
/// after the previous request to the same host finished. Requests to one
/// host must come from one thread at a time.
class RateLimiter {
public:
    RateLimiter(Clock& clock, std::chrono::milliseconds interval) : clock_(clock), interval_(interval) {}

    /// Blocks until a request to `host` may start.
    void acquire(const std::string& host);
    /// Marks the end of the request started after acquire().
    void release(const std::string& host);

private:
    Clock& clock_;
    std::chrono::milliseconds interval_;
    std::mutex mutex_;
    std::map<std::string, Clock::time_point> next_;
};

/// Allow/Disallow rules of a robots.txt for one user agent. The longest
/// matching rule wins, Allow on ties; `*` and a trailing `$` are supported.
class RobotsRules {
public:
    static RobotsRules parse(std::string_view text, std::string_view user_agent);
    bool allowed(std::string_view path) const;

private:
    std::vector<std::pair<std::string, bool>> rules_;
};

/// Reads a URL list: one URL per line, `#` comments and blank lines ignored.
std::vector<std::string> read_url_list(const std::filesystem::path& file);

/// Downloads every URL. Hosts are processed concurrently, each host's
/// requests serialized and spaced by the rate limiter; robots.txt is fetched
/// once per host first. Failures become sources with `fetch_error` set.
std::vector<Source> fetch_urls(const std::vector<std::string>& urls, Transport& transport, Clock& clock,
                               const FetchOptions& options, const GroupMap& groups = {});

// Pipeline ----------------------------------------------------------------

enum class EntryStatus { Ok, Unparsable, Encrypted, FetchError };

std::string_view to_string(EntryStatus s);

struct CorpusEntry {
    std::string source;
    std::string group_key;
    std::string sha256; // empty only for fetch errors
    EntryStatus status = EntryStatus::Ok;
    std::optional<std::string> duplicate_of;
    std::string diagnostic;
    std::vector<std::string> warnings;
    Assessment assessment;
    DocumentFingerprint fingerprint;
    std::vector<Finding> findings;

    bool counted() const { return status == EntryStatus::Ok && !duplicate_of; }
};

struct PipelineOptions {
    std::shared_ptr<const RuleSet> rules;
    std::size_t jobs = 0; // 0: hardware concurrency
    FingerprintOptions fingerprint;
};

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Analyzes every source on a bounded worker pool. A failure on one file
/// never aborts the run; it yields an Unparsable entry with the diagnostic.
/// Byte-identical files after the first (by source name) are marked
/// duplicate_of and not analyzed. Entries are sorted by (sha256, source).
std::vector<CorpusEntry> run_pipeline(const std::vector<Source>& sources, const PipelineOptions& options);

/// One JSON object per line with a schema field; keys in a fixed order.
void write_jsonl(std::ostream& out, const std::vector<CorpusEntry>& entries);
/// One row per entry: source,group,sha256,status,level,weak_flags,author,tool,version,os,year.
void write_entries_csv(std::ostream& out, const std::vector<CorpusEntry>& entries);

// Reports -----------------------------------------------------------------

struct GroupLevels {
    std::string group_key;
    CorpusScore counts; // level counts; the score is computed when n() > 0
    std::size_t unassessable = 0;
    std::size_t encrypted = 0;
};

struct CorpusReport {
    std::size_t entries = 0;
    std::size_t duplicates = 0;
    std::size_t unassessable = 0;
    std::size_t encrypted = 0;
    std::size_t fetch_errors = 0;
    CorpusScore overall;
    std::map<std::string, std::size_t> weak_flags;
    std::map<std::string, std::size_t> findings; // counted files per category
    std::vector<GroupLevels> groups;             // sorted by group
    std::vector<DocumentFingerprint> fingerprints;
};

CorpusReport aggregate(const std::vector<CorpusEntry>& entries);

/// report.json. When no file was assessable, the score section carries an
/// EmptyCorpus notice instead of numbers.
std::string report_json(const CorpusReport& report);

/// group,n0,n1,n2,n3,unassessable,encrypted,score
void write_levels_csv(std::ostream& out, const CorpusReport& report);
/// bucket,groups over the seven score buckets, in ascending order.
void write_buckets_csv(std::ostream& out, const CorpusReport& report);

struct ReportOptions {
    std::vector<YearRange> periods = default_periods();
};

/// Writes results.jsonl (or results.csv), report.json, levels.csv,
/// buckets.csv, timelines.csv, profiles.csv and os_trend.csv into `dir`.
void write_reports(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir, bool csv,
                   const ReportOptions& options = {});

} // namespace pdffoot

#endif
