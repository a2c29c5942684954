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


// pdffoot command line: audit, score, profile, os-trend, sanitize, fixtures, fetch.

#include "pdffoot/corpus.hpp"
#include "pdffoot/errors.hpp"
#include "pdffoot/sanitize.hpp"
#include "pdffoot/testkit.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace fs = std::filesystem;
using namespace pdffoot;

namespace {

enum Exit { Ok = 0, Usage = 1, NothingParseable = 2, VerificationFailure = 3 };

struct Globals {
    std::string rules_file;
    std::size_t jobs = 0;
    std::string format = "jsonl";
    bool include_orphans = false;

    std::shared_ptr<const RuleSet> rules() const
    {
        return rules_file.empty() ? RuleSet::defaults() : RuleSet::load(rules_file);
    }

    PipelineOptions pipeline() const
    {
        PipelineOptions o;
        o.rules = rules();
        o.jobs = jobs;
        o.fingerprint.include_orphans = include_orphans;
        return o;
    }
};

struct Inputs {
    std::vector<std::string> paths;
    std::string urls;
    std::string group_map;
    FetchOptions fetch;
    double rate = 1.0;
    bool no_robots = false;

    void add_to(CLI::App* cmd, bool paths_required)
    {
        auto* p = cmd->add_option("inputs", paths, "PDF files or directories");
        if (paths_required) {
            p->required();
        }
        cmd->add_option("--group-map", group_map, "TSV of prefix<TAB>group overrides")->check(CLI::ExistingFile);
        add_fetch(cmd);
        cmd->add_option("--urls", urls, "File with one URL per line")->check(CLI::ExistingFile);
    }

    void add_fetch(CLI::App* cmd)
    {
        cmd->add_option("--rate", rate, "Requests per second per host")->default_val(1.0)->check(CLI::PositiveNumber);
        cmd->add_option("--user-agent", fetch.user_agent, "User-Agent header")->capture_default_str();
        cmd->add_option_function<int>(
               "--timeout", [this](int s) { fetch.timeout = std::chrono::seconds(s); }, "Timeout in seconds")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-size", fetch.max_size, "Largest accepted download in bytes")->capture_default_str();
        cmd->add_flag("--no-robots", no_robots, "Ignore robots.txt");
    }

    std::vector<Source> collect(const Globals& g)
    {
        GroupMap groups = group_map.empty() ? GroupMap() : GroupMap::load(group_map);
        std::vector<Source> sources;
        if (!paths.empty()) {
            std::vector<fs::path> roots(paths.begin(), paths.end());
            sources = collect_files(roots, groups);
        }
        if (!urls.empty()) {
            fetch.interval = std::chrono::milliseconds(static_cast<long long>(1000.0 / rate));
            fetch.robots = !no_robots;
            if (g.jobs) {
                fetch.jobs = g.jobs;
            }
            HttpTransport transport;
            SystemClock clock;
            auto fetched = fetch_urls(read_url_list(urls), transport, clock, fetch, groups);
            sources.insert(sources.end(), fetched.begin(), fetched.end());
        }
        if (sources.empty()) {
            throw Error(ErrorCode::EmptyInput, "no PDF inputs found");
        }
        return sources;
    }
};

bool any_assessed(const std::vector<CorpusEntry>& entries)
{
    for (const auto& e : entries) {
        if (e.counted() || (e.duplicate_of && e.status == EntryStatus::Ok)) {
            return true;
        }
    }
    return false;
}

std::vector<DocumentFingerprint> fingerprints(const std::vector<CorpusEntry>& entries)
{
    return aggregate(entries).fingerprints;
}

void write_file(const fs::path& p, std::string_view data)
{
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw std::runtime_error("cannot write " + p.string());
    }
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::EmptyInput, "cannot read " + p.string());
    }
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Writes to `dir / name` when `dir` is set, else to stdout.
template <class F>
void emit(const std::string& dir, const std::string& name, F&& writer)
{
    if (dir.empty()) {
        writer(std::cout);
        return;
    }
    fs::create_directories(dir);
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    writer(out);
    if (!out) {
        throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    }
}

int run_audit(const Globals& g, Inputs& in, const std::string& out_dir, const std::string& periods)
{
    auto entries = run_pipeline(in.collect(g), g.pipeline());
    ReportOptions ro;
    if (!periods.empty()) {
        ro.periods = parse_periods(periods);
    }
    write_reports(entries, out_dir, g.format == "csv", ro);
    auto report = aggregate(entries);
    std::cerr << "audited " << report.entries << " file(s): " << report.overall.n() << " assessed, "
              << report.unassessable << " unassessable, " << report.encrypted << " encrypted, " << report.duplicates
              << " duplicate(s), " << report.fetch_errors << " fetch error(s); reports in " << out_dir << "\n";
    return any_assessed(entries) ? Ok : NothingParseable;
}

int run_score(const Globals& g, Inputs& in, const std::vector<std::uint64_t>& counts)
{
    if (!counts.empty()) {
        if (counts.size() != 4) {
            throw CLI::ValidationError("--counts", "expects n0,n1,n2,n3");
        }
        auto s = score_corpus(counts[0], counts[1], counts[2], counts[3]);
        std::cout << s.render() << "\n";
        return Ok;
    }
    if (in.paths.empty() && in.urls.empty()) {
        throw CLI::ValidationError("score", "give --counts or inputs");
    }
    auto entries = run_pipeline(in.collect(g), g.pipeline());
    auto report = aggregate(entries);
    if (g.format == "csv") {
        write_levels_csv(std::cout, report);
    } else {
        std::cout << report_json(report);
    }
    return any_assessed(entries) ? Ok : NothingParseable;
}

int run_profile(const Globals& g, Inputs& in, const std::string& out_dir)
{
    auto entries = run_pipeline(in.collect(g), g.pipeline());
    auto timelines = build_timelines(fingerprints(entries));
    std::vector<ProfileVerdict> verdicts;
    for (const auto& t : timelines.timelines) {
        verdicts.push_back(classify_profile(t));
    }
    if (!out_dir.empty()) {
        emit(out_dir, "timelines.csv", [&](std::ostream& o) { write_timelines_csv(o, timelines.timelines); });
    }
    emit(out_dir, "profiles.csv", [&](std::ostream& o) { write_profiles_csv(o, verdicts); });
    auto summary = group_profile_counts(verdicts);
    std::cerr << timelines.timelines.size() << " author timeline(s); " << summary.groups_with_profile3
              << " group(s) with Profile-3 authors; skipped " << timelines.skipped_no_author << " without author, "
              << timelines.skipped_no_year << " without date, " << timelines.skipped_no_tool << " without tool\n";
    return any_assessed(entries) ? Ok : NothingParseable;
}

int run_os_trend(const Globals& g, Inputs& in, const std::string& out_dir, const std::string& periods)
{
    auto entries = run_pipeline(in.collect(g), g.pipeline());
    auto ranges = periods.empty() ? default_periods() : parse_periods(periods);
    auto trend = os_trend(fingerprints(entries), ranges);
    emit(out_dir, "os_trend.csv", [&](std::ostream& o) { write_os_trend_csv(o, trend); });
    return any_assessed(entries) ? Ok : NothingParseable;
}

int run_sanitize(const Globals& g, const SanitizeOptions& opts, const std::string& input, const std::string& output)
{
    auto bytes = read_file(input);
    auto rules = g.rules();
    std::string log_path = output + ".log.json";
    try {
        auto result = sanitize(bytes, opts, *rules);
        write_file(output, result.bytes);
        write_file(log_path, result.log.to_json() + "\n");
        std::cerr << "sanitized " << input << " -> " << output << " (verified Level-"
                  << result.log.verified_level.value_or(-1) << ", " << result.log.removed.size() << " removal(s))\n";
        return Ok;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::VerificationFailed) {
            std::cerr << "pdffoot: verification failed, output withheld: " << e.what() << "\n";
            return VerificationFailure;
        }
        throw;
    }
}

struct FixtureArgs {
    bool all = false;
    std::vector<std::string> families;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string corpus;
    std::string out = "fixtures";
};

int run_fixtures(const FixtureArgs& a)
{
    using namespace testkit;
    std::vector<Fixture> fixtures;
    if (a.corpus == "level") {
        fixtures = level_corpus(a.seed ? a.seed : 7);
    } else if (a.corpus == "sanitizer") {
        fixtures = sanitizer_corpus(a.count, a.seed ? a.seed : 1);
    } else if (a.corpus == "population") {
        fixtures = population_corpus(PopulationSpec{}, a.seed ? a.seed : 11);
    } else if (a.corpus == "history") {
        fixtures = author_history_corpus();
    } else {
        auto families = a.all || a.families.empty() ? family_names() : a.families;
        for (const auto& f : families) {
            for (std::size_t i = 0; i < a.count; ++i) {
                fixtures.push_back(make_fixture(f, a.seed + i));
            }
        }
    }
    write_fixtures(fixtures, a.out);
    std::cerr << "wrote " << fixtures.size() << " fixture(s) to " << a.out << "\n";
    return Ok;
}

// Downloads into <out>/<group>/<sha256>.pdf so that a later audit of <out>
// groups by domain; sources.tsv maps every URL to its file or error.
int run_fetch(const Globals& g, Inputs& in, const std::string& out_dir)
{
    auto sources = in.collect(g);
    fs::create_directories(out_dir);
    std::ofstream index(fs::path(out_dir) / "sources.tsv", std::ios::binary);
    index << "url\tgroup\tsha256\tstatus\n";
    std::size_t ok = 0;
    for (const auto& s : sources) {
        if (!s.bytes) {
            index << s.location << '\t' << s.group_key << "\t\t" << s.fetch_error.value_or("not fetched") << '\n';
            continue;
        }
        auto sha = sha256_hex(*s.bytes);
        write_file(fs::path(out_dir) / (s.group_key.empty() ? "_" : s.group_key) / (sha + ".pdf"), *s.bytes);
        index << s.location << '\t' << s.group_key << '\t' << sha << "\tok\n";
        ++ok;
    }
    std::cerr << "fetched " << ok << " of " << sources.size() << " URL(s) into " << out_dir << "\n";
    return ok ? Ok : NothingParseable;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pdffoot: audit PDF files for identifying hidden data, score corpora, profile authors, sanitize"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--rules", g.rules_file, "Rule file overlaying the defaults")
        ->envname("PDF_FOOTPRINT_RULES")
        ->check(CLI::ExistingFile);
    app.add_option("--jobs,-j", g.jobs, "Worker threads (default: CPU count)");
    app.add_option("--format", g.format, "Per-file output format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    app.add_flag("--include-orphans", g.include_orphans, "Let orphan metadata supply author and tool");

    Inputs in;
    std::string audit_dir, profile_dir, trend_dir, fetch_dir;
    std::string periods;

    auto* audit = app.add_subcommand("audit", "Analyze files and write per-file results and reports");
    in.add_to(audit, false);
    audit->add_option("-o,--out", audit_dir, "Report directory")->default_val("pdffoot-report");
    audit->add_option("--periods", periods, "OS trend periods, e.g. 2000-2005,2006-2010");

    std::vector<std::uint64_t> counts;
    auto* score = app.add_subcommand("score", "Corpus score from level counts or from files");
    in.add_to(score, false);
    score->add_option("--counts", counts, "Level counts n0,n1,n2,n3")->delimiter(',');

    auto* profile = app.add_subcommand("profile", "Author timelines and Profile-1/2/3 verdicts");
    in.add_to(profile, false);
    profile->add_option("-o,--out", profile_dir, "Directory for timelines.csv and profiles.csv (default: stdout)");

    auto* trend = app.add_subcommand("os-trend", "Operating system usage per group and period");
    in.add_to(trend, false);
    trend->add_option("-o,--out", trend_dir, "Directory for os_trend.csv (default: stdout)");
    trend->add_option("--periods", periods, "Periods, e.g. 2000-2005,2006-2010");

    SanitizeOptions sopts;
    std::string sin, sout;
    auto* san = app.add_subcommand("sanitize", "Rewrite a file to Level-2 or Level-3 and verify it");
    san->add_option("--level", sopts.level, "Target level")->check(CLI::IsMember({2, 3}))->default_val(3);
    san->add_flag("--blank-annotations", sopts.blank_annotations, "Blank annotation fields instead of removing");
    san->add_flag("--keep-scripts", sopts.keep_scripts, "Leave JavaScript and Launch actions in place");
    san->add_option("-o,--out", sout, "Output file")->required();
    san->add_option("input", sin, "Input PDF")->required()->check(CLI::ExistingFile);

    FixtureArgs fa;
    auto* fix = app.add_subcommand("fixtures", "Generate synthetic PDFs with ground-truth manifests");
    fix->add_flag("--all", fa.all, "Every family");
    fix->add_option("--family", fa.families, "Family name (repeatable)")
        ->check(CLI::IsMember(testkit::family_names()));
    fix->add_option("--seed", fa.seed, "First seed; 0 is the canonical instance");
    fix->add_option("--count", fa.count, "Instances per family")->check(CLI::PositiveNumber);
    fix->add_option("--corpus", fa.corpus, "Named corpus instead of families")
        ->check(CLI::IsMember({"level", "sanitizer", "population", "history"}));
    fix->add_option("-o,--out", fa.out, "Output directory")->capture_default_str();

    Inputs fin;
    auto* fetch = app.add_subcommand("fetch", "Download a URL list politely");
    fetch->add_option("--urls", fin.urls, "File with one URL per line")->required()->check(CLI::ExistingFile);
    fetch->add_option("--group-map", fin.group_map, "TSV of prefix<TAB>group overrides")->check(CLI::ExistingFile);
    fin.add_fetch(fetch);
    fetch->add_option("-o,--out", fetch_dir, "Download directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*audit) {
            return run_audit(g, in, audit_dir, periods);
        }
        if (*score) {
            return run_score(g, in, counts);
        }
        if (*profile) {
            return run_profile(g, in, profile_dir);
        }
        if (*trend) {
            return run_os_trend(g, in, trend_dir, periods);
        }
        if (*san) {
            return run_sanitize(g, sopts, sin, sout);
        }
        if (*fix) {
            return run_fixtures(fa);
        }
        if (*fetch) {
            return run_fetch(g, fin, fetch_dir);
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << "pdffoot: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        std::cerr << "pdffoot: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::BadRule: return Usage;
        case ErrorCode::VerificationFailed: return VerificationFailure;
        default: return NothingParseable;
        }
    } catch (const std::exception& e) {
        std::cerr << "pdffoot: " << e.what() << "\n";
        return NothingParseable;
    }
    return Usage;
}
