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

#include "pdffoot/document.hpp"
#include "pdffoot/errors.hpp"
#include "pdffoot/extract.hpp"
#include "pdffoot/text.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

namespace pdffoot {

namespace fs = std::filesystem;

namespace {

bool is_ipv4(std::string_view host)
{
    return !host.empty() && host.find_first_not_of("0123456789.") == std::string_view::npos;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

} // namespace

std::string registrable_domain(std::string_view host)
{
    static const std::set<std::string> second_level = {"ac",  "co",   "com",    "edu",   "gob",  "gouv", "gov",
                                                       "govt", "go",  "gv",     "mil",   "ne",   "net",  "nic",
                                                       "or",  "org",  "police", "admin", "mod",  "int"};
    std::string h = ascii_lower(host);
    while (!h.empty() && h.back() == '.') {
        h.pop_back();
    }
    if (is_ipv4(h) || h.find(':') != std::string::npos) {
        return h;
    }
    auto labels = split(h, '.');
    if (labels.size() <= 2) {
        return h;
    }
    std::size_t keep = 2;
    const auto& tld = labels.back();
    const auto& sld = labels[labels.size() - 2];
    if (tld.size() == 2 && second_level.count(sld)) {
        keep = 3;
    }
    std::string out;
    for (std::size_t i = labels.size() - keep; i < labels.size(); ++i) {
        if (!out.empty()) {
            out += '.';
        }
        out += labels[i];
    }
    return out;
}

std::string url_host(std::string_view url)
{
    auto scheme = url.find("://");
    if (scheme == std::string_view::npos) {
        return {};
    }
    auto rest = url.substr(scheme + 3);
    auto end = rest.find_first_of("/?#");
    auto authority = rest.substr(0, end);
    if (auto at = authority.rfind('@'); at != std::string_view::npos) {
        authority = authority.substr(at + 1);
    }
    if (!authority.empty() && authority.front() == '[') {
        auto close = authority.find(']');
        return ascii_lower(authority.substr(0, close == std::string_view::npos ? authority.size() : close + 1));
    }
    if (auto colon = authority.find(':'); colon != std::string_view::npos) {
        authority = authority.substr(0, colon);
    }
    return ascii_lower(authority);
}

GroupMap GroupMap::parse(std::string_view text)
{
    GroupMap m;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty() || trim(line).front() == '#') {
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || trim(line.substr(0, tab)).empty() || trim(line.substr(tab + 1)).empty()) {
            throw Error(ErrorCode::BadRule, "group map line " + std::to_string(line_no) + ": expected prefix<TAB>group");
        }
        m.entries_.emplace_back(std::string(trim(line.substr(0, tab))), std::string(trim(line.substr(tab + 1))));
    }
    return m;
}

GroupMap GroupMap::load(const fs::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::BadRule, "cannot read group map " + file.string());
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
}

std::optional<std::string> GroupMap::lookup(std::string_view source) const
{
    auto host = url_host(source);
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& e : entries_) {
        bool match = source.substr(0, e.first.size()) == e.first || (!host.empty() && host == ascii_lower(e.first));
        if (match && (!best || e.first.size() > best->first.size())) {
            best = &e;
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return best->second;
}

std::vector<Source> collect_files(const std::vector<fs::path>& roots, const GroupMap& groups)
{
    if (roots.empty()) {
        throw Error(ErrorCode::EmptyInput, "no input files or directories");
    }
    auto is_pdf = [](const fs::path& p) { return ascii_lower(p.extension().string()) == ".pdf"; };
    std::vector<Source> out;
    for (const auto& root : roots) {
        std::error_code ec;
        auto status = fs::status(root, ec);
        if (ec || !fs::exists(status)) {
            throw Error(ErrorCode::EmptyInput, "no such file or directory: " + root.string());
        }
        std::vector<std::pair<fs::path, std::string>> found;
        if (fs::is_directory(status)) {
            auto root_name = fs::absolute(root).lexically_normal().filename().string();
            if (root_name.empty()) {
                root_name = fs::absolute(root).lexically_normal().parent_path().filename().string();
            }
            for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied);
                 it != fs::recursive_directory_iterator(); ++it) {
                if (!it->is_regular_file() || !is_pdf(it->path())) {
                    continue;
                }
                auto rel = it->path().lexically_relative(root);
                auto first = rel.begin();
                std::string group = std::next(first) == rel.end() ? root_name : first->string();
                found.emplace_back(it->path(), group);
            }
            std::sort(found.begin(), found.end());
        } else {
            auto parent = fs::absolute(root).lexically_normal().parent_path().filename().string();
            found.emplace_back(root, parent);
        }
        for (auto& [path, group] : found) {
            Source s;
            s.location = path.generic_string();
            s.group_key = groups.lookup(s.location).value_or(group);
            s.path = path;
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::string_view to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::Ok: return "Ok";
    case EntryStatus::Unparsable: return "Unparsable";
    case EntryStatus::Encrypted: return "Encrypted";
    case EntryStatus::FetchError: return "FetchError";
    }
    return "Ok";
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

namespace {

std::shared_ptr<const std::string> read_source(const Source& s)
{
    if (s.bytes) {
        return s.bytes;
    }
    std::ifstream in(*s.path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::EmptyInput, "cannot read " + s.path->string());
    }
    return std::make_shared<const std::string>((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void analyze(CorpusEntry& e, const std::string& bytes, const PipelineOptions& options)
{
    try {
        auto doc = parse_document(bytes);
        e.warnings = doc.warnings;
        if (doc.encrypted) {
            e.status = EntryStatus::Encrypted;
            e.assessment.encrypted = true;
            return;
        }
        auto ex = run_extractors(doc, *options.rules);
        e.assessment = assess_level(doc, ex.records, ex.findings, *options.rules);
        e.fingerprint =
            fingerprint_document(doc, ex.records, ex.findings, e.group_key, *options.rules, options.fingerprint);
        e.fingerprint.source_file = e.source;
        e.findings = std::move(ex.findings);
        e.warnings.insert(e.warnings.end(), ex.warnings.begin(), ex.warnings.end());
    } catch (const std::exception& ex) {
        e.status = EntryStatus::Unparsable;
        e.diagnostic = ex.what();
    } catch (...) {
        e.status = EntryStatus::Unparsable;
        e.diagnostic = "unknown failure";
    }
}

} // namespace

std::vector<CorpusEntry> run_pipeline(const std::vector<Source>& sources, const PipelineOptions& options)
{
    PipelineOptions opts = options;
    if (!opts.rules) {
        opts.rules = RuleSet::defaults();
    }
    std::size_t jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(sources.size(), 1));

    // Sources are claimed in sorted order so that the first of a set of
    // identical files is well defined regardless of scheduling.
    std::vector<std::size_t> order(sources.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sources[a].location < sources[b].location; });

    std::vector<CorpusEntry> entries(sources.size());
    std::vector<std::shared_ptr<const std::string>> contents(sources.size());
    std::mutex seen_mutex;
    std::map<std::string, std::size_t> seen; // sha256 -> rank in `order`

    // Pass 1: read and hash. Cheap compared to analysis, done in parallel too.
    std::atomic<std::size_t> next{0};
    auto hash_worker = [&] {
        for (std::size_t k; (k = next++) < order.size();) {
            auto i = order[k];
            auto& e = entries[i];
            const auto& s = sources[i];
            e.source = s.location;
            e.group_key = s.group_key;
            if (s.fetch_error) {
                e.status = EntryStatus::FetchError;
                e.diagnostic = *s.fetch_error;
                continue;
            }
            try {
                contents[i] = read_source(s);
                e.sha256 = sha256_hex(*contents[i]);
            } catch (const std::exception& ex) {
                e.status = EntryStatus::Unparsable;
                e.diagnostic = ex.what();
                continue;
            }
            std::lock_guard lock(seen_mutex);
            auto [it, inserted] = seen.emplace(e.sha256, k);
            if (!inserted && k < it->second) {
                it->second = k;
            }
        }
    };
    auto run = [&](auto&& worker) {
        next = 0;
        std::vector<std::thread> threads;
        for (std::size_t t = 1; t < jobs; ++t) {
            threads.emplace_back(worker);
        }
        worker();
        for (auto& t : threads) {
            t.join();
        }
    };
    run(hash_worker);

    // Pass 2: analyze the first copy of every distinct file.
    auto analyze_worker = [&] {
        for (std::size_t k; (k = next++) < order.size();) {
            auto i = order[k];
            auto& e = entries[i];
            if (!contents[i]) {
                continue;
            }
            auto first = seen.at(e.sha256);
            if (first != k) {
                e.duplicate_of = sources[order[first]].location;
            } else {
                analyze(e, *contents[i], opts);
            }
            contents[i].reset();
        }
    };
    run(analyze_worker);

    std::sort(entries.begin(), entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
        return std::tie(a.sha256, a.source) < std::tie(b.sha256, b.source);
    });
    return entries;
}

namespace {

nlohmann::ordered_json entry_json(const CorpusEntry& e)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = "pdffoot.entry/1";
    j["source"] = e.source;
    j["group"] = e.group_key;
    j["sha256"] = e.sha256;
    j["status"] = std::string(to_string(e.status));
    j["duplicate_of"] = e.duplicate_of ? ordered_json(*e.duplicate_of) : ordered_json(nullptr);
    j["diagnostic"] = e.diagnostic;
    j["warnings"] = e.warnings;

    ordered_json a;
    a["path"] = e.source;
    a["level"] = e.assessment.level ? ordered_json(*e.assessment.level) : ordered_json(nullptr);
    auto flags = ordered_json::array();
    for (auto f : e.assessment.weak_flags) {
        flags.push_back(std::string(to_string(f)));
    }
    a["weak_flags"] = std::move(flags);
    a["evidence"] = e.assessment.evidence;
    a["encrypted"] = e.assessment.encrypted;
    j["assessment"] = std::move(a);

    ordered_json fp;
    const auto& f = e.fingerprint;
    fp["author"] = f.author ? ordered_json(*f.author) : ordered_json(nullptr);
    fp["tool_family"] = f.tool.family;
    fp["tool_version"] = f.tool.version;
    fp["tool_raw"] = f.tool.raw;
    fp["tool_rule"] = f.tool.rule_id;
    fp["os"] = std::string(to_string(f.os));
    fp["os_token"] = f.os_token;
    fp["created"] = f.created ? ordered_json(f.created->iso()) : ordered_json(nullptr);
    fp["modified"] = f.modified ? ordered_json(f.modified->iso()) : ordered_json(nullptr);
    j["fingerprint"] = std::move(fp);

    auto findings = ordered_json::array();
    for (const auto& fi : e.findings) {
        ordered_json x;
        x["category"] = std::string(to_string(fi.category));
        x["value"] = fi.value;
        x["key"] = fi.key;
        x["confidence"] = std::string(to_string(fi.confidence));
        x["origin"] = std::string(to_string(fi.origin));
        x["object"] = fi.evidence.object ? ordered_json(fi.evidence.object->str()) : ordered_json(nullptr);
        x["offset"] = fi.evidence.offset;
        x["identifying"] = fi.identifying;
        findings.push_back(std::move(x));
    }
    j["findings"] = std::move(findings);
    return j;
}

} // namespace

void write_jsonl(std::ostream& out, const std::vector<CorpusEntry>& entries)
{
    for (const auto& e : entries) {
        out << entry_json(e).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    }
}

void write_entries_csv(std::ostream& out, const std::vector<CorpusEntry>& entries)
{
    out << "source,group,sha256,status,level,weak_flags,author,tool,version,os,year\n";
    for (const auto& e : entries) {
        std::string flags;
        for (auto f : e.assessment.weak_flags) {
            flags += (flags.empty() ? "" : ";") + std::string(to_string(f));
        }
        const auto& f = e.fingerprint;
        auto year = f.year();
        out << csv_field(e.source) << ',' << csv_field(e.group_key) << ',' << e.sha256 << ','
            << (e.duplicate_of ? "Duplicate" : to_string(e.status)) << ','
            << (e.assessment.level ? std::to_string(*e.assessment.level) : "") << ',' << csv_field(flags) << ','
            << csv_field(f.author.value_or("")) << ',' << csv_field(f.tool.family) << ',' << csv_field(f.tool.version)
            << ',' << (e.counted() ? to_string(f.os) : "") << ',' << (year ? std::to_string(*year) : "") << '\n';
    }
}

} // namespace pdffoot
