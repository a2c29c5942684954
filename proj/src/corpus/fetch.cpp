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
#include "pdffoot/text.hpp"

#include "httplib.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace pdffoot {

namespace {

struct UrlParts {
    std::string origin; // scheme://host[:port]
    std::string target; // path and query, at least "/"
};

std::optional<UrlParts> split_url(std::string_view url)
{
    auto scheme = url.find("://");
    if (scheme == std::string_view::npos) {
        return std::nullopt;
    }
    auto s = ascii_lower(url.substr(0, scheme));
    if (s != "http" && s != "https") {
        return std::nullopt;
    }
    auto slash = url.find('/', scheme + 3);
    UrlParts p;
    p.origin = std::string(url.substr(0, slash));
    p.target = slash == std::string_view::npos ? "/" : std::string(url.substr(slash));
    if (auto hash = p.target.find('#'); hash != std::string::npos) {
        p.target.erase(hash);
    }
    return p;
}

} // namespace

HttpResponse HttpTransport::get(const std::string& url, const FetchOptions& options)
{
    HttpResponse r;
    auto parts = split_url(url);
    if (!parts) {
        r.error = "unsupported URL";
        return r;
    }
    httplib::Client client(parts->origin);
    client.set_follow_location(true);
    client.set_connection_timeout(static_cast<time_t>(options.timeout.count()), 0);
    client.set_read_timeout(static_cast<time_t>(options.timeout.count()), 0);
    client.set_default_headers({{"User-Agent", options.user_agent}});
    bool oversize = false;
    auto res = client.Get(parts->target, [&](const char* data, std::size_t len) {
        if (r.body.size() + len > options.max_size) {
            oversize = true;
            return false;
        }
        r.body.append(data, len);
        return true;
    });
    if (oversize) {
        r.body.clear();
        r.error = "response exceeds " + std::to_string(options.max_size) + " bytes";
        return r;
    }
    if (!res) {
        r.error = httplib::to_string(res.error());
        return r;
    }
    r.status = res->status;
    return r;
}

Clock::time_point SystemClock::now() { return std::chrono::steady_clock::now(); }

void SystemClock::sleep_until(time_point t) { std::this_thread::sleep_until(t); }

void RateLimiter::acquire(const std::string& host)
{
    std::optional<Clock::time_point> slot;
    {
        std::lock_guard lock(mutex_);
        if (auto it = next_.find(host); it != next_.end()) {
            slot = it->second;
        }
    }
    if (slot && *slot > clock_.now()) {
        clock_.sleep_until(*slot);
    }
}

void RateLimiter::release(const std::string& host)
{
    auto next = clock_.now() + interval_;
    std::lock_guard lock(mutex_);
    next_[host] = next;
}

namespace {

// Robots path pattern match with `*` wildcards and an optional `$` anchor.
bool robots_match(std::string_view pattern, std::string_view path)
{
    bool anchored = !pattern.empty() && pattern.back() == '$';
    if (anchored) {
        pattern.remove_suffix(1);
    }
    // Backtracking glob over '*'.
    std::size_t p = 0, s = 0, star = std::string_view::npos, mark = 0;
    while (s < path.size()) {
        if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = s;
        } else if (p < pattern.size() && pattern[p] == path[s]) {
            ++p;
            ++s;
        } else if (p == pattern.size() && !anchored) {
            return true;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            s = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') {
        ++p;
    }
    return p == pattern.size();
}

} // namespace

RobotsRules RobotsRules::parse(std::string_view text, std::string_view user_agent)
{
    // Groups are runs of User-agent lines followed by rules. The group naming
    // our agent wins over the `*` group.
    auto agent = ascii_lower(user_agent);
    if (auto slash = agent.find('/'); slash != std::string::npos) {
        agent.erase(slash);
    }
    std::vector<std::pair<std::string, bool>> specific, wildcard;
    bool in_specific = false, in_wildcard = false, seen_specific = false, last_was_agent = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            continue;
        }
        auto key = ascii_lower(trim(line.substr(0, colon)));
        auto value = std::string(trim(line.substr(colon + 1)));
        if (key == "user-agent") {
            if (!last_was_agent) {
                in_specific = in_wildcard = false;
            }
            auto v = ascii_lower(value);
            if (v == "*") {
                in_wildcard = true;
            } else if (!v.empty() && agent.find(v) != std::string::npos) {
                in_specific = seen_specific = true;
            }
            last_was_agent = true;
            continue;
        }
        last_was_agent = false;
        if (key != "allow" && key != "disallow") {
            continue;
        }
        if (value.empty()) {
            continue; // "Disallow:" allows everything
        }
        std::pair<std::string, bool> rule{value, key == "allow"};
        if (in_specific) {
            specific.push_back(rule);
        }
        if (in_wildcard) {
            wildcard.push_back(rule);
        }
    }
    RobotsRules r;
    r.rules_ = seen_specific ? std::move(specific) : std::move(wildcard);
    return r;
}

bool RobotsRules::allowed(std::string_view path) const
{
    const std::pair<std::string, bool>* best = nullptr;
    for (const auto& rule : rules_) {
        if (!robots_match(rule.first, path)) {
            continue;
        }
        if (!best || rule.first.size() > best->first.size() ||
            (rule.first.size() == best->first.size() && rule.second)) {
            best = &rule;
        }
    }
    return !best || best->second;
}

std::vector<std::string> read_url_list(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) {
        throw Error(ErrorCode::EmptyInput, "cannot read URL list " + file.string());
    }
    std::vector<std::string> urls;
    for (std::string line; std::getline(in, line);) {
        auto t = trim(line);
        if (!t.empty() && t.front() != '#') {
            urls.emplace_back(t);
        }
    }
    return urls;
}

std::vector<Source> fetch_urls(const std::vector<std::string>& urls, Transport& transport, Clock& clock,
                               const FetchOptions& options, const GroupMap& groups)
{
    std::vector<Source> out(urls.size());
    std::map<std::string, std::vector<std::size_t>> by_host;
    for (std::size_t i = 0; i < urls.size(); ++i) {
        auto host = url_host(urls[i]);
        out[i].location = urls[i];
        out[i].group_key = groups.lookup(urls[i]).value_or(host.empty() ? std::string() : registrable_domain(host));
        by_host[host].push_back(i);
    }
    std::vector<std::pair<std::string, std::vector<std::size_t>>> hosts(by_host.begin(), by_host.end());

    RateLimiter limiter(clock, options.interval);
    auto fetch_host = [&](const std::string& host, const std::vector<std::size_t>& indices) {
        if (host.empty()) {
            for (auto i : indices) {
                out[i].fetch_error = "not an http(s) URL";
            }
            return;
        }
        std::optional<RobotsRules> robots;
        auto first = std::find_if(indices.begin(), indices.end(), [&](std::size_t i) { return split_url(urls[i]); });
        if (options.robots && first != indices.end()) {
            auto parts = split_url(urls[*first]);
            limiter.acquire(host);
            auto r = transport.get(parts->origin + "/robots.txt", options);
            limiter.release(host);
            // A missing or unreadable robots.txt allows everything.
            robots = RobotsRules::parse(r.error.empty() && r.status == 200 ? r.body : "", options.user_agent);
        }
        for (auto i : indices) {
            auto parts = split_url(urls[i]);
            if (!parts) {
                out[i].fetch_error = "not an http(s) URL";
                continue;
            }
            if (robots && !robots->allowed(parts->target)) {
                out[i].fetch_error = "disallowed by robots.txt";
                continue;
            }
            limiter.acquire(host);
            auto r = transport.get(urls[i], options);
            limiter.release(host);
            if (!r.error.empty()) {
                out[i].fetch_error = r.error;
            } else if (r.status != 200) {
                out[i].fetch_error = "HTTP " + std::to_string(r.status);
            } else {
                out[i].bytes = std::make_shared<const std::string>(std::move(r.body));
            }
        }
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < hosts.size();) {
            fetch_host(hosts[k].first, hosts[k].second);
        }
    };
    std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(hosts.size(), 1));
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < jobs; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) {
        t.join();
    }
    return out;
}

} // namespace pdffoot
