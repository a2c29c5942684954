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

#include "pdffoot/fingerprint.hpp"

#include "pdffoot/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace pdffoot {

namespace {

class DateReader {
public:
    explicit DateReader(std::string_view s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    void skip() { ++pos_; }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool digits_ahead(std::size_t n) const
    {
        if (s_.size() - std::min(pos_, s_.size()) < n) {
            return false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (s_[pos_ + i] < '0' || s_[pos_ + i] > '9') {
                return false;
            }
        }
        return true;
    }

    int number(std::size_t n)
    {
        int v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            v = v * 10 + (s_[pos_++] - '0');
        }
        return v;
    }

    std::string_view rest() const { return s_.substr(std::min(pos_, s_.size())); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

[[noreturn]] void bad_date(std::string_view s, const char* why)
{
    throw Error(ErrorCode::UnparsableDate, "'" + std::string(s) + "': " + why);
}

void check_ranges(const Timestamp& t, std::string_view s)
{
    if (t.month < 1 || t.month > 12 || t.day < 1 || t.day > 31 || t.hour > 23 || t.minute > 59 || t.second > 60) {
        bad_date(s, "field out of range");
    }
    if (t.offset_minutes && (*t.offset_minutes < -24 * 60 || *t.offset_minutes > 24 * 60)) {
        bad_date(s, "offset out of range");
    }
}

long long days_from_civil(int y, int m, int d)
{
    y -= m <= 2;
    const long long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long long>(doe) - 719468;
}

std::vector<long long> version_parts(std::string_view v)
{
    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        auto dot = v.find('.', pos);
        auto piece = v.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        long long n = 0;
        for (char c : piece) {
            if (c >= '0' && c <= '9') {
                n = n * 10 + (c - '0');
            }
        }
        parts.push_back(n);
        if (dot == std::string_view::npos) {
            break;
        }
        pos = dot + 1;
    }
    return parts;
}

} // namespace

std::string Timestamp::iso() const
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", year, month, day, hour, minute, second);
    std::string out = buf;
    if (offset_minutes) {
        int off = *offset_minutes;
        char sign = off < 0 ? '-' : '+';
        off = off < 0 ? -off : off;
        std::snprintf(buf, sizeof buf, "%c%02d:%02d", sign, off / 60, off % 60);
        out += buf;
    }
    return out;
}

long long Timestamp::naive_seconds() const
{
    return days_from_civil(year, month, day) * 86400LL + hour * 3600LL + minute * 60LL + second;
}

long long Timestamp::utc_seconds() const { return naive_seconds() - offset_minutes.value_or(0) * 60LL; }

Timestamp parse_pdf_date(std::string_view input)
{
    std::string_view s = trim(input);
    Timestamp t;
    t.raw = std::string(input);
    if (s.substr(0, 2) == "D:") {
        s.remove_prefix(2);
    } else {
        t.lenient = true;
    }
    DateReader r(s);
    if (!r.digits_ahead(4)) {
        bad_date(input, "no four-digit year");
    }
    t.year = r.number(4);
    t.precision = DatePrecision::Year;
    int* fields[] = {&t.month, &t.day, &t.hour, &t.minute, &t.second};
    DatePrecision precisions[] = {DatePrecision::Month, DatePrecision::Day, DatePrecision::Hour, DatePrecision::Minute,
                                  DatePrecision::Second};
    for (std::size_t i = 0; i < 5 && r.digits_ahead(2); ++i) {
        *fields[i] = r.number(2);
        t.precision = precisions[i];
    }
    if (r.accept('Z')) {
        t.offset_minutes = 0;
        // Some writers append 00'00' after Z.
        if (r.digits_ahead(2)) {
            r.number(2);
            r.accept('\'');
            if (r.digits_ahead(2)) {
                r.number(2);
            }
            r.accept('\'');
        }
    } else if (r.peek() == '+' || r.peek() == '-') {
        int sign = r.peek() == '-' ? -1 : 1;
        r.skip();
        if (!r.digits_ahead(2)) {
            bad_date(input, "bad offset hours");
        }
        int hh = r.number(2);
        int mm = 0;
        r.accept('\'');
        if (r.digits_ahead(2)) {
            mm = r.number(2);
        }
        r.accept('\'');
        if (hh > 23 || mm > 59) {
            bad_date(input, "offset out of range");
        }
        t.offset_minutes = sign * (hh * 60 + mm);
    }
    if (!r.done()) {
        bad_date(input, "trailing characters");
    }
    check_ranges(t, input);
    return t;
}

Timestamp parse_xmp_date(std::string_view input)
{
    std::string_view s = trim(input);
    Timestamp t;
    t.raw = std::string(input);
    DateReader r(s);
    if (!r.digits_ahead(4)) {
        bad_date(input, "no four-digit year");
    }
    t.year = r.number(4);
    t.precision = DatePrecision::Year;
    if (r.accept('-')) {
        if (!r.digits_ahead(2)) {
            bad_date(input, "bad month");
        }
        t.month = r.number(2);
        t.precision = DatePrecision::Month;
        if (r.accept('-')) {
            if (!r.digits_ahead(2)) {
                bad_date(input, "bad day");
            }
            t.day = r.number(2);
            t.precision = DatePrecision::Day;
            if (r.accept('T')) {
                if (!r.digits_ahead(2)) {
                    bad_date(input, "bad hour");
                }
                t.hour = r.number(2);
                if (!r.accept(':') || !r.digits_ahead(2)) {
                    bad_date(input, "bad minute");
                }
                t.minute = r.number(2);
                t.precision = DatePrecision::Minute;
                if (r.accept(':')) {
                    if (!r.digits_ahead(2)) {
                        bad_date(input, "bad second");
                    }
                    t.second = r.number(2);
                    t.precision = DatePrecision::Second;
                    if (r.accept('.')) {
                        while (r.digits_ahead(1)) {
                            r.skip();
                        }
                    }
                }
                if (r.accept('Z')) {
                    t.offset_minutes = 0;
                } else if (r.peek() == '+' || r.peek() == '-') {
                    int sign = r.peek() == '-' ? -1 : 1;
                    r.skip();
                    if (!r.digits_ahead(2)) {
                        bad_date(input, "bad offset");
                    }
                    int hh = r.number(2);
                    r.accept(':');
                    int mm = r.digits_ahead(2) ? r.number(2) : 0;
                    t.offset_minutes = sign * (hh * 60 + mm);
                }
            }
        }
    }
    if (!r.done()) {
        bad_date(input, "trailing characters");
    }
    check_ranges(t, input);
    return t;
}

std::optional<Timestamp> try_parse_date(std::string_view s)
{
    try {
        return parse_pdf_date(s);
    } catch (const Error&) {
    }
    try {
        return parse_xmp_date(s);
    } catch (const Error&) {
    }
    return std::nullopt;
}

std::string_view to_string(OsSource s)
{
    switch (s) {
    case OsSource::Producer: return "Producer";
    case OsSource::Creator: return "Creator";
    case OsSource::PlatformKey: return "PlatformKey";
    }
    return "?";
}

std::vector<OsEvidence> os_tokens(std::string_view text, OsSource source, const RuleSet& rules)
{
    std::vector<OsEvidence> out;
    if (text.empty()) {
        return out;
    }
    std::string s(text);
    for (const auto& tok : rules.os_tokens) {
        std::smatch m;
        if (std::regex_search(s, m, tok.pattern.re)) {
            out.push_back({source, tok.os, m.str()});
        }
    }
    return out;
}

ToolFingerprint classify_tool(const std::optional<std::string>& producer, const std::optional<std::string>& creator,
                              const RuleSet& rules)
{
    ToolFingerprint fp;
    std::string raw;
    if (producer && !trim(*producer).empty()) {
        raw = *producer;
    } else if (creator && !trim(*creator).empty()) {
        raw = *creator;
    } else {
        return fp;
    }
    fp.raw = raw;
    for (const auto& rule : rules.tools) {
        std::smatch m;
        if (!std::regex_search(raw, m, rule.pattern.re)) {
            continue;
        }
        fp.family = rule.family;
        fp.rule_id = rule.id;
        if (m.size() > 1 && m[1].matched) {
            fp.version = m[1].str();
        }
        if (rule.os != OsHint::Unknown) {
            fp.os_hint = rule.os;
            fp.os_token = m.str();
        }
        break;
    }
    if (fp.rule_id.empty()) {
        fp.family = std::string(trim(raw));
        fp.rule_id = "fallback";
    }
    auto tokens = os_tokens(raw, OsSource::Producer, rules);
    if (!tokens.empty()) {
        fp.os_hint = tokens.front().os;
        fp.os_token = tokens.front().token;
    }
    return fp;
}

ToolFingerprint classify_tool(const std::optional<std::string>& producer, const std::optional<std::string>& creator)
{
    return classify_tool(producer, creator, *RuleSet::defaults());
}

OsVerdict infer_os(const std::vector<OsEvidence>& hints)
{
    for (auto source : {OsSource::Producer, OsSource::Creator, OsSource::PlatformKey}) {
        OsVerdict v;
        for (const auto& h : hints) {
            if (h.source != source || h.os == OsHint::Unknown) {
                continue;
            }
            if (v.os == OsHint::Unknown && !v.conflict) {
                v.os = h.os;
                v.token = h.token;
            } else if (h.os != v.os) {
                v.conflict = true;
            }
        }
        if (v.conflict) {
            return OsVerdict{OsHint::Unknown, {}, true};
        }
        if (v.os != OsHint::Unknown) {
            return v;
        }
    }
    return {};
}

OsVerdict infer_os(std::vector<OsEvidence> hints, const std::vector<Finding>& extra, const RuleSet& rules)
{
    for (const auto& f : extra) {
        if (f.category == FindingCategory::PlatformKey && f.identifying) {
            auto t = os_tokens(f.value, OsSource::PlatformKey, rules);
            hints.insert(hints.end(), t.begin(), t.end());
        }
    }
    return infer_os(hints);
}

std::optional<int> DocumentFingerprint::year() const
{
    if (created) {
        return created->year;
    }
    if (modified) {
        return modified->year;
    }
    return std::nullopt;
}

DocumentFingerprint fingerprint_document(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                         const std::vector<Finding>& findings, const std::string& group_key,
                                         const RuleSet& rules, const FingerprintOptions& options)
{
    DocumentFingerprint fp;
    fp.group_key = group_key;
    if (doc.encrypted) {
        return fp;
    }

    std::vector<const MetadataRecord*> order;
    for (const auto& r : records) {
        if (r.current) {
            order.push_back(&r);
        }
    }
    for (const auto& r : records) {
        if (!r.current && !r.orphan() && !r.superseded) {
            order.push_back(&r);
        }
    }
    if (options.include_orphans) {
        for (const auto& r : records) {
            if (!r.current && (r.orphan() || r.superseded)) {
                order.push_back(&r);
            }
        }
    }

    auto first = [&](std::string_view key) -> std::optional<std::string> {
        for (const auto* r : order) {
            auto v = std::string(trim(r->text(key)));
            if (!v.empty()) {
                return v;
            }
        }
        return std::nullopt;
    };

    for (const auto* r : order) {
        for (const auto& key : rules.author_keys) {
            auto v = std::string(trim(r->text(key)));
            if (!v.empty()) {
                fp.author = v;
                break;
            }
        }
        if (fp.author) {
            break;
        }
    }

    auto producer = first("Producer");
    auto creator = first("Creator");
    fp.tool = classify_tool(producer, creator, rules);

    std::vector<OsEvidence> hints;
    if (producer) {
        auto t = os_tokens(*producer, OsSource::Producer, rules);
        hints.insert(hints.end(), t.begin(), t.end());
        if (fp.tool.raw == *producer && fp.tool.os_hint != OsHint::Unknown && t.empty()) {
            hints.push_back({OsSource::Producer, fp.tool.os_hint, fp.tool.os_token});
        }
    }
    if (creator) {
        auto t = os_tokens(*creator, OsSource::Creator, rules);
        hints.insert(hints.end(), t.begin(), t.end());
        if (fp.tool.raw == *creator && !producer && fp.tool.os_hint != OsHint::Unknown && t.empty()) {
            hints.push_back({OsSource::Creator, fp.tool.os_hint, fp.tool.os_token});
        }
    }
    if (auto platform = first("Platform")) {
        auto t = os_tokens(*platform, OsSource::PlatformKey, rules);
        hints.insert(hints.end(), t.begin(), t.end());
    }
    auto verdict = infer_os(hints, findings, rules);
    fp.os = verdict.os;
    fp.os_token = verdict.token;
    if (verdict.conflict) {
        fp.warnings.push_back("Conflict: OS hints disagree");
    }

    auto date = [&](std::string_view key, std::optional<Timestamp>& out) {
        for (const auto* r : order) {
            auto v = std::string(trim(r->text(key)));
            if (v.empty()) {
                continue;
            }
            out = try_parse_date(v);
            if (!out) {
                fp.warnings.push_back("UnparsableDate: " + std::string(key) + " '" + v + "'");
            } else if (out->lenient) {
                fp.warnings.push_back("lenient date: " + std::string(key) + " '" + v + "'");
            }
            return;
        }
    };
    date("CreationDate", fp.created);
    date("ModDate", fp.modified);
    if (fp.created && fp.modified && fp.created->utc_seconds() > fp.modified->utc_seconds()) {
        fp.warnings.push_back("CreationDate is after ModDate");
    }
    return fp;
}

int compare_versions(std::string_view a, std::string_view b)
{
    auto pa = version_parts(a);
    auto pb = version_parts(b);
    std::size_t n = std::min(pa.size(), pb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (pa[i] != pb[i]) {
            return pa[i] < pb[i] ? -1 : 1;
        }
    }
    if (pa.size() != pb.size()) {
        return pa.size() < pb.size() ? -1 : 1;
    }
    return 0;
}

} // namespace pdffoot
