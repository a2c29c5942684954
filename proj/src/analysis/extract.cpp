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

#include "pdffoot/extract.hpp"

#include "pdffoot/errors.hpp"
#include "pdffoot/filters.hpp"
#include "pdffoot/parser.hpp"
#include "pdffoot/xmp.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <unordered_map>

namespace pdffoot {

namespace {

// One object version together with where it lives.
struct Site {
    ObjectId id;
    const ObjectRecord* rec = nullptr;
    Origin origin = Origin::Reachable;
};

std::vector<Site> all_sites(const PdfDocument& doc)
{
    std::vector<Site> out;
    out.reserve(doc.objects.size() + doc.shadows.size());
    for (const auto& [id, rec] : doc.objects) {
        out.push_back({id, &rec, doc.reachable.count(id) ? Origin::Reachable : Origin::Orphan});
    }
    for (const auto& s : doc.shadows) {
        out.push_back({s.id, &s.record, Origin::Shadow});
    }
    return out;
}

template <class OnDict, class OnString>
void walk(const PdfObject& obj, OnDict& on_dict, OnString& on_string)
{
    switch (obj.kind()) {
    case ObjectKind::String: on_string(obj.as_string()); break;
    case ObjectKind::Array:
        for (const auto& v : obj.as_array()) {
            walk(v, on_dict, on_string);
        }
        break;
    case ObjectKind::Dictionary:
    case ObjectKind::Stream:
        on_dict(*obj.dict(), obj);
        for (const auto& [k, v] : *obj.dict()) {
            walk(v, on_dict, on_string);
        }
        break;
    default: break;
    }
}

template <class OnDict>
void walk_dicts(const PdfObject& obj, OnDict on_dict)
{
    auto ignore = [](const String&) {};
    walk(obj, on_dict, ignore);
}

template <class OnString>
void walk_strings(const PdfObject& obj, OnString on_string)
{
    auto ignore = [](const Dictionary&, const PdfObject&) {};
    walk(obj, ignore, on_string);
}

Evidence evidence_at(const PdfDocument& doc, std::optional<ObjectId> id, std::size_t offset)
{
    return Evidence{id, offset, doc.excerpt(offset)};
}

std::size_t string_offset(const String& s, const Site& site)
{
    return s.offset != std::string::npos ? s.offset : site.rec->offset;
}

Finding make_finding(FindingCategory cat, std::string value, std::string key, Confidence conf, Origin origin,
                     Evidence ev)
{
    Finding f;
    f.category = cat;
    f.value = std::move(value);
    f.key = std::move(key);
    f.confidence = conf;
    f.origin = origin;
    f.evidence = std::move(ev);
    return f;
}

bool is_metadata_stream(const PdfObject& obj) { return obj.is_stream() && obj.as_stream().dict.name("Type") == "Metadata"; }

bool is_info_like(const PdfObject& obj, const RuleSet& rules)
{
    if (!obj.is_dict()) {
        return false;
    }
    int n = 0;
    for (const auto& [k, v] : obj.as_dict()) {
        if (rules.is_canonical(k)) {
            ++n;
        }
    }
    return n >= 2;
}

std::vector<ObjectId> trailer_info_ids(const PdfDocument& doc)
{
    std::vector<ObjectId> ids;
    for (const auto& t : doc.trailers) {
        const auto* info = t.find("Info");
        if (info && info->is_ref() && std::find(ids.begin(), ids.end(), info->as_ref()) == ids.end()) {
            ids.push_back(info->as_ref());
        }
    }
    return ids;
}

std::optional<ObjectId> current_info_id(const PdfDocument& doc)
{
    const auto* t = doc.current_trailer();
    if (!t) {
        return std::nullopt;
    }
    const auto* info = t->find("Info");
    if (info && info->is_ref()) {
        return info->as_ref();
    }
    return std::nullopt;
}

bool is_metadata_site(const Site& s, const std::vector<ObjectId>& info_ids, const RuleSet& rules)
{
    const auto& obj = s.rec->object;
    if (is_metadata_stream(obj)) {
        return true;
    }
    if (obj.is_dict() && std::find(info_ids.begin(), info_ids.end(), s.id) != info_ids.end()) {
        return true;
    }
    return s.origin != Origin::Reachable && is_info_like(obj, rules);
}

Origin record_origin(const MetadataRecord& r)
{
    if (r.superseded) {
        return Origin::Shadow;
    }
    return r.orphan() ? Origin::Orphan : Origin::Reachable;
}

std::optional<DecodedString> text_value(const PdfDocument& doc, const PdfObject* v)
{
    if (!v) {
        return std::nullopt;
    }
    const auto* r = doc.resolve(*v);
    if (!r) {
        return std::nullopt;
    }
    if (r->is_string()) {
        return decode_string(r->as_string().bytes);
    }
    if (r->is_name()) {
        return utf8_value(r->as_name());
    }
    return std::nullopt;
}

// Offset of a value for evidence: the string token when direct, else the object.
std::size_t value_offset(const PdfObject* v, const Site& site)
{
    if (v && v->is_string()) {
        return string_offset(v->as_string(), site);
    }
    return site.rec->offset;
}

MetadataRecord info_record(const PdfDocument& doc, const Site& s, MetadataSource source)
{
    MetadataRecord r;
    r.source = source;
    r.object = s.id;
    r.offset = s.rec->offset;
    for (const auto& [k, v] : s.rec->object.as_dict()) {
        const auto* target = doc.resolve(v);
        if (target && target->is_string()) {
            r.fields.push_back({k, decode_string(target->as_string().bytes), ""});
        }
    }
    return r;
}

std::optional<MetadataRecord> xmp_record(const Site& s, MetadataSource source, const RuleSet& rules,
                                         std::vector<std::string>* warnings)
{
    std::string xml;
    try {
        xml = decode_stream(s.rec->object.as_stream());
    } catch (const Error& e) {
        if (warnings) {
            warnings->push_back("metadata stream " + s.id.str() + ": " + e.what());
        }
        return std::nullopt;
    }
    auto packet = parse_xmp(xml);
    if (packet.salvaged && warnings) {
        warnings->push_back("metadata stream " + s.id.str() + " is not well-formed XML (" + packet.error +
                            "); salvaged " + std::to_string(packet.properties.size()) + " properties");
    }
    MetadataRecord r;
    r.source = source;
    r.object = s.id;
    r.offset = s.rec->offset;
    for (const auto& p : packet.properties) {
        std::string key = rules.xmp_key(p.name);
        if (key.empty()) {
            key = p.name;
        }
        if (r.field(key)) {
            continue;
        }
        r.fields.push_back({key, utf8_value(p.value), p.name});
    }
    return r;
}

const std::regex& email_regex()
{
    static const std::regex re(R"([A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,})");
    return re;
}

std::string strip_trailing_punct(std::string s)
{
    while (!s.empty() && std::string_view(".,;)]'\"").find(s.back()) != std::string_view::npos) {
        s.pop_back();
    }
    return s;
}

bool might_hold_path(std::string_view t)
{
    return t.find(":\\") != std::string_view::npos || t.find("\\\\") != std::string_view::npos ||
           t.find("/home/") != std::string_view::npos || t.find("/Users/") != std::string_view::npos;
}

} // namespace

std::vector<std::string> find_paths(std::string_view text)
{
    static const std::regex win(R"(\b([A-Za-z]:\\(?:[^\\/:*?"<>|\r\n]+\\)*[^\\/:*?"<>|\r\n\s]*))");
    static const std::regex unc(R"((?:^|[\s"'(:=])(\\\\[A-Za-z0-9._$-]+\\(?:[^\\/:*?"<>|\r\n]+\\)*[^\\/:*?"<>|\r\n\s]*))");
    static const std::regex unix_home(R"((?:^|[\s"'(:=])(/(?:home|Users)/[^\s"'()<>]+))");
    std::vector<std::string> out;
    if (!might_hold_path(text)) {
        return out;
    }
    std::string s(text);
    for (const auto* re : {&win, &unc, &unix_home}) {
        for (std::sregex_iterator it(s.begin(), s.end(), *re), end; it != end; ++it) {
            auto p = strip_trailing_punct((*it)[1].str());
            if (!p.empty() && std::find(out.begin(), out.end(), p) == out.end()) {
                out.push_back(p);
            }
        }
    }
    return out;
}

std::set<ObjectId> metadata_objects(const PdfDocument& doc, const RuleSet& rules)
{
    auto info_ids = trailer_info_ids(doc);
    std::set<ObjectId> out;
    for (const auto& s : all_sites(doc)) {
        if (s.origin != Origin::Shadow && is_metadata_site(s, info_ids, rules)) {
            out.insert(s.id);
        }
    }
    return out;
}

std::vector<MetadataRecord> extract_metadata(const PdfDocument& doc, const RuleSet& rules,
                                             std::vector<std::string>* warnings)
{
    std::vector<MetadataRecord> out;
    auto info_ids = trailer_info_ids(doc);
    auto current = current_info_id(doc);
    auto sites = all_sites(doc);

    for (const auto& id : info_ids) {
        const auto* rec = doc.record(id);
        if (!rec || !rec->object.is_dict()) {
            continue;
        }
        Site s{id, rec, Origin::Reachable};
        auto r = info_record(doc, s, MetadataSource::InfoDict);
        r.current = current && *current == id;
        out.push_back(std::move(r));
    }
    for (const auto& s : sites) {
        if (s.origin == Origin::Reachable && is_metadata_stream(s.rec->object)) {
            if (auto r = xmp_record(s, MetadataSource::XmpStream, rules, warnings)) {
                r->current = doc.live.count(s.id) > 0;
                out.push_back(std::move(*r));
            }
        }
    }

    std::vector<const Site*> orphans;
    for (const auto& s : sites) {
        if (s.origin == Origin::Orphan && (is_metadata_stream(s.rec->object) || is_info_like(s.rec->object, rules))) {
            orphans.push_back(&s);
        }
    }
    std::stable_sort(orphans.begin(), orphans.end(),
                     [](const Site* a, const Site* b) { return a->rec->offset < b->rec->offset; });
    for (const auto* s : orphans) {
        if (s->rec->object.is_stream()) {
            if (auto r = xmp_record(*s, MetadataSource::OrphanXmpStream, rules, warnings)) {
                out.push_back(std::move(*r));
            }
        } else {
            out.push_back(info_record(doc, *s, MetadataSource::OrphanInfoDict));
        }
    }

    for (const auto& s : sites) {
        if (s.origin != Origin::Shadow || !is_metadata_site(s, info_ids, rules)) {
            continue;
        }
        bool orphan_id = doc.orphans.count(s.id) > 0;
        std::optional<MetadataRecord> r;
        if (s.rec->object.is_stream()) {
            r = xmp_record(s, orphan_id ? MetadataSource::OrphanXmpStream : MetadataSource::XmpStream, rules,
                           warnings);
        } else {
            r = info_record(doc, s, orphan_id ? MetadataSource::OrphanInfoDict : MetadataSource::InfoDict);
        }
        if (r) {
            r->superseded = true;
            out.push_back(std::move(*r));
        }
    }
    return out;
}

std::vector<MetadataRecord> extract_metadata(const PdfDocument& doc) { return extract_metadata(doc, *RuleSet::defaults()); }

std::vector<Finding> extract_annotations(const PdfDocument& doc)
{
    std::vector<Finding> out;
    for (const auto& s : all_sites(doc)) {
        walk_dicts(s.rec->object, [&](const Dictionary& d, const PdfObject&) {
            bool annot = d.name("Type") == "Annot" || (d.name("Subtype") && d.contains("Rect") && !d.contains("Type"));
            if (!annot) {
                return;
            }
            for (const char* key : {"T", "Contents", "M"}) {
                const auto* v = d.find(key);
                auto text = text_value(doc, v);
                if (!text || trim(text->text).empty()) {
                    continue;
                }
                out.push_back(make_finding(FindingCategory::Annotation, text->text, key, Confidence::Exact, s.origin,
                                           evidence_at(doc, s.id, value_offset(v, s))));
            }
        });
    }
    return out;
}

std::vector<Finding> extract_comments(std::string_view bytes, const PdfDocument& doc)
{
    std::vector<Finding> out;
    auto spans = doc.stream_spans;
    std::sort(spans.begin(), spans.end());
    std::size_t next_span = 0;

    // The line after the header is the binary marker when it carries high bytes.
    std::size_t marker = std::string_view::npos;
    std::size_t header = doc.header_offset;
    if (header < bytes.size()) {
        std::size_t eol = bytes.find_first_of("\r\n", header);
        if (eol != std::string_view::npos) {
            std::size_t next = eol;
            while (next < bytes.size() && (bytes[next] == '\r' || bytes[next] == '\n')) {
                ++next;
            }
            if (next < bytes.size() && bytes[next] == '%') {
                std::size_t end = bytes.find_first_of("\r\n", next);
                auto line = bytes.substr(next, end == std::string_view::npos ? std::string_view::npos : end - next);
                if (std::any_of(line.begin(), line.end(), [](char c) { return static_cast<unsigned char>(c) >= 0x80; })) {
                    marker = next;
                }
            }
        }
    }

    std::size_t pos = 0;
    const std::size_t n = bytes.size();
    while (pos < n) {
        while (next_span < spans.size() && spans[next_span].second <= pos) {
            ++next_span;
        }
        if (next_span < spans.size() && spans[next_span].first <= pos) {
            pos = spans[next_span].second;
            continue;
        }
        char c = bytes[pos];
        if (c == '(') {
            int depth = 0;
            while (pos < n) {
                char d = bytes[pos++];
                if (d == '\\') {
                    ++pos;
                } else if (d == '(') {
                    ++depth;
                } else if (d == ')' && --depth == 0) {
                    break;
                }
            }
        } else if (c == '<' && pos + 1 < n && bytes[pos + 1] != '<') {
            std::size_t q = pos + 1;
            while (q < n && (std::isxdigit(static_cast<unsigned char>(bytes[q])) || is_pdf_whitespace(bytes[q]))) {
                ++q;
            }
            pos = (q < n && bytes[q] == '>') ? q + 1 : pos + 1;
        } else if (c == '%') {
            std::size_t end = bytes.find_first_of("\r\n", pos);
            if (end == std::string_view::npos) {
                end = n;
            }
            std::string_view line = bytes.substr(pos, end - pos);
            bool structural = pos == marker || (pos == header && line.substr(0, 5) == "%PDF-") ||
                              trim(line) == "%%EOF";
            if (!structural) {
                out.push_back(make_finding(FindingCategory::Comment, std::string(line), "", Confidence::Exact,
                                           Origin::Bytes, evidence_at(doc, std::nullopt, pos)));
            }
            pos = end;
        } else {
            ++pos;
        }
    }
    return out;
}

std::vector<Finding> extract_paths(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                   const RuleSet& rules)
{
    std::vector<Finding> out;
    auto emit = [&](const std::string& text, Origin origin, Evidence ev, bool from_metadata) {
        for (const auto& path : find_paths(text)) {
            auto f = make_finding(FindingCategory::Path, path, "", Confidence::Exact, origin, ev);
            f.from_metadata = from_metadata;
            out.push_back(f);
            bool matched = false;
            for (const auto* set : {&rules.user_path_exact, &rules.user_path_heuristic}) {
                for (const auto& p : *set) {
                    std::smatch m;
                    if (std::regex_search(path, m, p.re) && m.size() > 1 && m[1].length() > 0) {
                        auto u = make_finding(FindingCategory::Username, m[1].str(), "",
                                              set == &rules.user_path_exact ? Confidence::Exact : Confidence::Heuristic,
                                              origin, ev);
                        u.from_metadata = from_metadata;
                        out.push_back(u);
                        matched = true;
                        break;
                    }
                }
                if (matched) {
                    break;
                }
            }
        }
    };

    auto info_ids = trailer_info_ids(doc);
    for (const auto& s : all_sites(doc)) {
        bool meta = is_metadata_site(s, info_ids, rules);
        walk_strings(s.rec->object, [&](const String& str) {
            auto text = decode_string(str.bytes).text;
            if (might_hold_path(text)) {
                emit(text, s.origin, evidence_at(doc, s.id, string_offset(str, s)), meta);
            }
        });
    }
    for (const auto& r : records) {
        if (r.source != MetadataSource::XmpStream && r.source != MetadataSource::OrphanXmpStream) {
            continue;
        }
        for (const auto& f : r.fields) {
            emit(f.value.text, record_origin(r), evidence_at(doc, r.object, r.offset), true);
        }
    }
    return out;
}

std::vector<Finding> extract_paths(const PdfDocument& doc)
{
    const auto& rules = *RuleSet::defaults();
    return extract_paths(doc, extract_metadata(doc, rules), rules);
}

std::vector<Finding> extract_emails(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                    const RuleSet& rules)
{
    std::vector<Finding> out;
    std::unordered_map<std::string, std::size_t> seen;
    auto scan = [&](const std::string& text, Confidence conf, Origin origin, const Evidence& ev, bool from_metadata,
                    const std::string& key) {
        if (text.find('@') == std::string::npos) {
            return;
        }
        for (std::sregex_iterator it(text.begin(), text.end(), email_regex()), end; it != end; ++it) {
            auto addr = ascii_lower(it->str());
            auto found = seen.find(addr);
            if (found != seen.end()) {
                auto& prev = out[found->second];
                if (prev.confidence == Confidence::Heuristic && conf == Confidence::Exact) {
                    prev.confidence = conf;
                    prev.key = key;
                    prev.origin = origin;
                    prev.evidence = ev;
                    prev.from_metadata = from_metadata;
                }
                continue;
            }
            seen.emplace(addr, out.size());
            auto f = make_finding(FindingCategory::Email, addr, key, conf, origin, ev);
            f.from_metadata = from_metadata;
            out.push_back(std::move(f));
        }
    };

    for (const auto& r : records) {
        for (const auto& f : r.fields) {
            scan(f.value.text, rules.is_email_key(f.key) ? Confidence::Exact : Confidence::Heuristic, record_origin(r),
                 evidence_at(doc, r.object, r.offset), true, f.key);
        }
    }
    auto info_ids = trailer_info_ids(doc);
    for (const auto& s : all_sites(doc)) {
        bool meta = is_metadata_site(s, info_ids, rules);
        walk_strings(s.rec->object, [&](const String& str) {
            if (str.bytes.find('@') == std::string::npos && str.bytes.find('\0') == std::string::npos) {
                return;
            }
            scan(decode_string(str.bytes).text, Confidence::Heuristic, s.origin,
                 evidence_at(doc, s.id, string_offset(str, s)), meta, "");
        });
    }
    return out;
}

std::vector<Finding> extract_emails(const PdfDocument& doc)
{
    const auto& rules = *RuleSet::defaults();
    return extract_emails(doc, extract_metadata(doc, rules), rules);
}

std::vector<Finding> detect_hardware_brands(const std::vector<MetadataRecord>& records, const RuleSet& rules)
{
    std::vector<Finding> out;
    auto is_brand_field = [&](const MetadataField& f) {
        auto local = f.xmp_name.substr(f.xmp_name.find(':') == std::string::npos ? 0 : f.xmp_name.find(':') + 1);
        return std::find(rules.brand_fields.begin(), rules.brand_fields.end(), f.key) != rules.brand_fields.end() ||
               (!local.empty() &&
                std::find(rules.brand_fields.begin(), rules.brand_fields.end(), local) != rules.brand_fields.end());
    };
    for (const auto& r : records) {
        for (const auto& f : r.fields) {
            if (!is_brand_field(f)) {
                continue;
            }
            std::string_view text = f.value.text;
            std::size_t pos = 0;
            while (pos < text.size()) {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
                    ++pos;
                }
                std::size_t end = pos;
                while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
                    ++end;
                }
                auto token = ascii_lower(text.substr(pos, end - pos));
                pos = end;
                if (token.empty()) {
                    continue;
                }
                for (const auto& brand : rules.brands) {
                    auto b = ascii_lower(brand);
                    std::optional<Confidence> conf;
                    if (token == b) {
                        conf = Confidence::Exact;
                    } else if (token.size() > b.size() && token.compare(0, b.size(), b) == 0 &&
                               !std::isalpha(static_cast<unsigned char>(token[b.size()]))) {
                        conf = Confidence::Heuristic;
                    }
                    if (!conf) {
                        continue;
                    }
                    auto it = std::find_if(out.begin(), out.end(), [&](const Finding& x) { return x.value == brand; });
                    if (it != out.end()) {
                        if (*conf == Confidence::Exact) {
                            it->confidence = Confidence::Exact;
                        }
                        continue;
                    }
                    Finding fnd = make_finding(FindingCategory::HardwareBrand, brand, f.key, *conf, record_origin(r),
                                               Evidence{r.object, r.offset, {}});
                    fnd.from_metadata = true;
                    out.push_back(std::move(fnd));
                }
            }
        }
    }
    return out;
}

std::vector<Finding> detect_hardware_brands(const std::vector<MetadataRecord>& records)
{
    return detect_hardware_brands(records, *RuleSet::defaults());
}

std::vector<Finding> extract_platform_and_tool_objects(const PdfDocument& doc, const RuleSet& rules)
{
    std::vector<Finding> out;
    auto info_ids = trailer_info_ids(doc);
    for (const auto& s : all_sites(doc)) {
        if (is_metadata_site(s, info_ids, rules)) {
            continue;
        }
        walk_dicts(s.rec->object, [&](const Dictionary& d, const PdfObject&) {
            for (const auto& [k, v] : d) {
                if (!rules.is_platform_key(k)) {
                    continue;
                }
                auto text = text_value(doc, &v);
                if (text && !trim(text->text).empty()) {
                    out.push_back(make_finding(FindingCategory::PlatformKey, text->text, k, Confidence::Exact, s.origin,
                                               evidence_at(doc, s.id, value_offset(&v, s))));
                }
            }
            auto font = [&](const char* key) {
                const auto* v = d.find(key);
                auto text = text_value(doc, v);
                if (text && !trim(text->text).empty()) {
                    auto f = make_finding(FindingCategory::PlatformKey, text->text, key, Confidence::Heuristic, s.origin,
                                          evidence_at(doc, s.id, value_offset(v, s)));
                    f.identifying = false;
                    out.push_back(std::move(f));
                }
            };
            if (d.contains("Registry") && d.contains("Ordering")) {
                font("Registry");
                font("Ordering");
            }
            if (d.contains("CIDSystemInfo")) {
                font("BaseFont");
            }
        });
    }
    return out;
}

std::vector<Finding> extract_platform_and_tool_objects(const PdfDocument& doc)
{
    return extract_platform_and_tool_objects(doc, *RuleSet::defaults());
}

std::vector<Finding> list_active_content(const PdfDocument& doc)
{
    std::vector<Finding> out;
    for (const auto& s : all_sites(doc)) {
        walk_dicts(s.rec->object, [&](const Dictionary& d, const PdfObject&) {
            auto type = d.name("S");
            if (type == "JavaScript") {
                const auto* js = d.find("JS");
                const auto* target = js ? doc.resolve(*js) : nullptr;
                std::string script;
                if (target && target->is_string()) {
                    script = decode_string(target->as_string().bytes).text;
                } else if (target && target->is_stream()) {
                    try {
                        script = decode_stream(target->as_stream());
                    } catch (const Error&) {
                        script = target->as_stream().data;
                    }
                }
                if (script.size() > 256) {
                    script.resize(256);
                }
                out.push_back(make_finding(FindingCategory::Script, script, "JS", Confidence::Exact, s.origin,
                                           evidence_at(doc, s.id, value_offset(js, s))));
            } else if (type == "Launch") {
                std::string target;
                const PdfObject* f = d.find("F");
                if (!f) {
                    if (const auto* win = d.find("Win"); win && doc.resolve(*win) && doc.resolve(*win)->is_dict()) {
                        f = doc.resolve(*win)->as_dict().find("F");
                    }
                }
                const auto* rf = f ? doc.resolve(*f) : nullptr;
                if (rf && rf->is_string()) {
                    target = decode_string(rf->as_string().bytes).text;
                } else if (rf && rf->is_dict()) {
                    if (auto t = text_value(doc, rf->as_dict().find("UF"))) {
                        target = t->text;
                    } else if (auto t2 = text_value(doc, rf->as_dict().find("F"))) {
                        target = t2->text;
                    }
                }
                out.push_back(make_finding(FindingCategory::Script, target.empty() ? "Launch" : target, "Launch",
                                           Confidence::Exact, s.origin, evidence_at(doc, s.id, s.rec->offset)));
            }
            if (d.name("Type") == "Filespec" || d.contains("EF")) {
                const char* key = "UF";
                auto name = text_value(doc, d.find("UF"));
                if (!name || name->text.empty()) {
                    key = "F";
                    name = text_value(doc, d.find("F"));
                }
                if (name && !name->text.empty()) {
                    out.push_back(make_finding(FindingCategory::EmbeddedFile, name->text, key, Confidence::Exact,
                                               s.origin, evidence_at(doc, s.id, value_offset(d.find(key), s))));
                }
            }
        });
    }
    return out;
}

std::vector<Finding> extract_hidden_objects(const PdfDocument& doc)
{
    std::vector<Finding> out;
    for (const auto& s : all_sites(doc)) {
        if (s.origin == Origin::Reachable) {
            continue;
        }
        bool text = is_metadata_stream(s.rec->object);
        if (!text) {
            walk_strings(s.rec->object, [&](const String& str) {
                if (!str.bytes.empty()) {
                    text = true;
                }
            });
        }
        if (!text) {
            continue;
        }
        auto cat = s.origin == Origin::Orphan ? FindingCategory::OrphanObject : FindingCategory::ShadowObject;
        out.push_back(make_finding(cat, s.id.str(), "", Confidence::Exact, s.origin,
                                   evidence_at(doc, s.id, s.rec->offset)));
    }
    return out;
}

std::vector<std::string> content_strings(std::string_view content)
{
    std::vector<std::string> out;
    Parser parser(content, false);
    std::size_t pos = 0;
    while (pos < content.size()) {
        char c = content[pos];
        if (c == '%') {
            while (pos < content.size() && content[pos] != '\n' && content[pos] != '\r') {
                ++pos;
            }
        } else if (c == '(' || (c == '<' && pos + 1 < content.size() && content[pos + 1] != '<')) {
            std::size_t p = pos;
            try {
                auto obj = parser.parse_object(p);
                if (obj.is_string()) {
                    out.push_back(decode_string(obj.as_string().bytes).text);
                }
                pos = p > pos ? p : pos + 1;
            } catch (const Error&) {
                ++pos;
            }
        } else {
            ++pos;
        }
    }
    return out;
}

std::vector<Finding> extract_author_names(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                                          const RuleSet& rules)
{
    std::vector<Finding> out;
    auto known = [&](const std::string& v) {
        return std::any_of(out.begin(), out.end(), [&](const Finding& f) { return f.value == v; });
    };
    for (const auto& r : records) {
        for (const auto& key : rules.author_keys) {
            const auto* f = r.field(key);
            if (!f) {
                continue;
            }
            std::string v(trim(f->value.text));
            if (v.empty() || known(v)) {
                continue;
            }
            auto fnd = make_finding(FindingCategory::AuthorName, v, key, Confidence::Exact, record_origin(r),
                                    evidence_at(doc, r.object, r.offset));
            fnd.from_metadata = true;
            out.push_back(std::move(fnd));
        }
    }

    // Bylines in page text. Visible content is not hidden data, so these never
    // count against Level-3.
    static const std::regex byline(
        R"(\b(?:Author|Authors|Prepared by|Written by|Created by|Drafted by)\s*:?\s+([A-Z][A-Za-z'.-]+(?:[ \t]+[A-Z][A-Za-z'.-]+){1,3}))");
    for (const auto& content : page_contents(doc)) {
        std::string text;
        for (const auto& s : content_strings(content)) {
            text += s;
            text += ' ';
        }
        for (std::sregex_iterator it(text.begin(), text.end(), byline), end; it != end; ++it) {
            std::string v = (*it)[1];
            if (known(v)) {
                continue;
            }
            auto fnd = make_finding(FindingCategory::AuthorName, v, "content", Confidence::Heuristic, Origin::Reachable,
                                    Evidence{});
            fnd.identifying = false;
            out.push_back(std::move(fnd));
        }
    }
    return out;
}

std::vector<std::string> detect_search_index(const PdfDocument& doc)
{
    static const std::set<std::string, std::less<>> standard_trees = {
        "Dests", "AP", "JavaScript", "Pages", "Templates", "IDS", "URLS", "EmbeddedFiles", "AlternatePresentations",
        "Renditions"};
    std::vector<std::string> out;
    const auto* trailer = doc.current_trailer();
    const auto* root = trailer && trailer->find("Root") ? doc.resolve(*trailer->find("Root")) : nullptr;
    if (root && root->is_dict()) {
        const auto& catalog = root->as_dict();
        if (catalog.contains("Search")) {
            out.push_back("possible embedded search index: catalog /Search");
        }
        const auto* names = catalog.find("Names") ? doc.resolve(*catalog.find("Names")) : nullptr;
        if (names && names->is_dict()) {
            for (const auto& [k, v] : names->as_dict()) {
                auto lower = ascii_lower(k);
                if (!standard_trees.count(k) &&
                    (lower.find("index") != std::string::npos || lower.find("search") != std::string::npos)) {
                    out.push_back("possible embedded search index: name tree /" + k);
                }
            }
        }
    }
    for (const auto& [id, rec] : doc.objects) {
        if (!doc.reachable.count(id)) {
            continue;
        }
        walk_dicts(rec.object, [&](const Dictionary& d, const PdfObject&) {
            if (d.name("Type") != "Filespec" && !d.contains("EF")) {
                return;
            }
            for (const char* key : {"UF", "F"}) {
                auto name = text_value(doc, d.find(key));
                if (!name) {
                    continue;
                }
                auto lower = ascii_lower(name->text);
                if (lower.size() > 4 && lower.compare(lower.size() - 4, 4, ".pdx") == 0) {
                    out.push_back("possible embedded search index: file " + name->text + " in " + id.str());
                    return;
                }
            }
        });
    }
    return out;
}

Extraction run_extractors(const PdfDocument& doc, const RuleSet& rules)
{
    Extraction ex;
    if (doc.encrypted) {
        ex.warnings.push_back("document is encrypted; extraction skipped");
        return ex;
    }
    ex.records = extract_metadata(doc, rules, &ex.warnings);
    std::vector<std::vector<Finding>> batches;
    batches.push_back(extract_author_names(doc, ex.records, rules));
    batches.push_back(extract_emails(doc, ex.records, rules));
    batches.push_back(extract_paths(doc, ex.records, rules));
    batches.push_back(detect_hardware_brands(ex.records, rules));
    batches.push_back(extract_annotations(doc));
    batches.push_back(extract_comments(doc.bytes(), doc));
    batches.push_back(extract_platform_and_tool_objects(doc, rules));
    batches.push_back(list_active_content(doc));
    batches.push_back(extract_hidden_objects(doc));
    for (auto& w : detect_search_index(doc)) {
        ex.warnings.push_back(std::move(w));
    }

    std::set<std::pair<FindingCategory, std::string>> seen;
    for (auto& batch : batches) {
        for (auto& f : batch) {
            if (seen.emplace(f.category, f.value).second) {
                ex.findings.push_back(std::move(f));
            }
        }
    }
    return ex;
}

} // namespace pdffoot
