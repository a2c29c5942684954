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

#include "pdffoot/sanitize.hpp"

#include "pdffoot/document.hpp"
#include "pdffoot/errors.hpp"
#include "pdffoot/extract.hpp"
#include "pdffoot/text.hpp"
#include "pdffoot/writer.hpp"

#include "json.hpp"

#include <algorithm>
#include <regex>

namespace pdffoot {

std::string SanitizationLog::to_json() const
{
    nlohmann::ordered_json j;
    j["requested_level"] = requested_level;
    j["removed"] = nlohmann::ordered_json::array();
    for (const auto& r : removed) {
        nlohmann::ordered_json e;
        e["category"] = r.category;
        e["object"] = r.object ? nlohmann::ordered_json(r.object->str()) : nlohmann::ordered_json(nullptr);
        e["description"] = r.description;
        j["removed"].push_back(std::move(e));
    }
    j["bytes_before"] = bytes_before;
    j["bytes_after"] = bytes_after;
    j["verified_level"] = verified_level ? nlohmann::ordered_json(*verified_level) : nlohmann::ordered_json(nullptr);
    return j.dump(2);
}

namespace {

const PdfObject* resolve(const WriteGraph& g, const PdfObject& obj)
{
    const PdfObject* cur = &obj;
    for (int depth = 0; depth < 32 && cur->is_ref(); ++depth) {
        auto it = g.objects.find(cur->as_ref());
        if (it == g.objects.end()) {
            return nullptr;
        }
        cur = &it->second;
    }
    return cur->is_ref() ? nullptr : cur;
}

const Dictionary* resolve_dict(const WriteGraph& g, const PdfObject& obj)
{
    const auto* r = resolve(g, obj);
    return r ? r->dict() : nullptr;
}

bool is_metadata_stream(const PdfObject* obj)
{
    return obj && obj->is_stream() &&
           (obj->as_stream().dict.name("Type") == "Metadata" || obj->as_stream().dict.name("Subtype") == "XML");
}

bool is_annotation(const Dictionary& d)
{
    return d.name("Type") == "Annot" || (d.name("Subtype") && d.contains("Rect") && !d.contains("Type"));
}

bool is_font_dict(const Dictionary& d)
{
    auto type = d.name("Type");
    return type == "Font" || type == "FontDescriptor" || d.contains("CIDSystemInfo") ||
           (d.contains("Registry") && d.contains("Ordering"));
}

bool is_script_action(const Dictionary* d)
{
    if (!d) {
        return false;
    }
    auto s = d->name("S");
    return s == "JavaScript" || s == "Launch";
}

bool is_filespec(const Dictionary* d) { return d && (d->name("Type") == "Filespec" || d->contains("EF")); }

const std::regex& email_regex()
{
    static const std::regex re(R"([A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,})");
    return re;
}

std::string basename_of(const std::string& path)
{
    auto slash = path.find_last_of("\\/");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

class Cleaner {
public:
    Cleaner(WriteGraph& graph, const SanitizeOptions& options, const RuleSet& rules, SanitizationLog& log)
        : g_(graph), opt_(options), rules_(rules), log_(log)
    {
    }

    void level2()
    {
        if (g_.trailer.contains("Info")) {
            const auto* info = g_.trailer.find("Info");
            std::optional<ObjectId> id;
            if (info->is_ref()) {
                id = info->as_ref();
            }
            g_.trailer.erase("Info");
            note("Metadata", id, "Info dictionary");
        }
        for (auto it = g_.objects.begin(); it != g_.objects.end();) {
            if (is_metadata_stream(&it->second)) {
                note("Metadata", it->first, "XMP metadata stream");
                it = g_.objects.erase(it);
            } else {
                ++it;
            }
        }
        for (auto& [id, obj] : g_.objects) {
            owner_ = id;
            strip_metadata(obj);
        }
    }

    void level3()
    {
        if (!opt_.blank_annotations) {
            for (auto& [id, obj] : g_.objects) {
                owner_ = id;
                if (auto* d = obj.dict(); d && d->contains("Annots")) {
                    prune_annots(*d);
                }
            }
            // Removed annotations and their popups are no longer written.
            const auto keep = reachable_objects(g_);
            for (auto it = g_.objects.begin(); it != g_.objects.end();) {
                it = keep.count(it->first) ? std::next(it) : g_.objects.erase(it);
            }
        }
        for (auto& [id, obj] : g_.objects) {
            owner_ = id;
            clean(obj);
        }
    }

private:
    void note(std::string category, std::optional<ObjectId> id, std::string description)
    {
        log_.removed.push_back({std::move(category), id, std::move(description)});
    }

    void strip_metadata(PdfObject& obj)
    {
        switch (obj.kind()) {
        case ObjectKind::Array:
            for (auto& v : obj.as_array()) {
                strip_metadata(v);
            }
            break;
        case ObjectKind::Dictionary:
        case ObjectKind::Stream: {
            auto& d = *obj.dict();
            if (const auto* m = d.find("Metadata"); m && (m->is_ref() || is_metadata_stream(m))) {
                if (!m->is_ref() || !resolve(g_, *m) || is_metadata_stream(resolve(g_, *m))) {
                    d.erase("Metadata");
                    note("Metadata", owner_, "Metadata entry");
                }
            }
            std::size_t canonical = 0;
            for (const auto& [k, v] : d) {
                canonical += rules_.is_canonical(k);
            }
            if (canonical >= 2) {
                std::vector<std::string> keys;
                for (const auto& [k, v] : d) {
                    if (rules_.is_canonical(k)) {
                        keys.push_back(k);
                    }
                }
                for (const auto& k : keys) {
                    d.erase(k);
                    note("Metadata", owner_, "metadata key " + k);
                }
            }
            for (auto& [k, v] : d) {
                strip_metadata(v);
            }
            break;
        }
        default: break;
        }
    }

    bool annotation_leaks(const Dictionary& a) const
    {
        auto subtype = a.name("Subtype");
        if (subtype == "Popup" || subtype == "FileAttachment") {
            return true;
        }
        for (const char* key : {"T", "Contents", "M", "RC"}) {
            if (a.contains(key)) {
                return true;
            }
        }
        return false;
    }

    void prune_annots(Dictionary& page)
    {
        PdfObject* annots = page.find("Annots");
        Array* arr = nullptr;
        std::optional<ObjectId> arr_id;
        if (annots->is_array()) {
            arr = &annots->as_array();
        } else if (annots->is_ref()) {
            auto it = g_.objects.find(annots->as_ref());
            if (it != g_.objects.end() && it->second.is_array()) {
                arr = &it->second.as_array();
                arr_id = it->first;
            }
        }
        if (!arr) {
            return;
        }
        auto end = std::remove_if(arr->begin(), arr->end(), [&](const PdfObject& v) {
            const auto* a = resolve_dict(g_, v);
            if (!a || !annotation_leaks(*a)) {
                return false;
            }
            note("Annotation", v.is_ref() ? std::optional<ObjectId>(v.as_ref()) : owner_,
                 "annotation " + a->name("Subtype").value_or("?"));
            return true;
        });
        arr->erase(end, arr->end());
        if (arr->empty()) {
            page.erase("Annots");
            if (arr_id) {
                g_.objects.erase(*arr_id);
            }
        }
    }

    bool drop_value(const PdfObject& v) const
    {
        const auto* d = resolve_dict(g_, v);
        return (!opt_.keep_scripts && is_script_action(d)) || is_filespec(d);
    }

    void note_drop(const PdfObject& v, const std::string& where)
    {
        const auto* d = resolve_dict(g_, v);
        auto id = v.is_ref() ? std::optional<ObjectId>(v.as_ref()) : owner_;
        if (is_filespec(d)) {
            note("EmbeddedFile", id, "file specification in " + where);
        } else {
            note("Script", id, d->name("S").value_or("?") + " action in " + where);
        }
    }

    void clean(PdfObject& obj)
    {
        switch (obj.kind()) {
        case ObjectKind::String: clean_string(obj.as_string()); break;
        case ObjectKind::Array: {
            auto& arr = obj.as_array();
            auto end = std::remove_if(arr.begin(), arr.end(), [&](const PdfObject& v) {
                if (drop_value(v)) {
                    note_drop(v, "array");
                    return true;
                }
                return false;
            });
            arr.erase(end, arr.end());
            for (auto& v : arr) {
                clean(v);
            }
            break;
        }
        case ObjectKind::Dictionary:
        case ObjectKind::Stream: clean_dict(*obj.dict()); break;
        default: break;
        }
    }

    void clean_dict(Dictionary& d)
    {
        std::vector<std::pair<std::string, std::string>> erase; // key, category
        const bool font = is_font_dict(d);
        for (const auto& [k, v] : d) {
            if (k == "PieceInfo") {
                erase.emplace_back(k, "PieceInfo");
            } else if (k == "AF") {
                erase.emplace_back(k, "EmbeddedFile");
            } else if (k == "EmbeddedFiles" && resolve_dict(g_, v)) {
                erase.emplace_back(k, "EmbeddedFile");
            } else if (!opt_.keep_scripts && k == "AA") {
                erase.emplace_back(k, "Script");
            } else if (!opt_.keep_scripts && k == "JavaScript" && resolve_dict(g_, v) &&
                       !is_script_action(resolve_dict(g_, v))) {
                erase.emplace_back(k, "Script");
            } else if (!font && rules_.is_platform_key(k) && !v.is_dict() && !v.is_array()) {
                erase.emplace_back(k, "PlatformKey");
            } else if (drop_value(v)) {
                note_drop(v, "/" + k);
                erase.emplace_back(k, "");
            }
        }
        if (is_annotation(d)) {
            for (const char* key : {"T", "Contents", "M", "RC"}) {
                if (d.contains(key)) {
                    erase.emplace_back(key, "Annotation");
                }
            }
        }
        for (const auto& [k, category] : erase) {
            if (d.erase(k) && !category.empty()) {
                note(category, owner_, "/" + k);
            }
        }
        for (auto& [k, v] : d) {
            clean(v);
        }
    }

    void clean_string(String& s)
    {
        auto decoded = decode_string(s.bytes);
        std::string text = decoded.text;
        bool changed = false;
        for (const auto& path : find_paths(text)) {
            auto base = basename_of(path);
            for (auto pos = text.find(path); pos != std::string::npos; pos = text.find(path, pos + base.size())) {
                text.replace(pos, path.size(), base);
            }
            note("Path", owner_, "path reduced to basename");
            changed = true;
        }
        if (text.find('@') != std::string::npos) {
            auto stripped = std::regex_replace(text, email_regex(), "");
            if (stripped != text) {
                text = std::move(stripped);
                note("Email", owner_, "e-mail address removed from string");
                changed = true;
            }
        }
        if (changed) {
            s.bytes = encode_string(text, decoded.encoding);
            s.offset = std::string::npos;
        }
    }

    WriteGraph& g_;
    const SanitizeOptions& opt_;
    const RuleSet& rules_;
    SanitizationLog& log_;
    std::optional<ObjectId> owner_;
};

} // namespace

Assessment verify(std::string_view bytes, const RuleSet& rules, bool keep_scripts)
{
    auto doc = parse_document(std::string(bytes));
    if (!keep_scripts) {
        auto ex = run_extractors(doc, rules);
        return assess_level(doc, ex.records, ex.findings, rules);
    }
    RuleSet relaxed = rules;
    relaxed.demote.erase(FindingCategory::Script);
    auto ex = run_extractors(doc, relaxed);
    return assess_level(doc, ex.records, ex.findings, relaxed);
}

SanitizeResult sanitize(std::string_view bytes, const SanitizeOptions& options, const RuleSet& rules)
{
    if (options.level != 2 && options.level != 3) {
        throw Error(ErrorCode::VerificationFailed, "unsupported level " + std::to_string(options.level));
    }
    auto doc = parse_document(std::string(bytes));
    if (doc.encrypted) {
        throw Error(ErrorCode::EncryptedInput, "encrypted files are not sanitized");
    }

    SanitizeResult result;
    auto& log = result.log;
    log.requested_level = options.level;
    log.bytes_before = bytes.size();

    for (const auto& id : doc.orphans) {
        log.removed.push_back({"OrphanObject", id, "unreachable object"});
    }
    for (const auto& s : doc.shadows) {
        log.removed.push_back({"ShadowObject", s.id, "superseded object version"});
    }

    auto graph = graph_of(doc);
    Cleaner cleaner(graph, options, rules, log);
    cleaner.level2();
    if (options.level == 3) {
        cleaner.level3();
    }
    result.bytes = write_pdf(graph);
    log.bytes_after = result.bytes.size();

    result.assessment = verify(result.bytes, rules, options.keep_scripts);
    log.verified_level = result.assessment.level;
    if (!result.assessment.level || *result.assessment.level < options.level) {
        std::string why = "output assessed at level " +
                          (result.assessment.level ? std::to_string(*result.assessment.level) : std::string("none"));
        for (const auto& e : result.assessment.evidence) {
            why += "; " + e;
        }
        throw Error(ErrorCode::VerificationFailed, why);
    }
    return result;
}

SanitizeResult sanitize(std::string_view bytes, const SanitizeOptions& options)
{
    return sanitize(bytes, options, *RuleSet::defaults());
}

} // namespace pdffoot
