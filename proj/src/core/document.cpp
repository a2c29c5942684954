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

#include "pdffoot/document.hpp"

#include "pdffoot/errors.hpp"
#include "pdffoot/filters.hpp"
#include "pdffoot/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <limits>
#include <unordered_map>

namespace pdffoot {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::XrefTable: return "XrefTable";
    case Provenance::XrefStream: return "XrefStream";
    case Provenance::ObjectStream: return "ObjectStream";
    case Provenance::RawScan: return "RawScan";
    }
    return "?";
}

const ObjectRecord* PdfDocument::record(ObjectId id) const
{
    auto it = objects.find(id);
    return it == objects.end() ? nullptr : &it->second;
}

const PdfObject* PdfDocument::get(ObjectId id) const
{
    const auto* r = record(id);
    return r ? &r->object : nullptr;
}

const PdfObject* PdfDocument::resolve(const PdfObject& obj) const
{
    const PdfObject* cur = &obj;
    for (int hops = 0; hops < 32 && cur && cur->is_ref(); ++hops) {
        cur = get(cur->as_ref());
    }
    if (cur && cur->is_ref()) {
        return nullptr;
    }
    return cur;
}

const Dictionary* PdfDocument::current_trailer() const
{
    for (const auto& t : trailers) {
        if (t.contains("Root")) {
            return &t;
        }
    }
    return nullptr;
}

std::string PdfDocument::excerpt(std::size_t offset, std::size_t max) const
{
    auto b = bytes();
    if (offset >= b.size()) {
        return {};
    }
    return std::string(b.substr(offset, max));
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t skip_literal(std::string_view d, std::size_t pos)
{
    int nesting = 0;
    while (pos < d.size()) {
        char c = d[pos++];
        if (c == '\\') {
            ++pos;
        } else if (c == '(') {
            ++nesting;
        } else if (c == ')') {
            if (--nesting == 0) {
                return pos;
            }
        }
    }
    return pos;
}

bool has_type(const PdfObject& obj, std::string_view type)
{
    const auto* d = obj.dict();
    return d && d->name("Type") == type;
}

} // namespace

std::vector<ScannedObject> raw_scan(std::string_view bytes)
{
    std::vector<ScannedObject> out;
    Parser parser(bytes);
    std::size_t pos = 0;
    const std::size_t n = bytes.size();
    while (pos < n) {
        char c = bytes[pos];
        if (c == '%') {
            while (pos < n && bytes[pos] != '\n' && bytes[pos] != '\r') {
                ++pos;
            }
        } else if (c == '(') {
            pos = skip_literal(bytes, pos);
        } else if (c == '<' && pos + 1 < n && bytes[pos + 1] != '<') {
            std::size_t q = pos + 1;
            while (q < n && (std::isxdigit(static_cast<unsigned char>(bytes[q])) || is_pdf_whitespace(bytes[q]))) {
                ++q;
            }
            pos = (q < n && bytes[q] == '>') ? q + 1 : pos + 1;
        } else if (is_digit(c) && (pos == 0 || !is_regular(bytes[pos - 1]))) {
            if (auto header = parser.read_object_header(pos)) {
                try {
                    auto ind = parser.parse_indirect(pos);
                    out.push_back(ScannedObject{ind.id, ind.offset, ind.end, std::move(ind.object)});
                    pos = ind.end;
                } catch (const ParseError&) {
                    pos = header->second;
                }
                continue;
            }
            while (pos < n && is_regular(bytes[pos])) {
                ++pos;
            }
        } else if (c == 's' && parser.keyword_at(pos, "stream") && (pos == 0 || !is_regular(bytes[pos - 1]))) {
            // A stream whose object failed to parse: do not look inside it.
            auto e = bytes.find("endstream", pos + 6);
            pos = e == std::string_view::npos ? n : e + 9;
        } else {
            ++pos;
        }
    }
    return out;
}

std::vector<ObjStmMember> parse_object_stream(const Stream& objstm, std::vector<std::string>* warnings)
{
    if (objstm.dict.name("Type") != "ObjStm") {
        throw Error(ErrorCode::MalformedObjStm, "stream is not /Type /ObjStm");
    }
    auto count = objstm.dict.integer("N");
    auto first = objstm.dict.integer("First");
    if (!count || !first || *count < 0 || *first < 0) {
        throw Error(ErrorCode::MalformedObjStm, "missing or negative /N or /First");
    }
    std::string data;
    try {
        data = decode_stream(objstm);
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedObjStm, std::string("cannot decode: ") + e.what());
    }
    if (static_cast<std::size_t>(*first) > data.size()) {
        throw Error(ErrorCode::MalformedObjStm, "/First beyond stream length");
    }
    Parser parser(data, false);
    std::vector<std::pair<std::int64_t, std::int64_t>> index;
    std::size_t pos = 0;
    for (std::int64_t i = 0; i < *count; ++i) {
        PdfObject num;
        PdfObject off;
        try {
            num = parser.parse_object(pos);
            off = parser.parse_object(pos);
        } catch (const ParseError& e) {
            throw Error(ErrorCode::MalformedObjStm, std::string("bad header: ") + e.what());
        }
        if (!num.is_integer() || !off.is_integer() || num.as_integer() < 1 || off.as_integer() < 0) {
            throw Error(ErrorCode::MalformedObjStm, "bad header entry " + std::to_string(i));
        }
        if (pos > static_cast<std::size_t>(*first)) {
            throw Error(ErrorCode::MalformedObjStm, "header overlaps object data");
        }
        index.emplace_back(num.as_integer(), off.as_integer());
    }
    std::vector<ObjStmMember> members;
    for (const auto& [num, off] : index) {
        std::size_t p = static_cast<std::size_t>(*first) + static_cast<std::size_t>(off);
        if (p >= data.size()) {
            if (warnings) {
                warnings->push_back("object stream member " + std::to_string(num) + " offset out of range");
            }
            continue;
        }
        try {
            members.push_back(ObjStmMember{static_cast<std::uint32_t>(num), parser.parse_object(p)});
        } catch (const ParseError& e) {
            if (warnings) {
                warnings->push_back("object stream member " + std::to_string(num) + ": " + e.what());
            }
        }
    }
    return members;
}

namespace {

struct XrefEntry {
    enum class Type { Free, InUse, Compressed } type = Type::Free;
    std::uint64_t field2 = 0; // offset, or containing object-stream number
    std::uint32_t field3 = 0; // generation, or index within the object stream
};

struct Revision {
    Dictionary trailer;
    std::map<std::uint32_t, XrefEntry> entries;
    bool stream = false;
};

class DocumentBuilder {
public:
    DocumentBuilder(PdfDocument& doc, std::string_view bytes) : doc_(doc), bytes_(bytes), parser_(bytes) {}

    void run()
    {
        scanned_ = raw_scan(bytes_);
        for (std::size_t i = 0; i < scanned_.size(); ++i) {
            raw_index_[scanned_[i].id].push_back(i);
        }
        parser_.set_length_resolver([this](ObjectId id) -> std::optional<std::int64_t> {
            auto it = raw_index_.find(id);
            if (it == raw_index_.end()) {
                return std::nullopt;
            }
            const auto& obj = scanned_[it->second.back()].object;
            if (obj.is_integer()) {
                return obj.as_integer();
            }
            return std::nullopt;
        });

        follow_xref_chain();
        if (revisions_.empty()) {
            reconstruct_trailers();
        } else {
            for (const auto& r : revisions_) {
                doc_.trailers.push_back(r.trailer);
            }
        }
        load_from_xref();
        merge_scan();
        separate_structural();
        compute_reachability();
        collect_stream_spans();
        for (const auto& t : doc_.trailers) {
            if (t.contains("Encrypt")) {
                doc_.encrypted = true;
            }
        }
    }

private:
    void warn(std::string msg) { doc_.warnings.push_back(std::move(msg)); }

    std::optional<IndirectObject> parse_at(std::size_t offset, std::optional<std::uint32_t> expect)
    {
        for (std::size_t candidate : {offset, offset + doc_.header_offset}) {
            if (candidate >= bytes_.size()) {
                continue;
            }
            std::size_t p = parser_.skip_space(candidate);
            try {
                auto ind = parser_.parse_indirect(p);
                if (expect && ind.id.number != *expect) {
                    continue;
                }
                if (ind.missing_endobj) {
                    warn("object " + ind.id.str() + " missing endobj");
                }
                return ind;
            } catch (const ParseError&) {
            }
            if (doc_.header_offset == 0) {
                break;
            }
        }
        return std::nullopt;
    }

    std::optional<std::size_t> find_startxref()
    {
        auto p = bytes_.rfind("startxref");
        if (p == std::string_view::npos) {
            return std::nullopt;
        }
        std::size_t q = parser_.skip_space(p + 9);
        std::uint64_t v = 0;
        bool any = false;
        while (q < bytes_.size() && is_digit(bytes_[q])) {
            v = v * 10 + static_cast<std::uint64_t>(bytes_[q] - '0');
            any = true;
            ++q;
            if (v > bytes_.size() * 2 + 1024) {
                return std::nullopt;
            }
        }
        if (!any) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(v);
    }

    bool parse_classic_xref(std::size_t pos, Revision& rev)
    {
        pos = parser_.skip_space(pos);
        if (!parser_.keyword_at(pos, "xref")) {
            return false;
        }
        pos += 4;
        while (true) {
            pos = parser_.skip_space(pos);
            if (pos >= bytes_.size()) {
                throw ParseError(pos, "xref without trailer");
            }
            if (parser_.keyword_at(pos, "trailer")) {
                pos += 7;
                PdfObject t = parser_.parse_object(pos);
                if (!t.is_dict()) {
                    throw ParseError(pos, "trailer is not a dictionary");
                }
                rev.trailer = t.as_dict();
                return true;
            }
            PdfObject start = parser_.parse_object(pos);
            PdfObject count = parser_.parse_object(pos);
            if (!start.is_integer() || !count.is_integer() || start.as_integer() < 0 || count.as_integer() < 0 ||
                count.as_integer() > static_cast<std::int64_t>(bytes_.size())) {
                throw ParseError(pos, "bad xref subsection header");
            }
            for (std::int64_t i = 0; i < count.as_integer(); ++i) {
                pos = parser_.skip_space(pos);
                std::uint64_t f2 = 0;
                std::uint32_t f3 = 0;
                std::size_t q = pos;
                while (q < bytes_.size() && is_digit(bytes_[q])) {
                    f2 = f2 * 10 + static_cast<std::uint64_t>(bytes_[q++] - '0');
                }
                q = parser_.skip_space(q);
                while (q < bytes_.size() && is_digit(bytes_[q])) {
                    f3 = f3 * 10 + static_cast<std::uint32_t>(bytes_[q++] - '0');
                }
                q = parser_.skip_space(q);
                if (q >= bytes_.size() || (bytes_[q] != 'n' && bytes_[q] != 'f')) {
                    throw ParseError(q, "bad xref entry");
                }
                XrefEntry e;
                e.type = bytes_[q] == 'n' ? XrefEntry::Type::InUse : XrefEntry::Type::Free;
                e.field2 = f2;
                e.field3 = f3;
                auto num = static_cast<std::uint32_t>(start.as_integer() + i);
                rev.entries.emplace(num, e);
                pos = q + 1;
            }
        }
    }

    bool parse_xref_stream(std::size_t pos, Revision& rev)
    {
        auto ind = parse_at(pos, std::nullopt);
        if (!ind || !ind->object.is_stream()) {
            return false;
        }
        const auto& stream = ind->object.as_stream();
        if (stream.dict.name("Type") != "XRef") {
            return false;
        }
        std::string data = decode_stream(stream);
        const auto* w = stream.dict.find("W");
        if (!w || !w->is_array() || w->as_array().size() < 3) {
            throw Error(ErrorCode::MalformedPdf, "xref stream without /W");
        }
        std::array<std::size_t, 3> widths{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& v = w->as_array()[i];
            if (!v.is_integer() || v.as_integer() < 0 || v.as_integer() > 8) {
                throw Error(ErrorCode::MalformedPdf, "bad /W in xref stream");
            }
            widths[i] = static_cast<std::size_t>(v.as_integer());
        }
        std::size_t row = widths[0] + widths[1] + widths[2];
        if (row == 0) {
            throw Error(ErrorCode::MalformedPdf, "zero-width xref stream rows");
        }
        std::vector<std::pair<std::int64_t, std::int64_t>> sections;
        if (const auto* idx = stream.dict.find("Index"); idx && idx->is_array()) {
            const auto& a = idx->as_array();
            for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
                if (a[i].is_integer() && a[i + 1].is_integer()) {
                    sections.emplace_back(a[i].as_integer(), a[i + 1].as_integer());
                }
            }
        } else {
            sections.emplace_back(0, stream.dict.integer("Size").value_or(0));
        }
        std::size_t at = 0;
        auto field = [&](std::size_t width) {
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < width; ++k) {
                v = (v << 8) | static_cast<unsigned char>(data[at++]);
            }
            return v;
        };
        for (const auto& [start, count] : sections) {
            for (std::int64_t i = 0; i < count; ++i) {
                if (at + row > data.size()) {
                    warn("xref stream " + ind->id.str() + " shorter than its /Index");
                    break;
                }
                std::uint64_t type = widths[0] == 0 ? 1 : field(widths[0]);
                std::uint64_t f2 = field(widths[1]);
                std::uint64_t f3 = field(widths[2]);
                XrefEntry e;
                e.type = type == 0   ? XrefEntry::Type::Free
                         : type == 2 ? XrefEntry::Type::Compressed
                                     : XrefEntry::Type::InUse;
                if (type > 2) {
                    continue;
                }
                e.field2 = f2;
                e.field3 = static_cast<std::uint32_t>(f3);
                rev.entries.emplace(static_cast<std::uint32_t>(start + i), e);
            }
        }
        rev.trailer = stream.dict;
        rev.stream = true;
        ObjectRecord rec{ind->object, ind->offset, ind->end, Provenance::XrefStream, std::nullopt};
        doc_.structural.emplace(ind->id, std::move(rec));
        return true;
    }

    void follow_xref_chain()
    {
        auto start = find_startxref();
        if (!start) {
            warn("no startxref; relying on raw scan");
            return;
        }
        std::set<std::size_t> visited;
        std::deque<std::size_t> pending{*start};
        while (!pending.empty() && revisions_.size() < 4096) {
            std::size_t off = pending.front();
            pending.pop_front();
            if (!visited.insert(off).second) {
                warn("xref chain loop at offset " + std::to_string(off));
                continue;
            }
            Revision rev;
            bool ok = false;
            try {
                for (std::size_t candidate : {off, off + doc_.header_offset}) {
                    if (candidate < bytes_.size() &&
                        (parse_classic_xref(candidate, rev) || parse_xref_stream(candidate, rev))) {
                        ok = true;
                        break;
                    }
                    if (doc_.header_offset == 0) {
                        break;
                    }
                }
            } catch (const Error& e) {
                warn(std::string("xref section at ") + std::to_string(off) + ": " + e.what());
            }
            if (!ok) {
                warn("no usable xref section at offset " + std::to_string(off));
                continue;
            }
            // Hybrid files: /XRefStm supplements the classic table.
            if (auto xs = rev.trailer.integer("XRefStm"); xs && !rev.stream && *xs >= 0) {
                Revision extra;
                try {
                    if (parse_xref_stream(static_cast<std::size_t>(*xs), extra)) {
                        for (const auto& [num, e] : extra.entries) {
                            auto it = rev.entries.find(num);
                            if (it == rev.entries.end() || it->second.type == XrefEntry::Type::Free) {
                                rev.entries[num] = e;
                            }
                        }
                    }
                } catch (const Error& e) {
                    warn(std::string("XRefStm: ") + e.what());
                }
            }
            if (auto prev = rev.trailer.integer("Prev"); prev && *prev >= 0) {
                pending.push_back(static_cast<std::size_t>(*prev));
            }
            revisions_.push_back(std::move(rev));
        }
    }

    void reconstruct_trailers()
    {
        std::vector<Dictionary> found;
        std::size_t pos = 0;
        while ((pos = bytes_.find("trailer", pos)) != std::string_view::npos) {
            std::size_t p = pos + 7;
            try {
                PdfObject t = parser_.parse_object(p);
                if (t.is_dict()) {
                    found.push_back(t.as_dict());
                }
            } catch (const ParseError&) {
            }
            pos += 7;
        }
        for (const auto& s : scanned_) {
            if (s.object.is_stream() && s.object.as_stream().dict.name("Type") == "XRef") {
                found.push_back(s.object.as_stream().dict);
            }
        }
        std::reverse(found.begin(), found.end());
        bool has_root = std::any_of(found.begin(), found.end(), [](const auto& t) { return t.contains("Root"); });
        if (!has_root) {
            for (auto it = scanned_.rbegin(); it != scanned_.rend(); ++it) {
                if (has_type(it->object, "Catalog")) {
                    Dictionary t;
                    t.set("Root", Reference{it->id});
                    found.insert(found.begin(), std::move(t));
                    warn("trailer reconstructed from catalog " + it->id.str());
                    break;
                }
            }
        }
        if (!found.empty()) {
            warn("cross-reference data unusable; trailers recovered by scanning");
        }
        doc_.trailers = std::move(found);
    }

    const std::vector<ObjStmMember>* load_object_stream(std::uint32_t number)
    {
        if (auto it = objstm_cache_.find(number); it != objstm_cache_.end()) {
            return it->second ? &*it->second : nullptr;
        }
        objstm_cache_[number] = std::nullopt;
        std::optional<IndirectObject> container;
        for (const auto& rev : revisions_) {
            auto e = rev.entries.find(number);
            if (e != rev.entries.end() && e->second.type == XrefEntry::Type::InUse) {
                container = parse_at(static_cast<std::size_t>(e->second.field2), number);
                if (container) {
                    break;
                }
            }
        }
        if (!container) {
            for (const auto& [id, idxs] : raw_index_) {
                if (id.number == number) {
                    const auto& s = scanned_[idxs.back()];
                    container = IndirectObject{s.id, s.object, s.offset, s.end, false, std::nullopt};
                }
            }
        }
        if (!container || !container->object.is_stream()) {
            warn("object stream " + std::to_string(number) + " not found");
            return nullptr;
        }
        try {
            auto members = parse_object_stream(container->object.as_stream(), &doc_.warnings);
            doc_.structural.emplace(container->id, ObjectRecord{container->object, container->offset, container->end,
                                                                Provenance::RawScan, std::nullopt});
            objstm_ids_[number] = container->id;
            objstm_cache_[number] = std::move(members);
            return &*objstm_cache_[number];
        } catch (const Error& e) {
            warn(std::string("object stream ") + std::to_string(number) + ": " + e.what());
            return nullptr;
        }
    }

    void add_or_shadow(ObjectId id, ObjectRecord rec)
    {
        auto d = decided_.find(id.number);
        if (d == decided_.end()) {
            decided_[id.number] = id;
            doc_.objects.emplace(id, std::move(rec));
            return;
        }
        if (d->second) {
            const auto& current = doc_.objects.at(*d->second);
            if (current.offset == rec.offset && current.container == rec.container &&
                (current.container || current.object == rec.object)) {
                return;
            }
            if (current.object == rec.object && *d->second == id) {
                return;
            }
        }
        for (const auto& s : doc_.shadows) {
            if (s.id == id && s.record.offset == rec.offset && s.record.object == rec.object) {
                return;
            }
        }
        doc_.shadows.push_back(ShadowObject{id, std::move(rec)});
    }

    void load_from_xref()
    {
        for (std::size_t r = 0; r < revisions_.size(); ++r) {
            const auto& rev = revisions_[r];
            Provenance prov = rev.stream ? Provenance::XrefStream : Provenance::XrefTable;
            for (const auto& [num, e] : rev.entries) {
                if (num == 0) {
                    continue;
                }
                switch (e.type) {
                case XrefEntry::Type::Free:
                    if (!decided_.count(num)) {
                        decided_[num] = std::nullopt;
                    }
                    break;
                case XrefEntry::Type::InUse: {
                    auto ind = parse_at(static_cast<std::size_t>(e.field2), num);
                    if (!ind) {
                        warn("xref points object " + std::to_string(num) + " at offset " + std::to_string(e.field2) +
                             " but nothing parses there");
                        break;
                    }
                    add_or_shadow(ind->id, ObjectRecord{std::move(ind->object), ind->offset, ind->end, prov, std::nullopt});
                    break;
                }
                case XrefEntry::Type::Compressed: {
                    auto container = static_cast<std::uint32_t>(e.field2);
                    const auto* members = load_object_stream(container);
                    if (!members) {
                        break;
                    }
                    const ObjStmMember* found = nullptr;
                    if (e.field3 < members->size() && (*members)[e.field3].number == num) {
                        found = &(*members)[e.field3];
                    } else {
                        for (const auto& m : *members) {
                            if (m.number == num) {
                                found = &m;
                            }
                        }
                    }
                    if (!found) {
                        warn("object " + std::to_string(num) + " missing from object stream " + std::to_string(container));
                        break;
                    }
                    const auto& crec = doc_.structural.at(objstm_ids_.at(container));
                    add_or_shadow(ObjectId{num, 0}, ObjectRecord{found->object, crec.offset, crec.end,
                                                                Provenance::ObjectStream, objstm_ids_.at(container)});
                    break;
                }
                }
            }
        }
    }

    void merge_scan()
    {
        for (const auto& s : scanned_) {
            if (s.object.is_stream() && s.object.as_stream().dict.name("Type") == "XRef") {
                if (!doc_.structural.count(s.id)) {
                    doc_.structural.emplace(s.id, ObjectRecord{s.object, s.offset, s.end, Provenance::RawScan, std::nullopt});
                }
                continue;
            }
            if (s.object.is_stream() && s.object.as_stream().dict.name("Type") == "ObjStm") {
                merge_object_stream(s);
                continue;
            }
            auto d = decided_.find(s.id.number);
            if (d != decided_.end() && d->second) {
                auto& current = doc_.objects.at(*d->second);
                if (current.offset == s.offset) {
                    continue;
                }
                if (current.provenance == Provenance::RawScan && s.offset > current.offset) {
                    // Newer raw-scanned version of a raw-scanned object.
                    ObjectId old_id = *d->second;
                    ShadowObject old{old_id, std::move(current)};
                    doc_.objects.erase(old_id);
                    doc_.shadows.push_back(std::move(old));
                    decided_[s.id.number] = s.id;
                    doc_.objects.emplace(s.id, ObjectRecord{s.object, s.offset, s.end, Provenance::RawScan, std::nullopt});
                    continue;
                }
            }
            add_or_shadow(s.id, ObjectRecord{s.object, s.offset, s.end, Provenance::RawScan, std::nullopt});
        }
    }

    void merge_object_stream(const ScannedObject& s)
    {
        if (objstm_ids_.count(s.id.number) && objstm_ids_[s.id.number] == s.id &&
            doc_.structural.at(s.id).offset == s.offset) {
            return; // already expanded through the xref
        }
        std::vector<ObjStmMember> members;
        try {
            members = parse_object_stream(s.object.as_stream(), &doc_.warnings);
        } catch (const Error& e) {
            warn(std::string("object stream ") + s.id.str() + ": " + e.what());
            return;
        }
        if (!doc_.structural.count(s.id)) {
            doc_.structural.emplace(s.id, ObjectRecord{s.object, s.offset, s.end, Provenance::RawScan, std::nullopt});
        }
        for (auto& m : members) {
            ObjectId id{m.number, 0};
            auto d = decided_.find(m.number);
            if (d != decided_.end() && d->second && doc_.objects.at(*d->second).object == m.object) {
                continue;
            }
            add_or_shadow(id, ObjectRecord{std::move(m.object), s.offset, s.end, Provenance::ObjectStream, s.id});
        }
    }

    void separate_structural()
    {
        for (auto it = doc_.objects.begin(); it != doc_.objects.end();) {
            if (has_type(it->second.object, "XRef") || has_type(it->second.object, "ObjStm")) {
                if (it->second.object.is_stream()) {
                    doc_.structural.emplace(it->first, std::move(it->second));
                    it = doc_.objects.erase(it);
                    continue;
                }
            }
            ++it;
        }
    }

    void walk(const PdfObject& root, std::set<ObjectId>& seen)
    {
        std::vector<const PdfObject*> stack{&root};
        while (!stack.empty()) {
            const PdfObject* cur = stack.back();
            stack.pop_back();
            switch (cur->kind()) {
            case ObjectKind::Reference: {
                ObjectId id = cur->as_ref();
                if (seen.count(id)) {
                    break;
                }
                const auto* target = doc_.get(id);
                if (!target) {
                    if (!missing_.count(id)) {
                        missing_.insert(id);
                        warn("reference to missing object " + id.str());
                    }
                    break;
                }
                seen.insert(id);
                stack.push_back(target);
                break;
            }
            case ObjectKind::Array:
                for (const auto& v : cur->as_array()) {
                    stack.push_back(&v);
                }
                break;
            case ObjectKind::Dictionary:
            case ObjectKind::Stream:
                for (const auto& [k, v] : *cur->dict()) {
                    stack.push_back(&v);
                }
                break;
            default: break;
            }
        }
    }

    void compute_reachability()
    {
        for (const auto& t : doc_.trailers) {
            for (const char* key : {"Root", "Info"}) {
                if (const auto* v = t.find(key)) {
                    walk(*v, doc_.reachable);
                }
            }
        }
        if (const auto* t = doc_.trailers.empty() ? nullptr : &doc_.trailers.front()) {
            if (!t->contains("Root")) {
                t = doc_.current_trailer();
            }
            if (t) {
                for (const char* key : {"Root", "Info"}) {
                    if (const auto* v = t->find(key)) {
                        walk(*v, doc_.live);
                    }
                }
            }
        }
        for (const auto& [id, rec] : doc_.objects) {
            if (!doc_.reachable.count(id)) {
                doc_.orphans.insert(id);
            }
        }
    }

    void collect_stream_spans()
    {
        // Re-derive body spans from the raw scan: every stream whose object parsed.
        Parser p(bytes_);
        for (const auto& s : scanned_) {
            if (!s.object.is_stream()) {
                continue;
            }
            try {
                auto ind = p.parse_indirect(s.offset);
                if (ind.stream_data) {
                    doc_.stream_spans.push_back(*ind.stream_data);
                }
            } catch (const ParseError&) {
            }
        }
    }

    PdfDocument& doc_;
    std::string_view bytes_;
    Parser parser_;
    std::vector<ScannedObject> scanned_;
    std::map<ObjectId, std::vector<std::size_t>> raw_index_;
    std::vector<Revision> revisions_;
    std::unordered_map<std::uint32_t, std::optional<ObjectId>> decided_;
    std::unordered_map<std::uint32_t, std::optional<std::vector<ObjStmMember>>> objstm_cache_;
    std::unordered_map<std::uint32_t, ObjectId> objstm_ids_;
    std::set<ObjectId> missing_;
};

} // namespace

PdfDocument parse_document(std::string bytes, const ParseOptions& options)
{
    if (bytes.empty()) {
        throw Error(ErrorCode::NotAPdf, "empty input");
    }
    auto header = std::string_view(bytes).substr(0, 1024).find("%PDF-");
    if (header == std::string_view::npos) {
        throw Error(ErrorCode::NotAPdf, "no %PDF- header in the first 1024 bytes");
    }
    PdfDocument doc;
    doc.source_ = std::make_shared<const std::string>(std::move(bytes));
    std::string_view data(*doc.source_);
    doc.header_offset = header;
    std::size_t v = header + 5;
    while (v < data.size() && (is_digit(data[v]) || data[v] == '.')) {
        doc.header_version.push_back(data[v++]);
    }
    if (header != 0) {
        doc.warnings.push_back(std::to_string(header) + " bytes of junk before header");
    }

    DocumentBuilder(doc, data).run();

    if (doc.objects.empty()) {
        throw Error(ErrorCode::NoObjectsFound, "no object parsed by xref or raw scan");
    }
    if (options.strict && !doc.warnings.empty()) {
        throw Error(ErrorCode::MalformedPdf, doc.warnings.front());
    }
    return doc;
}

namespace {

void collect_pages(const PdfDocument& doc, const PdfObject& node, std::set<ObjectId>& seen,
                   std::vector<const Dictionary*>& pages, int depth)
{
    if (depth > 64) {
        return;
    }
    if (node.is_ref()) {
        if (!seen.insert(node.as_ref()).second) {
            return;
        }
    }
    const auto* obj = doc.resolve(node);
    if (!obj || !obj->is_dict()) {
        return;
    }
    const auto& d = obj->as_dict();
    if (d.name("Type") == "Page" || (!d.contains("Kids") && d.contains("Contents"))) {
        pages.push_back(&d);
        return;
    }
    if (const auto* kids = d.find("Kids")) {
        if (const auto* arr = doc.resolve(*kids); arr && arr->is_array()) {
            for (const auto& k : arr->as_array()) {
                collect_pages(doc, k, seen, pages, depth + 1);
            }
        }
    }
}

std::string stream_bytes(const Stream& s)
{
    try {
        return decode_stream(s);
    } catch (const Error&) {
        return s.data;
    }
}

} // namespace

std::vector<std::string> page_contents(const PdfDocument& doc)
{
    std::vector<std::string> out;
    const auto* trailer = doc.current_trailer();
    if (!trailer) {
        return out;
    }
    const auto* root = doc.resolve(*trailer->find("Root"));
    if (!root || !root->is_dict()) {
        return out;
    }
    const auto* pages_ref = root->as_dict().find("Pages");
    if (!pages_ref) {
        return out;
    }
    std::set<ObjectId> seen;
    std::vector<const Dictionary*> pages;
    collect_pages(doc, *pages_ref, seen, pages, 0);
    for (const auto* page : pages) {
        std::string content;
        if (const auto* c = page->find("Contents")) {
            const auto* target = doc.resolve(*c);
            if (target && target->is_stream()) {
                content = stream_bytes(target->as_stream());
            } else if (target && target->is_array()) {
                for (const auto& part : target->as_array()) {
                    const auto* s = doc.resolve(part);
                    if (s && s->is_stream()) {
                        content += stream_bytes(s->as_stream());
                    }
                }
            }
        }
        out.push_back(std::move(content));
    }
    return out;
}

} // namespace pdffoot
