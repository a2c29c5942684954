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

#include "pdffoot/writer.hpp"

#include "pdffoot/errors.hpp"
#include "pdffoot/parser.hpp"

#include <cstdio>
#include <set>

namespace pdffoot {

namespace {

constexpr char HexDigits[] = "0123456789ABCDEF";

void write_literal(std::string& out, const std::string& bytes)
{
    out.push_back('(');
    for (char ch : bytes) {
        auto c = static_cast<unsigned char>(ch);
        switch (c) {
        case '(': out += "\\("; break;
        case ')': out += "\\)"; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        default:
            if (c < 0x20 || c >= 0x7F) {
                out.push_back('\\');
                out.push_back(static_cast<char>('0' + ((c >> 6) & 7)));
                out.push_back(static_cast<char>('0' + ((c >> 3) & 7)));
                out.push_back(static_cast<char>('0' + (c & 7)));
            } else {
                out.push_back(static_cast<char>(c));
            }
        }
    }
    out.push_back(')');
}

void write_hex(std::string& out, const std::string& bytes)
{
    out.push_back('<');
    for (char ch : bytes) {
        auto c = static_cast<unsigned char>(ch);
        out.push_back(HexDigits[c >> 4]);
        out.push_back(HexDigits[c & 15]);
    }
    out.push_back('>');
}

void write_name(std::string& out, const std::string& name)
{
    out.push_back('/');
    for (char ch : name) {
        auto c = static_cast<unsigned char>(ch);
        if (c < 0x21 || c > 0x7E || c == '#' || is_pdf_delimiter(ch)) {
            out.push_back('#');
            out.push_back(HexDigits[c >> 4]);
            out.push_back(HexDigits[c & 15]);
        } else {
            out.push_back(ch);
        }
    }
}

void write_dict(std::string& out, const Dictionary& dict)
{
    out += "<<";
    bool first = true;
    for (const auto& [k, v] : dict) {
        if (!first) {
            out.push_back(' ');
        }
        first = false;
        write_name(out, k);
        out.push_back(' ');
        write_object(out, v);
    }
    out += ">>";
}

void collect_refs(const PdfObject& obj, std::vector<ObjectId>& refs)
{
    switch (obj.kind()) {
    case ObjectKind::Reference: refs.push_back(obj.as_ref()); break;
    case ObjectKind::Array:
        for (const auto& v : obj.as_array()) {
            collect_refs(v, refs);
        }
        break;
    case ObjectKind::Dictionary:
    case ObjectKind::Stream:
        for (const auto& [k, v] : *obj.dict()) {
            if (obj.is_stream() && k == "Length") {
                continue; // rewritten as a direct integer
            }
            collect_refs(v, refs);
        }
        break;
    default: break;
    }
}

std::string offset_field(std::size_t v, int width)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*zu", width, v);
    return buf;
}

} // namespace

void write_object(std::string& out, const PdfObject& obj)
{
    switch (obj.kind()) {
    case ObjectKind::Null: out += "null"; break;
    case ObjectKind::Boolean: out += obj.as_bool() ? "true" : "false"; break;
    case ObjectKind::Integer: out += std::to_string(obj.as_integer()); break;
    case ObjectKind::Real: out += std::get<Real>(obj.storage()).text; break;
    case ObjectKind::String: {
        const auto& s = obj.as_string();
        if (s.hex) {
            write_hex(out, s.bytes);
        } else {
            write_literal(out, s.bytes);
        }
        break;
    }
    case ObjectKind::Name: write_name(out, obj.as_name()); break;
    case ObjectKind::Array: {
        out.push_back('[');
        bool first = true;
        for (const auto& v : obj.as_array()) {
            if (!first) {
                out.push_back(' ');
            }
            first = false;
            write_object(out, v);
        }
        out.push_back(']');
        break;
    }
    case ObjectKind::Dictionary: write_dict(out, obj.as_dict()); break;
    case ObjectKind::Stream: {
        const auto& s = obj.as_stream();
        Dictionary d = s.dict;
        d.set("Length", static_cast<std::int64_t>(s.data.size()));
        write_dict(out, d);
        out += "\nstream\n";
        out += s.data;
        out += "\nendstream";
        break;
    }
    case ObjectKind::Reference: {
        auto id = obj.as_ref();
        out += std::to_string(id.number);
        out.push_back(' ');
        out += std::to_string(id.generation);
        out += " R";
        break;
    }
    }
}

std::set<ObjectId> reachable_objects(const WriteGraph& graph)
{
    std::set<ObjectId> seen;
    std::vector<ObjectId> pending;
    for (const char* key : {"Root", "Info"}) {
        if (const auto* v = graph.trailer.find(key)) {
            collect_refs(*v, pending);
        }
    }
    while (!pending.empty()) {
        ObjectId id = pending.back();
        pending.pop_back();
        auto it = graph.objects.find(id);
        if (it == graph.objects.end() || !seen.insert(id).second) {
            continue;
        }
        collect_refs(it->second, pending);
    }
    return seen;
}

std::string write_pdf(const WriteGraph& graph)
{
    if (!graph.trailer.contains("Root")) {
        throw Error(ErrorCode::NoRoot, "trailer has no /Root");
    }
    const auto emit = reachable_objects(graph);

    std::string out = "%PDF-" + (graph.header_version.empty() ? std::string("1.4") : graph.header_version);
    out += "\n%\xE2\xE3\xCF\xD3\n";
    std::map<std::uint32_t, std::pair<std::size_t, std::uint16_t>> offsets;
    std::uint32_t max_number = 0;
    for (const auto& id : emit) {
        offsets[id.number] = {out.size(), id.generation};
        max_number = std::max(max_number, id.number);
        out += std::to_string(id.number) + " " + std::to_string(id.generation) + " obj\n";
        write_object(out, graph.objects.at(id));
        out += "\nendobj\n";
    }
    std::size_t xref = out.size();
    out += "xref\n0 " + std::to_string(max_number + 1) + "\n";
    out += "0000000000 65535 f \n";
    for (std::uint32_t n = 1; n <= max_number; ++n) {
        auto it = offsets.find(n);
        if (it == offsets.end()) {
            out += "0000000000 00000 f \n";
        } else {
            out += offset_field(it->second.first, 10) + " " + offset_field(it->second.second, 5) + " n \n";
        }
    }
    Dictionary trailer;
    trailer.set("Size", static_cast<std::int64_t>(max_number + 1));
    for (const auto& [k, v] : graph.trailer) {
        if (k != "Size") {
            trailer.set(k, v);
        }
    }
    out += "trailer\n";
    write_dict(out, trailer);
    out += "\nstartxref\n" + std::to_string(xref) + "\n%%EOF\n";
    return out;
}

WriteGraph graph_of(const PdfDocument& doc)
{
    const auto* current = doc.current_trailer();
    if (!current) {
        throw Error(ErrorCode::NoRoot, "no trailer with /Root");
    }
    WriteGraph g;
    if (!doc.header_version.empty()) {
        g.header_version = doc.header_version;
    }
    for (const char* key : {"Root", "Info", "ID"}) {
        if (const auto* v = current->find(key)) {
            g.trailer.set(key, *v);
        }
    }
    for (const auto& [id, rec] : doc.objects) {
        g.objects.emplace(id, rec.object);
    }
    return g;
}

std::string serialize_document(const PdfDocument& doc) { return write_pdf(graph_of(doc)); }

} // namespace pdffoot
