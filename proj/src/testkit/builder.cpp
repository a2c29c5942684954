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

#include "pdffoot/testkit.hpp"

#include "pdffoot/writer.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace pdffoot::testkit {

PdfBuilder::PdfBuilder(std::string version) : version_(std::move(version)) { revisions_.emplace_back(); }

ObjectId PdfBuilder::allocate(std::uint16_t generation) { return ObjectId{next_++, generation}; }

ObjectId PdfBuilder::add(PdfObject obj)
{
    auto id = allocate();
    put(id, std::move(obj));
    return id;
}

void PdfBuilder::put(ObjectId id, PdfObject obj)
{
    next_ = std::max(next_, id.number + 1);
    Item item;
    item.kind = Item::Object;
    item.id = id;
    item.object = std::move(obj);
    revisions_.back().items.push_back(std::move(item));
}

void PdfBuilder::put_raw(ObjectId id, std::string body)
{
    next_ = std::max(next_, id.number + 1);
    Item item;
    item.kind = Item::Raw;
    item.id = id;
    item.text = std::move(body);
    revisions_.back().items.push_back(std::move(item));
}

void PdfBuilder::comment(std::string line)
{
    Item item;
    item.kind = Item::Comment;
    item.text = std::move(line);
    revisions_.back().items.push_back(std::move(item));
}

ObjectId PdfBuilder::pack(const std::vector<ObjectId>& ids)
{
    auto& rev = revisions_.back();
    if (!rev.xref_stream) {
        throw std::logic_error("object streams need a cross-reference stream");
    }
    auto id = allocate();
    rev.objstms[id] = ids;
    return id;
}

void PdfBuilder::unlisted(ObjectId id) { revisions_.back().unlisted.insert(id); }

void PdfBuilder::trailer(std::string key, PdfObject value) { revisions_.back().trailer.set(std::move(key), std::move(value)); }

void PdfBuilder::drop_trailer(std::string_view key) { revisions_.back().trailer.erase(key); }

void PdfBuilder::use_xref_stream(bool on) { revisions_.back().xref_stream = on; }

void PdfBuilder::new_revision()
{
    Revision next;
    next.trailer = revisions_.back().trailer;
    next.trailer.erase("Prev");
    next.xref_stream = revisions_.back().xref_stream;
    revisions_.push_back(std::move(next));
}

namespace {

struct Entry {
    int type = 1; // 1: offset, 2: in object stream
    std::size_t field2 = 0;
    std::size_t field3 = 0;
};

std::string pad(std::size_t v, int width)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*zu", width, v);
    return buf;
}

// Runs of consecutive object numbers, as (first, count).
std::vector<std::pair<std::uint32_t, std::uint32_t>> runs(const std::map<std::uint32_t, Entry>& entries)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& [n, e] : entries) {
        if (!out.empty() && out.back().first + out.back().second == n) {
            ++out.back().second;
        } else {
            out.emplace_back(n, 1);
        }
    }
    return out;
}

void put_be(std::string& out, std::size_t v, int width)
{
    for (int i = width - 1; i >= 0; --i) {
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
}

} // namespace

std::string PdfBuilder::build() const
{
    std::string out = "%PDF-" + version_ + "\n%\xE2\xE3\xCF\xD3\n";
    std::uint32_t max_number = next_ - 1;
    for (const auto& rev : revisions_) {
        for (const auto& [id, members] : rev.objstms) {
            max_number = std::max(max_number, id.number);
        }
    }
    std::uint32_t xref_number = max_number;
    std::optional<std::size_t> prev;

    for (std::size_t r = 0; r < revisions_.size(); ++r) {
        const auto& rev = revisions_[r];
        std::map<std::uint32_t, Entry> entries;
        std::set<ObjectId> packed;
        std::map<ObjectId, std::string> packed_bodies;
        for (const auto& [id, members] : rev.objstms) {
            packed.insert(members.begin(), members.end());
        }

        auto emit_object = [&](ObjectId id, const std::string& body) {
            if (!rev.unlisted.count(id)) {
                entries[id.number] = Entry{1, out.size(), id.generation};
            }
            out += std::to_string(id.number) + " " + std::to_string(id.generation) + " obj\n";
            out += body;
            out += "\nendobj\n";
        };

        for (const auto& item : rev.items) {
            if (item.kind == Item::Comment) {
                out += item.text + "\n";
                continue;
            }
            std::string body;
            if (item.kind == Item::Raw) {
                body = item.text;
            } else {
                write_object(body, item.object);
            }
            if (packed.count(item.id)) {
                packed_bodies[item.id] = body;
                continue;
            }
            emit_object(item.id, body);
        }

        for (const auto& [sid, members] : rev.objstms) {
            std::string header;
            std::string data;
            for (std::size_t i = 0; i < members.size(); ++i) {
                auto it = packed_bodies.find(members[i]);
                if (it == packed_bodies.end()) {
                    throw std::logic_error("packed object " + members[i].str() + " has no body");
                }
                header += std::to_string(members[i].number) + " " + std::to_string(data.size()) + " ";
                data += it->second + "\n";
                entries[members[i].number] = Entry{2, sid.number, i};
            }
            Stream s;
            s.dict.set("Type", PdfObject::name("ObjStm"));
            s.dict.set("N", static_cast<std::int64_t>(members.size()));
            s.dict.set("First", static_cast<std::int64_t>(header.size()));
            s.data = header + data;
            std::string body;
            write_object(body, PdfObject(std::move(s)));
            emit_object(sid, body);
        }

        Dictionary trailer = rev.trailer;
        if (prev) {
            trailer.set("Prev", static_cast<std::int64_t>(*prev));
        }
        std::size_t xref_at = out.size();
        if (rev.xref_stream) {
            ObjectId xid{++xref_number, 0};
            entries[xid.number] = Entry{1, xref_at, 0};
            if (r == 0) {
                entries[0] = Entry{0, 0, 65535};
            }
            // The stream of each revision is numbered past every object.
            std::uint32_t size = max_number + static_cast<std::uint32_t>(revisions_.size()) + 1;
            std::string data;
            Array index;
            for (const auto& [first, count] : runs(entries)) {
                index.push_back(PdfObject(static_cast<std::int64_t>(first)));
                index.push_back(PdfObject(static_cast<std::int64_t>(count)));
                for (std::uint32_t n = first; n < first + count; ++n) {
                    const auto& e = entries.at(n);
                    data.push_back(static_cast<char>(e.type));
                    put_be(data, e.field2, 4);
                    put_be(data, e.field3, 2);
                }
            }
            Stream s;
            s.dict.set("Type", PdfObject::name("XRef"));
            s.dict.set("Size", static_cast<std::int64_t>(size));
            s.dict.set("W", PdfObject(Array{PdfObject(1), PdfObject(4), PdfObject(2)}));
            s.dict.set("Index", PdfObject(std::move(index)));
            for (const auto& [k, v] : trailer) {
                if (k != "Size") {
                    s.dict.set(k, v);
                }
            }
            s.data = std::move(data);
            out += std::to_string(xid.number) + " 0 obj\n";
            write_object(out, PdfObject(std::move(s)));
            out += "\nendobj\n";
        } else {
            out += "xref\n";
            if (r == 0) {
                out += "0 1\n0000000000 65535 f \n";
            }
            for (const auto& [first, count] : runs(entries)) {
                out += std::to_string(first) + " " + std::to_string(count) + "\n";
                for (std::uint32_t n = first; n < first + count; ++n) {
                    const auto& e = entries.at(n);
                    out += pad(e.field2, 10) + " " + pad(e.field3, 5) + " n \n";
                }
            }
            Dictionary t;
            t.set("Size", static_cast<std::int64_t>(max_number + 1));
            for (const auto& [k, v] : trailer) {
                if (k != "Size") {
                    t.set(k, v);
                }
            }
            out += "trailer\n";
            write_object(out, PdfObject(std::move(t)));
            out += "\n";
        }
        out += "startxref\n" + std::to_string(xref_at) + "\n%%EOF\n";
        prev = xref_at;
    }
    return out;
}

} // namespace pdffoot::testkit
