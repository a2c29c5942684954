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


// Helpers shared by the test binaries.

#ifndef PDFFOOT_TESTS_SUPPORT_HPP
#define PDFFOOT_TESTS_SUPPORT_HPP

#include "pdffoot/document.hpp"
#include "pdffoot/extract.hpp"
#include "pdffoot/filters.hpp"
#include "pdffoot/testkit.hpp"

#include <set>
#include <string>
#include <vector>

namespace pdffoot::testing {

/// Equality of two objects ignoring the stream /Length entry, which a
/// writer is free to recompute.
inline bool same_object(const PdfObject& a, const PdfObject& b)
{
    if (a.is_stream() && b.is_stream()) {
        auto da = a.as_stream().dict;
        auto db = b.as_stream().dict;
        da.erase("Length");
        db.erase("Length");
        return da == db && a.as_stream().data == b.as_stream().data;
    }
    return a == b;
}

/// The live objects of `a` and `b` have the same ids and equal values, and
/// both current trailers name the same Root.
inline bool graph_equivalent(const PdfDocument& a, const PdfDocument& b, std::string* why = nullptr)
{
    auto fail = [&](std::string msg) {
        if (why) {
            *why = std::move(msg);
        }
        return false;
    };
    if (a.live != b.live) {
        return fail("live object sets differ");
    }
    for (const auto& id : a.live) {
        const auto* x = a.get(id);
        const auto* y = b.get(id);
        if (!x || !y || !same_object(*x, *y)) {
            return fail("object " + id.str() + " differs");
        }
    }
    const auto* ta = a.current_trailer();
    const auto* tb = b.current_trailer();
    if (!ta || !tb || !ta->find("Root") || !tb->find("Root") || !(*ta->find("Root") == *tb->find("Root"))) {
        return fail("Root differs");
    }
    return true;
}

inline std::set<ObjectId> object_ids(const PdfDocument& doc)
{
    std::set<ObjectId> ids;
    for (const auto& [id, rec] : doc.objects) {
        ids.insert(id);
    }
    return ids;
}

inline std::set<testkit::Leak> leaks_of(const std::vector<Finding>& findings)
{
    std::set<testkit::Leak> out;
    for (const auto& f : findings) {
        out.insert({f.category, f.value});
    }
    return out;
}

/// Raw stream bytes of every page's /Contents, in page order.
inline std::vector<std::string> raw_page_streams(const PdfDocument& doc)
{
    std::vector<std::string> out;
    const auto* trailer = doc.current_trailer();
    if (!trailer) {
        return out;
    }
    std::vector<const PdfObject*> stack;
    const auto* root = doc.resolve(*trailer->find("Root"));
    if (!root || !root->dict() || !root->dict()->find("Pages")) {
        return out;
    }
    stack.push_back(doc.resolve(*root->dict()->find("Pages")));
    int guard = 0;
    while (!stack.empty() && ++guard < 10000) {
        const auto* node = stack.back();
        stack.pop_back();
        if (!node || !node->dict()) {
            continue;
        }
        const auto& d = *node->dict();
        if (const auto* kids = d.find("Kids"); kids && kids->is_array()) {
            for (auto it = kids->as_array().rbegin(); it != kids->as_array().rend(); ++it) {
                stack.push_back(doc.resolve(*it));
            }
            continue;
        }
        const auto* contents = d.find("Contents");
        if (!contents) {
            continue;
        }
        std::vector<const PdfObject*> parts;
        if (const auto* c = doc.resolve(*contents); c && c->is_array()) {
            for (const auto& p : c->as_array()) {
                parts.push_back(doc.resolve(p));
            }
        } else {
            parts.push_back(c);
        }
        for (const auto* p : parts) {
            if (p && p->is_stream()) {
                out.push_back(p->as_stream().data);
            }
        }
    }
    return out;
}

} // namespace pdffoot::testing

#endif
