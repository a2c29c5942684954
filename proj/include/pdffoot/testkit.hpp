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

// Synthetic PDF fixtures with ground-truth manifests. The generator writes the
// bytes directly, so a manifest records what was put into a file rather than
// what the analysis code reads back out of it.

#ifndef PDFFOOT_TESTKIT_HPP
#define PDFFOOT_TESTKIT_HPP

#include "pdffoot/findings.hpp"
#include "pdffoot/object.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot::testkit {

/// Writes PDF files object by object. Supports classic and stream
/// cross-reference sections, object streams, incremental updates, comments
/// and objects left out of every cross-reference section.
class PdfBuilder {
public:
    explicit PdfBuilder(std::string version = "1.7");

    /// Next free object number.
    ObjectId allocate(std::uint16_t generation = 0);
    ObjectId add(PdfObject obj);
    void put(ObjectId id, PdfObject obj);
    /// `body` is written verbatim between `obj` and `endobj`.
    void put_raw(ObjectId id, std::string body);
    /// A comment line at the current position; `line` includes the `%`.
    void comment(std::string line);
    /// Members of the current revision stored in one object stream. Requires
    /// a cross-reference stream for the revision.
    ObjectId pack(const std::vector<ObjectId>& ids);
    /// Object bytes are written but no cross-reference entry points at them.
    void unlisted(ObjectId id);

    void trailer(std::string key, PdfObject value);
    void drop_trailer(std::string_view key);
    void use_xref_stream(bool on = true);

    /// Starts an incremental update. The trailer carries over.
    void new_revision();

    std::string build() const;

private:
    struct Item {
        enum Kind { Object, Raw, Comment } kind = Object;
        ObjectId id;
        PdfObject object;
        std::string text;
    };
    struct Revision {
        std::vector<Item> items;
        Dictionary trailer;
        bool xref_stream = false;
        std::map<ObjectId, std::vector<ObjectId>> objstms;
        std::set<ObjectId> unlisted;
    };

    std::string version_;
    std::uint32_t next_ = 1;
    std::vector<Revision> revisions_;
};

struct Leak {
    FindingCategory category;
    std::string value;

    auto operator<=>(const Leak&) const = default;
};

struct FixtureManifest {
    std::string id;
    std::string family;
    std::uint64_t seed = 0;
    int level = 3;
    std::set<std::string> weak_flags;
    std::set<Leak> leaks;
    /// Newest version of every object a full parse must find.
    std::set<ObjectId> objects;
    std::set<ObjectId> orphans;
    std::set<ObjectId> shadows;
    /// Canonical fields of the Info dictionary as written, before any weak
    /// sanitization.
    std::map<std::string, std::string> info_fields;
    /// Population fixtures: group, author and the profile of that author.
    std::string group;
    std::string author;
    std::string profile;

    nlohmann::ordered_json to_json() const;
    static FixtureManifest from_json(const nlohmann::json& j);
};

struct Fixture {
    std::string name; // file name, "<id>.pdf"
    std::string bytes;
    FixtureManifest manifest;
};

/// Every single-file family, in a fixed order.
const std::vector<std::string>& family_names();

/// One instance of a family. Seed 0 gives the canonical instance with fixed
/// reference values; other seeds randomize names, dates, tools and object
/// numbering.
///
/// Throws std::invalid_argument for an unknown family.
Fixture make_fixture(std::string_view family, std::uint64_t seed = 0);

/// Canonical instance of every family.
std::vector<Fixture> all_families();

/// `per_family` randomized instances of every family.
std::vector<Fixture> sanitizer_corpus(std::size_t per_family, std::uint64_t seed = 1);

/// Removes every `/Info N G R` reference from the file by overwriting it
/// with spaces, keeping all offsets valid. This is the reference-only
/// cleaning some metadata tools perform.
std::string drop_info_reference(std::string_view bytes);

/// Randomized file with complete Info metadata and its manifest.
Fixture random_full_metadata(std::uint64_t seed);

/// 100 files whose declared levels are 41 x Level-0, 35 x Level-1,
/// 16 x Level-2 and 8 x Level-3.
std::vector<Fixture> level_corpus(std::uint64_t seed = 7);

struct PopulationSpec {
    std::string group = "agency.example";
    int profile1 = 2;
    int profile2 = 1;
    int profile3 = 3;
};

/// Authors realizing the requested profile mix, several files each.
std::vector<Fixture> population_corpus(const PopulationSpec& spec, std::uint64_t seed = 11);

/// Three reference authors with fixed tool histories:
/// one using the same tool for years, one updating regularly, one changing tools.
std::vector<Fixture> author_history_corpus();

/// Writes `<name>` and `<name minus .pdf>.json` for every fixture.
void write_fixtures(const std::vector<Fixture>& fixtures, const std::filesystem::path& dir);

} // namespace pdffoot::testkit

#endif
