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

#ifndef PDFFOOT_OBJECT_HPP
#define PDFFOOT_OBJECT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pdffoot {

/// Indirect object identity: (object number, generation).
struct ObjectId {
    std::uint32_t number = 0;
    std::uint16_t generation = 0;

    auto operator<=>(const ObjectId&) const = default;
    std::string str() const; // "N G"
};

struct ObjectIdHash {
    std::size_t operator()(const ObjectId& id) const noexcept
    {
        return std::hash<std::uint64_t>{}((std::uint64_t{id.number} << 16) | id.generation);
    }
};

class PdfObject;

using Array = std::vector<PdfObject>;

struct Null {
    bool operator==(const Null&) const = default;
};

/// A real number keeps its source token so that re-serialization is byte-stable.
struct Real {
    std::string text;

    double value() const;
    bool operator==(const Real& other) const { return text == other.text; }
};

/// String object. `bytes` holds the unescaped content; `hex` records the
/// source syntax. `offset` is the token position in the input buffer, or npos
/// when the string came from a decoded stream (object streams) or was synthesized.
struct String {
    std::string bytes;
    bool hex = false;
    std::size_t offset = std::string::npos;

    bool operator==(const String& other) const { return bytes == other.bytes && hex == other.hex; }
};

/// Name object, stored without the leading slash and with #xx escapes decoded.
struct Name {
    std::string value;
    bool operator==(const Name&) const = default;
};

struct Reference {
    ObjectId id;
    bool operator==(const Reference&) const = default;
};

/// Insertion-ordered name -> object map.
class Dictionary {
public:
    using Entry = std::pair<std::string, PdfObject>;

    const PdfObject* find(std::string_view key) const;
    PdfObject* find(std::string_view key);
    bool contains(std::string_view key) const { return find(key) != nullptr; }

    /// Replaces the value when the key exists, keeping its position.
    void set(std::string key, PdfObject value);
    bool erase(std::string_view key);

    /// Name value of `key`, if present and a Name.
    std::optional<std::string> name(std::string_view key) const;
    std::optional<std::int64_t> integer(std::string_view key) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    auto begin() { return entries_.begin(); }
    auto end() { return entries_.end(); }

    bool operator==(const Dictionary& other) const;

private:
    std::vector<Entry> entries_;
};

/// Stream: dictionary plus the raw (still encoded) bytes between the
/// `stream` and `endstream` keywords.
struct Stream {
    Dictionary dict;
    std::string data;
    /// Set when the declared /Length disagreed with the bytes found.
    bool length_mismatch = false;

    bool operator==(const Stream& other) const { return dict == other.dict && data == other.data; }
};

enum class ObjectKind { Null, Boolean, Integer, Real, String, Name, Array, Dictionary, Stream, Reference };

class PdfObject {
public:
    using Storage = std::variant<Null, bool, std::int64_t, Real, String, Name, Array, Dictionary, Stream, Reference>;

    PdfObject() = default;
    PdfObject(Null v) : value_(v) {}
    PdfObject(bool v) : value_(v) {}
    PdfObject(std::int64_t v) : value_(v) {}
    PdfObject(int v) : value_(std::int64_t{v}) {}
    PdfObject(Real v) : value_(std::move(v)) {}
    PdfObject(String v) : value_(std::move(v)) {}
    PdfObject(Name v) : value_(std::move(v)) {}
    PdfObject(Array v) : value_(std::move(v)) {}
    PdfObject(Dictionary v) : value_(std::move(v)) {}
    PdfObject(Stream v) : value_(std::move(v)) {}
    PdfObject(Reference v) : value_(v) {}

    static PdfObject name(std::string n) { return PdfObject(Name{std::move(n)}); }
    static PdfObject string(std::string bytes) { return PdfObject(String{std::move(bytes)}); }
    static PdfObject ref(std::uint32_t num, std::uint16_t gen = 0) { return PdfObject(Reference{{num, gen}}); }

    ObjectKind kind() const { return static_cast<ObjectKind>(value_.index()); }

    bool is_null() const { return std::holds_alternative<Null>(value_); }
    bool is_bool() const { return std::holds_alternative<bool>(value_); }
    bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
    bool is_real() const { return std::holds_alternative<Real>(value_); }
    bool is_number() const { return is_integer() || is_real(); }
    bool is_string() const { return std::holds_alternative<String>(value_); }
    bool is_name() const { return std::holds_alternative<Name>(value_); }
    bool is_array() const { return std::holds_alternative<Array>(value_); }
    bool is_dict() const { return std::holds_alternative<Dictionary>(value_); }
    bool is_stream() const { return std::holds_alternative<Stream>(value_); }
    bool is_ref() const { return std::holds_alternative<Reference>(value_); }

    bool as_bool() const { return std::get<bool>(value_); }
    std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
    double as_number() const;
    const String& as_string() const { return std::get<String>(value_); }
    String& as_string() { return std::get<String>(value_); }
    const std::string& as_name() const { return std::get<Name>(value_).value; }
    const Array& as_array() const { return std::get<Array>(value_); }
    Array& as_array() { return std::get<Array>(value_); }
    const Dictionary& as_dict() const { return std::get<Dictionary>(value_); }
    Dictionary& as_dict() { return std::get<Dictionary>(value_); }
    const Stream& as_stream() const { return std::get<Stream>(value_); }
    Stream& as_stream() { return std::get<Stream>(value_); }
    ObjectId as_ref() const { return std::get<Reference>(value_).id; }

    /// Dictionary of a Dictionary or Stream object; nullptr otherwise.
    const Dictionary* dict() const;
    Dictionary* dict();

    bool is_name(std::string_view n) const { return is_name() && as_name() == n; }

    const Storage& storage() const { return value_; }

    bool operator==(const PdfObject& other) const { return value_ == other.value_; }

private:
    Storage value_;
};

std::string_view to_string(ObjectKind kind);

} // namespace pdffoot

#endif
