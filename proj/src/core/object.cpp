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

#include "pdffoot/errors.hpp"
#include "pdffoot/object.hpp"

#include <cstdlib>

namespace pdffoot {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotAPdf: return "NotAPdf";
    case ErrorCode::NoObjectsFound: return "NoObjectsFound";
    case ErrorCode::MalformedPdf: return "MalformedPdf";
    case ErrorCode::UnsupportedFilter: return "UnsupportedFilter";
    case ErrorCode::CorruptStream: return "CorruptStream";
    case ErrorCode::MalformedObjStm: return "MalformedObjStm";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::UnparsableDate: return "UnparsableDate";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EncryptedInput: return "EncryptedInput";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::FetchError: return "FetchError";
    case ErrorCode::BadRule: return "BadRule";
    }
    return "Unknown";
}

std::string ObjectId::str() const { return std::to_string(number) + " " + std::to_string(generation); }

double Real::value() const { return std::strtod(text.c_str(), nullptr); }

const PdfObject* Dictionary::find(std::string_view key) const
{
    for (const auto& [k, v] : entries_) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

PdfObject* Dictionary::find(std::string_view key)
{
    for (auto& [k, v] : entries_) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

void Dictionary::set(std::string key, PdfObject value)
{
    if (auto* existing = find(key)) {
        *existing = std::move(value);
        return;
    }
    entries_.emplace_back(std::move(key), std::move(value));
}

bool Dictionary::erase(std::string_view key)
{
    for (auto it = entries_.begin(); it != entries_.end(); ++it) {
        if (it->first == key) {
            entries_.erase(it);
            return true;
        }
    }
    return false;
}

std::optional<std::string> Dictionary::name(std::string_view key) const
{
    const auto* v = find(key);
    if (v && v->is_name()) {
        return v->as_name();
    }
    return std::nullopt;
}

std::optional<std::int64_t> Dictionary::integer(std::string_view key) const
{
    const auto* v = find(key);
    if (v && v->is_integer()) {
        return v->as_integer();
    }
    if (v && v->is_real()) {
        return static_cast<std::int64_t>(v->as_number());
    }
    return std::nullopt;
}

bool Dictionary::operator==(const Dictionary& other) const { return entries_ == other.entries_; }

double PdfObject::as_number() const
{
    if (is_integer()) {
        return static_cast<double>(as_integer());
    }
    return std::get<Real>(value_).value();
}

const Dictionary* PdfObject::dict() const
{
    if (is_dict()) {
        return &as_dict();
    }
    if (is_stream()) {
        return &as_stream().dict;
    }
    return nullptr;
}

Dictionary* PdfObject::dict()
{
    if (is_dict()) {
        return &as_dict();
    }
    if (is_stream()) {
        return &as_stream().dict;
    }
    return nullptr;
}

std::string_view to_string(ObjectKind kind)
{
    switch (kind) {
    case ObjectKind::Null: return "Null";
    case ObjectKind::Boolean: return "Boolean";
    case ObjectKind::Integer: return "Integer";
    case ObjectKind::Real: return "Real";
    case ObjectKind::String: return "String";
    case ObjectKind::Name: return "Name";
    case ObjectKind::Array: return "Array";
    case ObjectKind::Dictionary: return "Dictionary";
    case ObjectKind::Stream: return "Stream";
    case ObjectKind::Reference: return "Reference";
    }
    return "?";
}

} // namespace pdffoot
