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

#ifndef PDFFOOT_ERRORS_HPP
#define PDFFOOT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdffoot {

enum class ErrorCode {
    NotAPdf,
    NoObjectsFound,
    MalformedPdf,
    UnsupportedFilter,
    CorruptStream,
    MalformedObjStm,
    NoRoot,
    UnparsableDate,
    EmptyCorpus,
    EncryptedInput,
    VerificationFailed,
    EmptyInput,
    FetchError,
    BadRule,
};

std::string_view to_string(ErrorCode code);

/// Base exception for everything the library reports as a typed failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown by decode_stream; `filter()` names the filter that is not supported.
class UnsupportedFilter : public Error {
public:
    explicit UnsupportedFilter(std::string filter)
        : Error(ErrorCode::UnsupportedFilter, filter), filter_(std::move(filter))
    {
    }

    const std::string& filter() const noexcept { return filter_; }

private:
    std::string filter_;
};

/// Thrown by decode_stream when decompression fails. Whatever was inflated
/// before the failure is kept for diagnostics.
class CorruptStream : public Error {
public:
    CorruptStream(const std::string& what, std::string partial)
        : Error(ErrorCode::CorruptStream, what), partial_(std::move(partial))
    {
    }

    const std::string& partial() const noexcept { return partial_; }

private:
    std::string partial_;
};

} // namespace pdffoot

#endif
