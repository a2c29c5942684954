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

#ifndef PDFFOOT_SANITIZE_HPP
#define PDFFOOT_SANITIZE_HPP

#include "pdffoot/assess.hpp"
#include "pdffoot/object.hpp"
#include "pdffoot/rules.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

struct SanitizeOptions {
    int level = 3; // 2 or 3
    /// Level 3: blank T/Contents/M of annotations instead of removing them.
    bool blank_annotations = false;
    /// Level 3: leave JavaScript and Launch actions in place.
    bool keep_scripts = false;
};

struct Removal {
    std::string category;
    std::optional<ObjectId> object;
    std::string description;
};

struct SanitizationLog {
    int requested_level = 3;
    std::vector<Removal> removed;
    std::size_t bytes_before = 0;
    std::size_t bytes_after = 0;
    std::optional<int> verified_level;

    std::string to_json() const;
};

struct SanitizeResult {
    std::string bytes;
    SanitizationLog log;
    Assessment assessment;
};

/// Rewrites `bytes` as a single revision holding only what is reachable
/// from the catalog, with the hidden data of the requested level removed,
/// then re-assesses the output.
///
/// Level 2 drops the Info dictionary, every Metadata stream, and the canonical
/// keys of any dictionary that looks like an Info dictionary. Level 3 also
/// removes annotation authorship, scripts, embedded files, platform keys,
/// private application data, e-mail addresses in strings, and reduces paths
/// in strings to their basename. Page content streams and fonts are copied
/// unchanged.
///
/// Throws Error(EncryptedInput), and Error(VerificationFailed) when the
/// output assesses below the requested level (the output is withheld).
SanitizeResult sanitize(std::string_view bytes, const SanitizeOptions& options, const RuleSet& rules);
SanitizeResult sanitize(std::string_view bytes, const SanitizeOptions& options = {});

/// Parses `bytes` (with raw scan), runs every extractor and assesses the
/// level. With `keep_scripts`, Script findings do not demote.
Assessment verify(std::string_view bytes, const RuleSet& rules, bool keep_scripts = false);

} // namespace pdffoot

#endif
