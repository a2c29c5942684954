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

#ifndef PDFFOOT_ASSESS_HPP
#define PDFFOOT_ASSESS_HPP

#include "pdffoot/document.hpp"
#include "pdffoot/findings.hpp"
#include "pdffoot/rules.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdffoot {

enum class WeakFlag { OrphanMetadataRecoverable, ShadowRevisionsPresent, IdentifiersOutsideMetadata };

std::string_view to_string(WeakFlag f);

struct Assessment {
    /// 0..3; nullopt for encrypted files, which are not scored.
    std::optional<int> level;
    std::vector<std::string> evidence;
    std::set<WeakFlag> weak_flags;
    bool encrypted = false;
    /// Core fields present in current metadata.
    std::vector<std::string> core_present;
};

/// Level-0: every core field present in current metadata; Level-1: some;
/// Level-2: none; Level-3: none, and no demoting finding and no weak flag.
Assessment assess_level(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                        const std::vector<Finding>& findings, const RuleSet& rules);

struct CorpusScore {
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    std::uint64_t n3 = 0;

    std::uint64_t n() const { return n0 + n1 + n2 + n3; }
    /// Numerator of the score over n().
    std::uint64_t weighted() const { return n1 + 2 * n2 + 3 * n3; }
    double value() const;
    /// Two decimals, truncated: 50/82 renders as "0.60".
    std::string render() const;
};

/// Weighted level mean (0*n0 + 1*n1 + 2*n2 + 3*n3) / n.
///
/// Throws Error(EmptyCorpus) when n is zero.
CorpusScore score_corpus(std::uint64_t n0, std::uint64_t n1, std::uint64_t n2, std::uint64_t n3);

enum class ScoreBucket { Zero, ZeroOne, One, OneTwo, Two, TwoThree, Three };

std::string_view to_string(ScoreBucket b);

ScoreBucket bucket_of(const CorpusScore& s);

/// Histogram over all seven buckets, in ascending order.
std::array<std::pair<ScoreBucket, std::size_t>, 7>
bucket_scores(const std::vector<std::pair<std::string, CorpusScore>>& scores);

} // namespace pdffoot

#endif
