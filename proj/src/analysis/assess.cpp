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

#include "pdffoot/assess.hpp"

#include "pdffoot/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace pdffoot {

std::string_view to_string(WeakFlag f)
{
    switch (f) {
    case WeakFlag::OrphanMetadataRecoverable: return "OrphanMetadataRecoverable";
    case WeakFlag::ShadowRevisionsPresent: return "ShadowRevisionsPresent";
    case WeakFlag::IdentifiersOutsideMetadata: return "IdentifiersOutsideMetadata";
    }
    return "?";
}

namespace {

std::string describe(const MetadataRecord& r)
{
    return std::string(to_string(r.source)) + " " + r.object.str() + (r.superseded ? " (superseded)" : "");
}

bool outside_metadata(const Finding& f)
{
    switch (f.category) {
    case FindingCategory::AuthorName:
    case FindingCategory::Email:
    case FindingCategory::Path:
    case FindingCategory::Username:
    case FindingCategory::PlatformKey:
    case FindingCategory::Annotation: return f.identifying && !f.from_metadata;
    default: return false;
    }
}

} // namespace

Assessment assess_level(const PdfDocument& doc, const std::vector<MetadataRecord>& records,
                        const std::vector<Finding>& findings, const RuleSet& rules)
{
    Assessment a;
    if (doc.encrypted) {
        a.encrypted = true;
        a.evidence.push_back("encrypted: trailer has /Encrypt");
        return a;
    }

    for (const auto& key : rules.core_keys) {
        for (const auto& r : records) {
            if (r.current && !trim(r.text(key)).empty()) {
                a.core_present.push_back(key);
                a.evidence.push_back(key + " in " + describe(r));
                break;
            }
        }
    }

    for (const auto& r : records) {
        if (r.current) {
            continue;
        }
        auto it = std::find_if(r.fields.begin(), r.fields.end(), [&](const MetadataField& f) {
            return rules.is_canonical(f.key) && !trim(f.value.text).empty();
        });
        if (it != r.fields.end()) {
            a.weak_flags.insert(WeakFlag::OrphanMetadataRecoverable);
            a.evidence.push_back("recoverable " + it->key + " in " + describe(r));
        }
    }
    if (!doc.shadows.empty()) {
        a.weak_flags.insert(WeakFlag::ShadowRevisionsPresent);
        a.evidence.push_back(std::to_string(doc.shadows.size()) + " superseded object versions");
    }
    if (std::any_of(findings.begin(), findings.end(), outside_metadata)) {
        a.weak_flags.insert(WeakFlag::IdentifiersOutsideMetadata);
    }

    bool demoted = false;
    for (const auto& f : findings) {
        if (f.identifying && rules.demote.count(f.category)) {
            demoted = true;
            a.evidence.push_back(std::string(to_string(f.category)) + " '" + f.value + "'");
        }
    }

    const std::size_t present = a.core_present.size();
    if (!rules.core_keys.empty() && present == rules.core_keys.size()) {
        a.level = 0;
    } else if (present > 0) {
        a.level = 1;
    } else if (demoted || !a.weak_flags.empty()) {
        a.evidence.push_back("no core field in current metadata");
        a.level = 2;
    } else {
        a.evidence.push_back("no core field in current metadata, nothing demoting");
        a.level = 3;
    }
    return a;
}

double CorpusScore::value() const { return n() ? static_cast<double>(weighted()) / static_cast<double>(n()) : 0.0; }

std::string CorpusScore::render() const
{
    if (n() == 0) {
        return "n/a";
    }
    std::uint64_t hundredths = weighted() * 100 / n();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu.%02llu", static_cast<unsigned long long>(hundredths / 100),
                  static_cast<unsigned long long>(hundredths % 100));
    return buf;
}

CorpusScore score_corpus(std::uint64_t n0, std::uint64_t n1, std::uint64_t n2, std::uint64_t n3)
{
    CorpusScore s{n0, n1, n2, n3};
    if (s.n() == 0) {
        throw Error(ErrorCode::EmptyCorpus, "no assessed files");
    }
    return s;
}

std::string_view to_string(ScoreBucket b)
{
    switch (b) {
    case ScoreBucket::Zero: return "0";
    case ScoreBucket::ZeroOne: return "(0,1)";
    case ScoreBucket::One: return "1";
    case ScoreBucket::OneTwo: return "(1,2)";
    case ScoreBucket::Two: return "2";
    case ScoreBucket::TwoThree: return "(2,3)";
    case ScoreBucket::Three: return "3";
    }
    return "?";
}

ScoreBucket bucket_of(const CorpusScore& s)
{
    std::uint64_t n = s.n();
    std::uint64_t w = s.weighted();
    if (n == 0) {
        return ScoreBucket::Zero;
    }
    std::uint64_t whole = w / n;
    bool exact = w % n == 0;
    static constexpr ScoreBucket exact_buckets[] = {ScoreBucket::Zero, ScoreBucket::One, ScoreBucket::Two,
                                                    ScoreBucket::Three};
    static constexpr ScoreBucket open_buckets[] = {ScoreBucket::ZeroOne, ScoreBucket::OneTwo, ScoreBucket::TwoThree};
    return exact ? exact_buckets[whole] : open_buckets[whole];
}

std::array<std::pair<ScoreBucket, std::size_t>, 7>
bucket_scores(const std::vector<std::pair<std::string, CorpusScore>>& scores)
{
    std::array<std::pair<ScoreBucket, std::size_t>, 7> hist = {{
        {ScoreBucket::Zero, 0},
        {ScoreBucket::ZeroOne, 0},
        {ScoreBucket::One, 0},
        {ScoreBucket::OneTwo, 0},
        {ScoreBucket::Two, 0},
        {ScoreBucket::TwoThree, 0},
        {ScoreBucket::Three, 0},
    }};
    for (const auto& [group, score] : scores) {
        hist[static_cast<std::size_t>(bucket_of(score))].second++;
    }
    return hist;
}

} // namespace pdffoot
