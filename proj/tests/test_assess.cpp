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


#include "doctest.h"

#include "pdffoot/assess.hpp"
#include "pdffoot/errors.hpp"
#include "pdffoot/extract.hpp"

#include "support.hpp"

#include <random>

using namespace pdffoot;
using namespace pdffoot::testkit;

namespace {

Assessment assess(std::string_view bytes, const RuleSet& rules = *RuleSet::defaults())
{
    auto doc = parse_document(std::string(bytes));
    auto ex = run_extractors(doc, rules);
    return assess_level(doc, ex.records, ex.findings, rules);
}

std::set<std::string> flag_names(const Assessment& a)
{
    std::set<std::string> out;
    for (auto f : a.weak_flags) {
        out.insert(std::string(to_string(f)));
    }
    return out;
}

} // namespace

TEST_CASE("levels and weak flags equal the manifest on every fixture")
{
    auto fixtures = all_families();
    auto more = sanitizer_corpus(12);
    fixtures.insert(fixtures.end(), more.begin(), more.end());
    auto levels = level_corpus();
    fixtures.insert(fixtures.end(), levels.begin(), levels.end());
    for (const auto& f : fixtures) {
        CAPTURE(f.manifest.id);
        auto a = assess(f.bytes);
        CHECK(a.level == f.manifest.level);
        CHECK(flag_names(a) == f.manifest.weak_flags);
        CHECK_FALSE(a.evidence.empty());
    }
}

TEST_CASE("core fields decide Level 0 and Level 1")
{
    auto full = assess(make_fixture("full-metadata").bytes);
    CHECK(full.level == 0);
    CHECK(full.core_present.size() == 4);
    auto partial = assess(make_fixture("partial-metadata").bytes);
    CHECK(partial.level == 1);
    CHECK(partial.core_present == std::vector<std::string>{"Producer"});
}

TEST_CASE("a file without any metadata or leak is Level 3")
{
    auto a = assess(make_fixture("minimal").bytes);
    CHECK(a.level == 3);
    CHECK(a.weak_flags.empty());
}

TEST_CASE("script findings demote unless the rule file says otherwise")
{
    auto f = make_fixture("script");
    CHECK(assess(f.bytes).level == 2);
    std::string text = "reset\tdemote\n";
    for (auto c : RuleSet::defaults()->demote) {
        if (c != FindingCategory::Script) {
            text += "demote\t" + std::string(to_string(c)) + "\n";
        }
    }
    auto rules = RuleSet::parse(text);
    CHECK(assess(f.bytes, *rules).level == 3);
}

TEST_CASE("monotone under leak removal")
{
    // Removing the reference-only leak (the orphan) or the Info dictionary
    // never lowers the level.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto full = make_fixture("full-metadata", seed);
        auto weak = drop_info_reference(full.bytes);
        CHECK(assess(weak).level.value() >= assess(full.bytes).level.value());
    }
}

TEST_CASE("encrypted files are not scored")
{
    PdfBuilder b;
    Dictionary cat;
    cat.set("Type", PdfObject::name("Catalog"));
    b.trailer("Root", PdfObject(Reference{b.add(PdfObject(cat))}));
    b.trailer("Encrypt", PdfObject(Reference{b.add(PdfObject(Dictionary{}))}));
    auto a = assess(b.build());
    CHECK(a.encrypted);
    CHECK_FALSE(a.level);
}

TEST_CASE("score: 45/24/13/0 renders 0.60")
{
    auto s = score_corpus(45, 24, 13, 0);
    CHECK(s.n() == 82);
    CHECK(s.weighted() == 50);
    CHECK(s.render() == "0.60");
    CHECK(s.value() == doctest::Approx(50.0 / 82.0));
}

TEST_CASE("score: bounds and exact values")
{
    CHECK(score_corpus(0, 0, 0, 5).render() == "3.00");
    CHECK(score_corpus(7, 0, 0, 0).render() == "0.00");
    CHECK(score_corpus(1, 1, 1, 1).render() == "1.50");
    CHECK(score_corpus(0, 2, 1, 0).render() == "1.33");
    try {
        score_corpus(0, 0, 0, 0);
        FAIL("scored an empty corpus");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyCorpus);
    }
}

TEST_CASE("score: linearity over concatenated corpora")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a[4], b[4];
        for (int k = 0; k < 4; ++k) {
            a[k] = rng() % 20;
            b[k] = rng() % 20;
        }
        a[0] += 1;
        b[3] += 1;
        auto sa = score_corpus(a[0], a[1], a[2], a[3]);
        auto sb = score_corpus(b[0], b[1], b[2], b[3]);
        auto sc = score_corpus(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]);
        double mixed = (sa.value() * sa.n() + sb.value() * sb.n()) / static_cast<double>(sa.n() + sb.n());
        CHECK(sc.value() == doctest::Approx(mixed));
        CHECK(sc.value() >= 0.0);
        CHECK(sc.value() <= 3.0);
    }
}

TEST_CASE("buckets")
{
    CHECK(bucket_of(score_corpus(3, 0, 0, 0)) == ScoreBucket::Zero);
    CHECK(bucket_of(score_corpus(45, 24, 13, 0)) == ScoreBucket::ZeroOne);
    CHECK(bucket_of(score_corpus(0, 0, 4, 0)) == ScoreBucket::Two);
    CHECK(bucket_of(score_corpus(0, 0, 3, 2)) == ScoreBucket::TwoThree);
    CHECK(bucket_of(score_corpus(0, 0, 0, 1)) == ScoreBucket::Three);
    auto hist = bucket_scores({{"a", score_corpus(0, 0, 1, 0)}, {"b", score_corpus(0, 0, 3, 2)}});
    CHECK(hist[4].first == ScoreBucket::Two);
    CHECK(hist[4].second == 1);
    CHECK(hist[5].second == 1);
    CHECK(to_string(hist[1].first) == "(0,1)");
}
