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

#include "pdffoot/filters.hpp"
#include "pdffoot/text.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <stdexcept>

namespace pdffoot::testkit {

nlohmann::ordered_json FixtureManifest::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = "pdffoot.fixture/1";
    j["id"] = id;
    j["family"] = family;
    j["seed"] = seed;
    j["level"] = level;
    j["weak_flags"] = weak_flags;
    auto leaks_json = nlohmann::ordered_json::array();
    for (const auto& l : leaks) {
        leaks_json.push_back({{"category", std::string(to_string(l.category))}, {"value", l.value}});
    }
    j["leaks"] = std::move(leaks_json);
    auto ids = [](const std::set<ObjectId>& s) {
        auto a = nlohmann::ordered_json::array();
        for (const auto& id : s) {
            a.push_back(id.str());
        }
        return a;
    };
    j["objects"] = ids(objects);
    j["orphans"] = ids(orphans);
    j["shadows"] = ids(shadows);
    j["info_fields"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : info_fields) {
        j["info_fields"][k] = v;
    }
    if (!group.empty()) {
        j["population"] = {{"group", group}, {"author", author}, {"profile", profile}};
    }
    return j;
}

FixtureManifest FixtureManifest::from_json(const nlohmann::json& j)
{
    FixtureManifest m;
    m.id = j.at("id").get<std::string>();
    m.family = j.at("family").get<std::string>();
    m.seed = j.value("seed", std::uint64_t{0});
    m.level = j.at("level").get<int>();
    for (const auto& f : j.at("weak_flags")) {
        m.weak_flags.insert(f.get<std::string>());
    }
    for (const auto& l : j.at("leaks")) {
        auto cat = category_from_string(l.at("category").get<std::string>());
        if (!cat) {
            throw std::invalid_argument("unknown category in manifest " + m.id);
        }
        m.leaks.insert({*cat, l.at("value").get<std::string>()});
    }
    auto ids = [](const nlohmann::json& a) {
        std::set<ObjectId> s;
        for (const auto& v : a) {
            unsigned num = 0, gen = 0;
            if (std::sscanf(v.get<std::string>().c_str(), "%u %u", &num, &gen) != 2) {
                throw std::invalid_argument("bad object id in manifest");
            }
            s.insert(ObjectId{num, static_cast<std::uint16_t>(gen)});
        }
        return s;
    };
    m.objects = ids(j.at("objects"));
    m.orphans = ids(j.at("orphans"));
    m.shadows = ids(j.at("shadows"));
    for (const auto& [k, v] : j.at("info_fields").items()) {
        m.info_fields[k] = v.get<std::string>();
    }
    if (j.contains("population")) {
        const auto& p = j["population"];
        m.group = p.at("group").get<std::string>();
        m.author = p.at("author").get<std::string>();
        m.profile = p.at("profile").get<std::string>();
    }
    return m;
}

namespace {

enum class InfoMode { None, Partial, Full };

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return h;
}

PdfObject txt(std::string_view utf8) { return PdfObject::string(encode_string(utf8, TextEncoding::PdfDoc)); }

PdfObject utf16(std::string_view utf8) { return PdfObject::string(encode_string(utf8, TextEncoding::Utf16BE)); }

PdfObject real(std::string text) { return PdfObject(Real{std::move(text)}); }

PdfObject ints(std::initializer_list<int> values)
{
    Array a;
    for (int v : values) {
        a.push_back(PdfObject(v));
    }
    return PdfObject(std::move(a));
}

PdfObject ref(ObjectId id) { return PdfObject(Reference{id}); }

struct Tool {
    std::string creator;
    std::string producer;
};

const std::vector<std::string> kAuthors = {
    "Maria Keller", "Tomasz Nowak", "Aiko Tanaka",  "Peter Brandt", "Sofia Rossi", "Omar Haddad",
    "Lena Fischer", "Ravi Menon",   "Claire Dubois", "Jonas Berg",  "Ines Moreno", "Kofi Mensah",
};

const std::vector<Tool> kTools = {
    {"Microsoft Word 2010", "Microsoft Word 2010"},
    {"Microsoft\u00AE Word 2016", "Microsoft\u00AE Word 2016"},
    {"Writer", "LibreOffice 6.4"},
    {"PScript5.dll Version 5.2.2", "Acrobat Distiller 10.1.0 (Windows)"},
    {"Adobe InDesign CS6 (Macintosh)", "Adobe PDF Library 10.0.1"},
    {"LaTeX with hyperref", "pdfTeX-1.40.21"},
    {"Pages", "Mac OS X 10.6.6 Quartz PDFContext"},
    {"AH Formatter", "Antenna House PDF Output Library 6.2.553 (Linux64)"},
    {"Chromium", "Skia/PDF m80"},
    {"Microsoft\u00AE Excel\u00AE 2013", "Microsoft\u00AE Excel\u00AE 2013"},
};

const std::vector<std::string> kPhrases = {
    "Quarterly summary", "Public notice", "Annual report", "Guidance for applicants", "Press release",
    "Procurement plan",  "Travel advice", "Meeting minutes",
};

const std::vector<std::string> kUsers = {"mazhar", "jdoe", "a.keller", "tnowak", "sofia", "rmenon", "admin", "user01"};

const std::vector<std::string> kTimezones = {"+01'00'", "+02'00'", "-05'00'", "Z", "+05'30'", "+00'00'"};

struct Meta {
    std::string title;
    std::string author;
    std::string creator;
    std::string producer;
    std::string created;
    std::string modified;
};

class Gen {
public:
    Gen(std::string_view family, std::uint64_t seed)
        : rng_(seed * 0x9E3779B97F4A7C15ULL ^ fnv1a(family)), seed_(seed)
    {
        m.family = std::string(family);
        m.seed = seed;
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04llu", static_cast<unsigned long long>(seed));
        m.id = m.family + "-" + buf;
    }

    bool random() const { return seed_ != 0; }
    std::uint64_t seed() const { return seed_; }

    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    bool coin() { return rng_() & 1; }
    int between(int lo, int hi) { return lo + static_cast<int>(pick(static_cast<std::size_t>(hi - lo + 1))); }

    template <class T>
    const T& choice(const std::vector<T>& v)
    {
        return v[pick(v.size())];
    }

    ObjectId add(PdfObject obj)
    {
        auto id = b.add(std::move(obj));
        m.objects.insert(id);
        return id;
    }

    void put(ObjectId id, PdfObject obj)
    {
        b.put(id, std::move(obj));
        m.objects.insert(id);
    }

    void leak(FindingCategory c, std::string value) { m.leaks.insert({c, std::move(value)}); }

    std::string pdf_date(int year)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "D:%04d%02d%02d%02d%02d%02d", year, between(1, 12), between(1, 28),
                      between(0, 23), between(0, 59), between(0, 59));
        return buf + choice(kTimezones);
    }

    Meta random_meta()
    {
        const auto& tool = choice(kTools);
        int year = between(2005, 2020);
        return Meta{choice(kPhrases), choice(kAuthors), tool.creator, tool.producer, pdf_date(year),
                    pdf_date(year + between(0, 1))};
    }

    Fixture finish()
    {
        Fixture f;
        f.bytes = b.build();
        f.manifest = std::move(m);
        f.name = f.manifest.id + ".pdf";
        return f;
    }

    PdfBuilder b;
    FixtureManifest m;

private:
    std::mt19937_64 rng_;
    std::uint64_t seed_;
};

struct Skeleton {
    ObjectId catalog;
    ObjectId pages;
    ObjectId page;
    ObjectId content;
    Dictionary catalog_dict;
    Dictionary page_dict;
    Stream content_stream;
};

// Ids are allocated now; finish_skeleton writes the objects, so families can
// add catalog or page entries first.
Skeleton skeleton(Gen& g, std::string extra_content = {})
{
    if (g.random()) {
        for (int i = g.between(0, 4); i > 0; --i) {
            g.b.allocate();
        }
    }
    Skeleton s;
    s.catalog = g.b.allocate();
    s.pages = g.b.allocate();
    s.page = g.b.allocate();
    s.content = g.b.allocate();

    s.catalog_dict.set("Type", PdfObject::name("Catalog"));
    s.catalog_dict.set("Pages", ref(s.pages));

    Dictionary font;
    font.set("Type", PdfObject::name("Font"));
    font.set("Subtype", PdfObject::name("Type1"));
    font.set("BaseFont", PdfObject::name("Helvetica"));
    Dictionary fonts;
    fonts.set("F1", PdfObject(std::move(font)));
    Dictionary resources;
    resources.set("Font", PdfObject(std::move(fonts)));
    s.page_dict.set("Type", PdfObject::name("Page"));
    s.page_dict.set("Parent", ref(s.pages));
    s.page_dict.set("MediaBox", ints({0, 0, 612, 792}));
    s.page_dict.set("Resources", PdfObject(std::move(resources)));
    s.page_dict.set("Contents", ref(s.content));

    std::string text = g.random() ? g.choice(kPhrases) + " " + std::to_string(g.seed()) : "Hello, world";
    std::string content = "BT /F1 12 Tf 72 720 Td (" + text + ") Tj ET\n" + extra_content;
    if (g.random() && g.coin()) {
        s.content_stream.dict.set("Filter", PdfObject::name("FlateDecode"));
        s.content_stream.data = flate_encode(content);
    } else {
        s.content_stream.data = content;
    }
    return s;
}

void finish_skeleton(Gen& g, Skeleton& s)
{
    g.put(s.catalog, PdfObject(s.catalog_dict));
    Dictionary pages;
    pages.set("Type", PdfObject::name("Pages"));
    pages.set("Kids", PdfObject(Array{ref(s.page)}));
    pages.set("Count", 1);
    g.put(s.pages, PdfObject(std::move(pages)));
    g.put(s.page, PdfObject(s.page_dict));
    g.put(s.content, PdfObject(s.content_stream));

    std::string a, b;
    for (int i = 0; i < 16; ++i) {
        a.push_back(static_cast<char>(g.random() ? g.pick(256) : i * 17));
        b.push_back(static_cast<char>(g.random() ? g.pick(256) : 255 - i * 17));
    }
    g.b.trailer("Root", ref(s.catalog));
    g.b.trailer("ID", PdfObject(Array{PdfObject(String{a, true}), PdfObject(String{b, true})}));
}

// Info dictionary holding the fields selected by `mode`. Records the fields
// and the author leak.
ObjectId put_info(Gen& g, const Meta& meta, InfoMode mode, bool reference = true)
{
    std::vector<std::pair<std::string, std::string>> fields;
    if (mode == InfoMode::Full) {
        fields = {{"Title", meta.title},       {"Author", meta.author},        {"Creator", meta.creator},
                  {"Producer", meta.producer}, {"CreationDate", meta.created}, {"ModDate", meta.modified}};
    } else if (mode == InfoMode::Partial) {
        // A non-empty proper subset of the four core fields.
        int mask = g.random() ? g.between(1, 14) : 8;
        if (mask & 1) {
            fields.emplace_back("Author", meta.author);
        }
        if (mask & 2) {
            fields.emplace_back("Creator", meta.creator);
        }
        if (mask & 4) {
            fields.emplace_back("CreationDate", meta.created);
        }
        if (mask & 8) {
            fields.emplace_back("Producer", meta.producer);
        }
    }
    Dictionary info;
    for (const auto& [k, v] : fields) {
        info.set(k, txt(v));
        g.m.info_fields[k] = v;
        if (k == "Author" && !v.empty()) {
            g.leak(FindingCategory::AuthorName, v);
        }
    }
    auto id = g.add(PdfObject(std::move(info)));
    if (reference) {
        g.b.trailer("Info", ref(id));
    }
    return id;
}

int level_for(InfoMode mode) { return mode == InfoMode::Full ? 0 : mode == InfoMode::Partial ? 1 : 2; }

InfoMode pick_mode(Gen& g, InfoMode canonical)
{
    if (!g.random()) {
        return canonical;
    }
    static const InfoMode modes[] = {InfoMode::None, InfoMode::Partial, InfoMode::Full};
    return modes[g.pick(3)];
}

Meta table1_meta()
{
    return Meta{"", "chocholaty", "Microsoft Word 2010", "Microsoft Word 2010", "D:20190404131651+02'00'",
                "D:20190404131651+02'00'"};
}

// Families --------------------------------------------------------------

Fixture minimal(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    g.m.level = 3;
    return g.finish();
}

Fixture full_metadata(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    auto meta = g.random() ? g.random_meta() : table1_meta();
    if (meta.title.empty()) {
        meta.title = "Report";
    }
    put_info(g, meta, InfoMode::Full);
    g.m.level = 0;
    return g.finish();
}

Fixture partial_metadata(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    auto meta = g.random() ? g.random_meta() : Meta{"", "", "", "Acrobat Distiller 10.1.0 (Windows)", "", ""};
    put_info(g, meta, InfoMode::Partial);
    g.m.level = 1;
    return g.finish();
}

Fixture no_metadata(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    int variant = g.random() ? static_cast<int>(g.pick(3)) : 0;
    if (variant == 0) {
        g.b.trailer("Info", ref(g.add(PdfObject(Dictionary{}))));
    } else if (variant == 1) {
        Dictionary info;
        auto title = g.choice(kPhrases);
        info.set("Title", txt(title));
        g.m.info_fields["Title"] = title;
        g.b.trailer("Info", ref(g.add(PdfObject(std::move(info)))));
    }
    g.m.level = 3;
    return g.finish();
}

Fixture weak_exiftool(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    auto meta = g.random() ? g.random_meta() : table1_meta();
    if (meta.title.empty()) {
        meta.title = "Report";
    }
    auto info = put_info(g, meta, InfoMode::Full);
    g.m.orphans.insert(info);
    g.leak(FindingCategory::OrphanObject, info.str());
    g.m.weak_flags.insert("OrphanMetadataRecoverable");
    g.m.level = 2;
    auto f = g.finish();
    f.bytes = drop_info_reference(f.bytes);
    return f;
}

Fixture incremental(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    auto meta = g.random() ? g.random_meta() : table1_meta();
    meta.title = "Draft";
    auto info = put_info(g, meta, InfoMode::Full);

    g.b.new_revision();
    auto page = s.page_dict;
    page.set("Rotate", 0);
    g.put(s.page, PdfObject(std::move(page)));
    Meta next = meta;
    next.title = "Final";
    if (g.random() && g.coin()) {
        next.author = g.choice(kAuthors);
    }
    next.modified = g.random() ? g.pdf_date(2021) : "D:20190405091500+02'00'";
    Dictionary d;
    for (const auto& [k, v] : std::vector<std::pair<std::string, std::string>>{{"Title", next.title},
                                                                              {"Author", next.author},
                                                                              {"Creator", next.creator},
                                                                              {"Producer", next.producer},
                                                                              {"CreationDate", next.created},
                                                                              {"ModDate", next.modified}}) {
        d.set(k, txt(v));
        g.m.info_fields[k] = v;
    }
    g.put(info, PdfObject(std::move(d)));
    g.leak(FindingCategory::AuthorName, next.author);
    g.m.shadows = {s.page, info};
    g.leak(FindingCategory::ShadowObject, info.str());
    g.m.weak_flags = {"ShadowRevisionsPresent", "OrphanMetadataRecoverable"};
    g.m.level = 0;
    return g.finish();
}

// Adds an Info dictionary for `mode` and sets the level accordingly.
void with_info(Gen& g, InfoMode mode)
{
    if (mode != InfoMode::None) {
        put_info(g, g.random() ? g.random_meta() : table1_meta(), mode);
    }
    g.m.level = level_for(mode);
}

Fixture annotation(Gen& g, std::optional<InfoMode> forced)
{
    auto s = skeleton(g);
    ObjectId annot = g.random() ? g.b.allocate() : ObjectId{152, 1};
    ObjectId popup = g.random() ? g.b.allocate() : ObjectId{153, 1};
    std::string user = g.random() ? g.choice(kUsers) : "sab";
    std::string message = g.random() ? "changes made by " + g.choice(kAuthors) : "changes made by john doe";
    std::string when = g.random() ? g.pdf_date(g.between(2010, 2021)).substr(0, 16) : "D:20210225232546";
    bool wide = !g.random() || g.coin();

    Dictionary a;
    a.set("Type", PdfObject::name("Annot"));
    a.set("Rect", PdfObject(Array{real("165.897704918"), real("615.5800226116"), real("189.897704918"),
                                  real("639.5800226116")}));
    a.set("Subtype", PdfObject::name("Text"));
    a.set("M", txt(when));
    a.set("C", ints({1, 1, 0}));
    a.set("Popup", ref(popup));
    a.set("T", wide ? utf16(user) : txt(user));
    a.set("P", ref(s.page));
    a.set("Contents", wide ? utf16(message) : txt(message));
    g.put(annot, PdfObject(std::move(a)));

    Dictionary p;
    p.set("Type", PdfObject::name("Annot"));
    p.set("Subtype", PdfObject::name("Popup"));
    p.set("Rect", ints({612, 500, 792, 620}));
    p.set("Parent", ref(annot));
    p.set("Open", false);
    g.put(popup, PdfObject(std::move(p)));

    s.page_dict.set("Annots", PdfObject(Array{ref(annot), ref(popup)}));
    finish_skeleton(g, s);
    for (const auto& v : {user, message, when}) {
        g.leak(FindingCategory::Annotation, v);
    }
    g.m.weak_flags.insert("IdentifiersOutsideMetadata");
    with_info(g, forced.value_or(pick_mode(g, InfoMode::None)));
    return g.finish();
}

Fixture shadow_annotation(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    auto annot = g.b.allocate();
    std::string user = g.random() ? g.choice(kUsers) : "reviewer";
    std::string message = g.random() ? "see comments from " + g.choice(kAuthors) : "remove before publishing";
    Dictionary a;
    a.set("Type", PdfObject::name("Annot"));
    a.set("Subtype", PdfObject::name("Text"));
    a.set("Rect", ints({100, 100, 124, 124}));
    a.set("T", txt(user));
    a.set("Contents", txt(message));
    g.put(annot, PdfObject(std::move(a)));
    auto page = s.page_dict;
    s.page_dict.set("Annots", PdfObject(Array{ref(annot)}));
    finish_skeleton(g, s);

    g.b.new_revision();
    g.put(s.page, PdfObject(std::move(page)));
    g.put(annot, PdfObject(Null{}));

    g.m.shadows = {s.page, annot};
    g.m.orphans = {annot};
    g.leak(FindingCategory::Annotation, user);
    g.leak(FindingCategory::Annotation, message);
    g.leak(FindingCategory::ShadowObject, annot.str());
    g.m.weak_flags = {"ShadowRevisionsPresent", "IdentifiersOutsideMetadata"};
    g.m.level = 2;
    return g.finish();
}

Fixture path_alt(Gen& g, std::optional<InfoMode> forced)
{
    auto s = skeleton(g);
    ObjectId root = g.random() ? g.b.allocate() : ObjectId{19690, 0};
    ObjectId elem = g.random() ? g.b.allocate() : ObjectId{19693, 0};

    std::string path = "C:\\Users\\Mazhar\\Desktop\\scml.JPG";
    std::string user = "Mazhar";
    if (g.random()) {
        user = g.choice(kUsers);
        static const std::vector<std::string> files = {"scml.JPG", "figure1.png", "logo.tif", "IMG_0042.jpg"};
        static const std::vector<std::string> dirs = {"Desktop", "Pictures", "Documents\\Figures"};
        const auto& file = g.choice(files);
        auto dir = g.choice(dirs);
        switch (g.pick(4)) {
        case 0: path = "C:\\Users\\" + user + "\\" + dir + "\\" + file; break;
        case 1: path = "C:\\Documents and Settings\\" + user + "\\" + dir + "\\" + file; break;
        case 2:
            std::replace(dir.begin(), dir.end(), '\\', '/');
            path = "/home/" + user + "/" + dir + "/" + file;
            break;
        default:
            std::replace(dir.begin(), dir.end(), '\\', '/');
            path = "/Users/" + user + "/" + dir + "/" + file;
            break;
        }
    }

    Dictionary e;
    e.set("K", 29);
    e.set("P", ref(root));
    e.set("S", PdfObject::name("InlineShape"));
    e.set("Alt", txt("Description: " + path));
    e.set("Pg", ref(s.page));
    g.put(elem, PdfObject(std::move(e)));
    Dictionary r;
    r.set("Type", PdfObject::name("StructTreeRoot"));
    r.set("K", ref(elem));
    g.put(root, PdfObject(std::move(r)));

    Dictionary mark;
    mark.set("Marked", true);
    s.catalog_dict.set("MarkInfo", PdfObject(std::move(mark)));
    s.catalog_dict.set("StructTreeRoot", ref(root));
    finish_skeleton(g, s);

    g.leak(FindingCategory::Path, path);
    g.leak(FindingCategory::Username, user);
    g.m.weak_flags.insert("IdentifiersOutsideMetadata");
    with_info(g, forced.value_or(pick_mode(g, InfoMode::None)));
    return g.finish();
}

Fixture platform_object(Gen& g, std::optional<InfoMode> forced)
{
    auto s = skeleton(g);
    ObjectId cid = g.random() ? g.b.allocate() : ObjectId{15, 0};
    ObjectId descriptor = g.random() ? g.b.allocate() : ObjectId{23, 0};
    ObjectId platform = g.random() ? g.b.allocate() : ObjectId{1459, 0};
    ObjectId type0 = g.b.allocate();

    Dictionary csi;
    csi.set("Supplement", 0);
    csi.set("Registry", txt("Adobe"));
    csi.set("Ordering", txt("Identity"));
    Dictionary f;
    f.set("DW", 1000);
    f.set("CIDSystemInfo", PdfObject(std::move(csi)));
    f.set("Subtype", PdfObject::name("CIDFontType2"));
    f.set("BaseFont", PdfObject::name("CAFBBG+TimesNewRomanPSMT"));
    f.set("Type", PdfObject::name("Font"));
    f.set("FontDescriptor", ref(descriptor));
    f.set("W", PdfObject(Array{PdfObject(267), ints({610, 443}), PdfObject(284), ints({333})}));
    g.put(cid, PdfObject(std::move(f)));

    Dictionary fd;
    fd.set("Type", PdfObject::name("FontDescriptor"));
    fd.set("FontName", PdfObject::name("CAFBBG+TimesNewRomanPSMT"));
    fd.set("Flags", 6);
    fd.set("FontBBox", ints({-568, -216, 2046, 693}));
    fd.set("ItalicAngle", 0);
    fd.set("Ascent", 891);
    fd.set("Descent", -216);
    fd.set("CapHeight", 662);
    fd.set("StemV", 80);
    g.put(descriptor, PdfObject(std::move(fd)));

    Dictionary t0;
    t0.set("Type", PdfObject::name("Font"));
    t0.set("Subtype", PdfObject::name("Type0"));
    t0.set("BaseFont", PdfObject::name("CAFBBG+TimesNewRomanPSMT"));
    t0.set("Encoding", PdfObject::name("Identity-H"));
    t0.set("DescendantFonts", PdfObject(Array{ref(cid)}));
    g.put(type0, PdfObject(std::move(t0)));
    s.page_dict.find("Resources")->as_dict().find("Font")->as_dict().set("F2", ref(type0));

    std::string os = "Macintosh";
    std::string creator = "FileMaker Pro Advanced 14.0.1";
    std::string producer = "Adobe PDF Library 10.1; modified using iText 2.1.7 by 1T3XT";
    std::string created = "D:20180220152519+01'00'";
    std::string modified = "D:20180223153614+01'00'";
    if (g.random()) {
        static const std::vector<std::string> platforms = {"Macintosh", "Windows", "Linux", "Win32"};
        os = g.choice(platforms);
        auto meta = g.random_meta();
        creator = meta.creator;
        producer = meta.producer;
        created = meta.created;
        modified = meta.modified;
    }
    const std::string dli = "10.1.0.50";
    const std::string copyright =
        "Datalogics Interface (DLI) Copyright (C) 1998-2012 Datalogics, Inc. -- www.datalogics.com";
    Dictionary p;
    p.set("Platform", txt(os));
    p.set("Creator", txt(creator));
    p.set("DLI_Copyright", txt(copyright));
    p.set("Producer", txt(producer));
    p.set("Title", txt(""));
    p.set("Keywords", txt(""));
    p.set("ModDate", txt(modified));
    p.set("Subject", txt(""));
    p.set("DLI", txt(dli));
    p.set("Author", txt(""));
    p.set("CreationDate", txt(created));
    g.put(platform, PdfObject(std::move(p)));
    s.catalog_dict.set("DLIDocInfo", ref(platform));
    finish_skeleton(g, s);

    for (const auto& v : {os, creator, producer, dli, copyright}) {
        g.leak(FindingCategory::PlatformKey, v);
    }
    for (const auto& v : {"Adobe", "Identity", "CAFBBG+TimesNewRomanPSMT"}) {
        g.leak(FindingCategory::PlatformKey, v);
    }
    g.m.weak_flags.insert("IdentifiersOutsideMetadata");

    InfoMode mode = forced.value_or(pick_mode(g, InfoMode::Partial));
    if (mode == InfoMode::Partial && !g.random()) {
        Dictionary info;
        for (const auto& [k, v] : std::vector<std::pair<std::string, std::string>>{
                 {"Creator", creator}, {"Producer", producer}, {"CreationDate", created}, {"ModDate", modified}}) {
            info.set(k, txt(v));
            g.m.info_fields[k] = v;
        }
        g.b.trailer("Info", ref(g.add(PdfObject(std::move(info)))));
        g.m.level = 1;
    } else {
        with_info(g, mode);
    }
    return g.finish();
}

Fixture objstm_metadata(Gen& g, std::optional<InfoMode> forced)
{
    g.b.use_xref_stream();
    auto s = skeleton(g);
    finish_skeleton(g, s);
    InfoMode mode = forced.value_or(pick_mode(g, InfoMode::Full));
    auto meta = g.random() ? g.random_meta() : table1_meta();
    if (meta.title.empty()) {
        meta.title = "Packed";
    }
    ObjectId info;
    if (mode == InfoMode::None) {
        // Info-like dictionary inside the object stream, referenced by nothing.
        info = put_info(g, meta, InfoMode::Full, false);
        g.m.orphans.insert(info);
        g.leak(FindingCategory::OrphanObject, info.str());
        g.m.weak_flags.insert("OrphanMetadataRecoverable");
        g.m.level = 2;
    } else {
        info = put_info(g, meta, mode);
        g.m.level = level_for(mode);
    }
    g.b.pack({s.catalog, s.pages, info});
    return g.finish();
}

Fixture comment(Gen& g, std::optional<InfoMode> forced)
{
    auto s = skeleton(g, "% 100% inside a content stream is not a file comment\n");
    static const std::vector<std::string> lines = {"% internal draft v3 jdoe", "% reviewed by legal k.smith",
                                                   "% build 2291 on WS-0231", "% TODO remove before release"};
    std::vector<std::string> chosen = {"% internal draft v3 jdoe"};
    if (g.random()) {
        chosen = {g.choice(lines)};
        if (g.coin()) {
            chosen.push_back(g.choice(lines));
        }
    }
    finish_skeleton(g, s);
    for (const auto& line : chosen) {
        g.b.comment(line);
        g.leak(FindingCategory::Comment, line);
    }
    with_info(g, forced.value_or(pick_mode(g, InfoMode::None)));
    return g.finish();
}

Fixture script(Gen& g, std::optional<InfoMode> forced)
{
    auto s = skeleton(g);
    static const std::vector<std::string> scripts = {"app.alert('hi')", "this.print({bUI: false})",
                                                     "app.launchURL('http://tracker.example/p.gif', true)",
                                                     "console.println('opened')"};
    std::string js = g.random() ? g.choice(scripts) : "app.alert('hi')";
    Dictionary action;
    action.set("Type", PdfObject::name("Action"));
    action.set("S", PdfObject::name("JavaScript"));
    action.set("JS", txt(js));
    auto id = g.add(PdfObject(std::move(action)));
    int where = g.random() ? static_cast<int>(g.pick(3)) : 0;
    if (where == 0) {
        s.catalog_dict.set("OpenAction", ref(id));
    } else if (where == 1) {
        Dictionary tree;
        tree.set("Names", PdfObject(Array{txt("init"), ref(id)}));
        Dictionary names;
        names.set("JavaScript", PdfObject(std::move(tree)));
        s.catalog_dict.set("Names", PdfObject(std::move(names)));
    } else {
        Dictionary aa;
        aa.set("O", ref(id));
        s.page_dict.set("AA", PdfObject(std::move(aa)));
    }
    finish_skeleton(g, s);
    g.leak(FindingCategory::Script, js);
    with_info(g, forced.value_or(pick_mode(g, InfoMode::None)));
    return g.finish();
}

Fixture attachment(Gen& g, std::optional<InfoMode> forced)
{
    auto s = skeleton(g);
    static const std::vector<std::string> files = {"notes.txt", "budget.xlsx", "source.docx", "contacts.csv"};
    std::string file = g.random() ? g.choice(files) : "notes.txt";
    Stream data;
    data.dict.set("Type", PdfObject::name("EmbeddedFile"));
    data.data = "attached data for " + file + "\n";
    auto data_id = g.add(PdfObject(std::move(data)));
    Dictionary ef;
    ef.set("F", ref(data_id));
    Dictionary spec;
    spec.set("Type", PdfObject::name("Filespec"));
    spec.set("F", txt(file));
    spec.set("UF", txt(file));
    spec.set("EF", PdfObject(std::move(ef)));
    auto spec_id = g.add(PdfObject(std::move(spec)));
    Dictionary tree;
    tree.set("Names", PdfObject(Array{txt(file), ref(spec_id)}));
    Dictionary names;
    names.set("EmbeddedFiles", PdfObject(std::move(tree)));
    s.catalog_dict.set("Names", PdfObject(std::move(names)));
    finish_skeleton(g, s);
    g.leak(FindingCategory::EmbeddedFile, file);
    with_info(g, forced.value_or(pick_mode(g, InfoMode::None)));
    return g.finish();
}

Fixture email(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    static const std::vector<std::string> addresses = {"a.b@agency.gov", "press@ministry.example.org",
                                                       "j.smith@defence.example", "helpdesk@customs.example.hk"};
    std::string address = g.random() ? g.choice(addresses) : "a.b@agency.gov";
    Dictionary info;
    info.set("TagAuthorEmail", txt(address));
    g.m.info_fields["TagAuthorEmail"] = address;
    g.leak(FindingCategory::Email, address);
    g.m.level = 2;
    if (g.random() && g.coin()) {
        auto name = g.choice(kAuthors);
        info.set("TagAuthorEmailDisplayName", txt(name));
        g.m.info_fields["TagAuthorEmailDisplayName"] = name;
        g.leak(FindingCategory::AuthorName, name);
    }
    if (g.random() && g.coin()) {
        auto producer = g.choice(kTools).producer;
        info.set("Producer", txt(producer));
        g.m.info_fields["Producer"] = producer;
        g.m.level = 1;
    }
    g.b.trailer("Info", ref(g.add(PdfObject(std::move(info)))));
    return g.finish();
}

std::string xml_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

// "D:20190404131651+02'00'" -> "2019-04-04T13:16:51+02:00"
std::string xmp_date(std::string_view pdf)
{
    std::string d(pdf.substr(2));
    std::string out = d.substr(0, 4) + "-" + d.substr(4, 2) + "-" + d.substr(6, 2) + "T" + d.substr(8, 2) + ":" +
                      d.substr(10, 2) + ":" + d.substr(12, 2);
    std::string tz = d.substr(14);
    if (tz == "Z") {
        return out + "Z";
    }
    return out + tz.substr(0, 3) + ":" + tz.substr(4, 2);
}

Fixture xmp_metadata(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    auto meta = g.random() ? g.random_meta() : table1_meta();
    if (meta.title.empty()) {
        meta.title = "Report";
    }
    std::string xmp = "<?xpacket begin=\"\xEF\xBB\xBF\" id=\"W5M0MpCehiHzreSzNTczkc9d\"?>\n"
                      "<x:xmpmeta xmlns:x=\"adobe:ns:meta/\">\n"
                      "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">\n"
                      "<rdf:Description rdf:about=\"\" xmlns:dc=\"http://purl.org/dc/elements/1.1/\" "
                      "xmlns:xmp=\"http://ns.adobe.com/xap/1.0/\" xmlns:pdf=\"http://ns.adobe.com/pdf/1.3/\">\n";
    xmp += "<dc:creator><rdf:Seq><rdf:li>" + xml_escape(meta.author) + "</rdf:li></rdf:Seq></dc:creator>\n";
    xmp += "<dc:title><rdf:Alt><rdf:li xml:lang=\"x-default\">" + xml_escape(meta.title) +
           "</rdf:li></rdf:Alt></dc:title>\n";
    xmp += "<xmp:CreatorTool>" + xml_escape(meta.creator) + "</xmp:CreatorTool>\n";
    xmp += "<xmp:CreateDate>" + xmp_date(meta.created) + "</xmp:CreateDate>\n";
    xmp += "<xmp:ModifyDate>" + xmp_date(meta.modified) + "</xmp:ModifyDate>\n";
    xmp += "<pdf:Producer>" + xml_escape(meta.producer) + "</pdf:Producer>\n";
    xmp += "</rdf:Description>\n</rdf:RDF>\n</x:xmpmeta>\n<?xpacket end=\"w\"?>";
    Stream m;
    m.dict.set("Type", PdfObject::name("Metadata"));
    m.dict.set("Subtype", PdfObject::name("XML"));
    m.data = std::move(xmp);
    auto id = g.add(PdfObject(std::move(m)));
    s.catalog_dict.set("Metadata", ref(id));
    finish_skeleton(g, s);
    g.leak(FindingCategory::AuthorName, meta.author);
    g.m.level = 0;
    return g.finish();
}

Fixture hardware_brand(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g);
    finish_skeleton(g, s);
    struct Case {
        std::string author;
        std::string brand;
    };
    static const std::vector<Case> authors = {
        {"TOSHIBA", "Toshiba"}, {"DELL-PC", "DELL"}, {"Lenovo User", "Lenovo"}, {"hp", "HP"}};
    static const std::vector<Case> creators = {
        {"HP Smart Scan", "HP"}, {"Microsoft Word 2010", ""}, {"Toshiba e-STUDIO Scan", "Toshiba"}};
    Case a = authors[0];
    Case c = creators[0];
    if (g.random()) {
        a = g.choice(authors);
        c = g.choice(creators);
    }
    std::string producer = "Adobe PDF Library 9.0";
    Dictionary info;
    info.set("Author", txt(a.author));
    info.set("Creator", txt(c.author));
    info.set("Producer", txt(producer));
    g.m.info_fields = {{"Author", a.author}, {"Creator", c.author}, {"Producer", producer}};
    g.b.trailer("Info", ref(g.add(PdfObject(std::move(info)))));
    g.leak(FindingCategory::AuthorName, a.author);
    g.leak(FindingCategory::HardwareBrand, a.brand);
    if (!c.brand.empty()) {
        g.leak(FindingCategory::HardwareBrand, c.brand);
    }
    g.m.level = 1;
    return g.finish();
}

Fixture adversarial_strings(Gen& g, std::optional<InfoMode>)
{
    auto s = skeleton(g, "BT /F1 10 Tf 72 700 Td (9 0 obj << >> endobj) Tj ET\n");
    finish_skeleton(g, s);
    Dictionary info;
    std::string title = "100% of 12 0 obj (nested) endobj";
    std::string subject = "stream endstream 13 0 obj";
    info.set("Title", txt(title));
    info.set("Subject", txt(subject));
    g.m.info_fields = {{"Title", title}, {"Subject", subject}};
    g.b.trailer("Info", ref(g.add(PdfObject(std::move(info)))));
    g.m.level = 3;
    return g.finish();
}

using Maker = std::function<Fixture(Gen&, std::optional<InfoMode>)>;

const std::vector<std::pair<std::string, Maker>>& makers()
{
    static const std::vector<std::pair<std::string, Maker>> table = {
        {"minimal", minimal},
        {"full-metadata", full_metadata},
        {"partial-metadata", partial_metadata},
        {"no-metadata", no_metadata},
        {"weak-exiftool", weak_exiftool},
        {"incremental", incremental},
        {"annotation", annotation},
        {"shadow-annotation", shadow_annotation},
        {"path-alt", path_alt},
        {"platform-object", platform_object},
        {"objstm-metadata", objstm_metadata},
        {"comment", comment},
        {"script", script},
        {"attachment", attachment},
        {"email", email},
        {"xmp-metadata", xmp_metadata},
        {"hardware-brand", hardware_brand},
        {"adversarial-strings", adversarial_strings},
    };
    return table;
}

Fixture build(std::string_view family, std::uint64_t seed, std::optional<InfoMode> mode)
{
    for (const auto& [name, make] : makers()) {
        if (name == family) {
            Gen g(family, seed);
            return make(g, mode);
        }
    }
    throw std::invalid_argument("unknown fixture family '" + std::string(family) + "'");
}

} // namespace

const std::vector<std::string>& family_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, make] : makers()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

Fixture make_fixture(std::string_view family, std::uint64_t seed) { return build(family, seed, std::nullopt); }

std::vector<Fixture> all_families()
{
    std::vector<Fixture> out;
    for (const auto& name : family_names()) {
        out.push_back(make_fixture(name, 0));
    }
    return out;
}

std::vector<Fixture> sanitizer_corpus(std::size_t per_family, std::uint64_t seed)
{
    std::vector<Fixture> out;
    for (const auto& name : family_names()) {
        for (std::size_t i = 0; i < per_family; ++i) {
            out.push_back(make_fixture(name, seed + i));
        }
    }
    return out;
}

std::string drop_info_reference(std::string_view bytes)
{
    static const std::regex info(R"(/Info\s+\d+\s+\d+\s+R)");
    std::string out(bytes);
    for (std::sregex_iterator it(out.begin(), out.end(), info), end; it != end; ++it) {
        std::fill(out.begin() + it->position(), out.begin() + it->position() + it->length(), ' ');
    }
    return out;
}

Fixture random_full_metadata(std::uint64_t seed) { return make_fixture("full-metadata", seed == 0 ? 1 : seed); }

std::vector<Fixture> level_corpus(std::uint64_t seed)
{
    struct Slot {
        const char* family;
        std::optional<InfoMode> mode;
    };
    const std::vector<std::pair<int, std::vector<Slot>>> plan = {
        {41,
         {{"full-metadata", {}},
          {"xmp-metadata", {}},
          {"incremental", {}},
          {"objstm-metadata", InfoMode::Full},
          {"annotation", InfoMode::Full},
          {"comment", InfoMode::Full},
          {"path-alt", InfoMode::Full}}},
        {35,
         {{"partial-metadata", {}},
          {"platform-object", InfoMode::Partial},
          {"hardware-brand", {}},
          {"annotation", InfoMode::Partial},
          {"script", InfoMode::Partial},
          {"attachment", InfoMode::Partial}}},
        {16,
         {{"weak-exiftool", {}},
          {"annotation", InfoMode::None},
          {"shadow-annotation", {}},
          {"path-alt", InfoMode::None},
          {"comment", InfoMode::None},
          {"script", InfoMode::None},
          {"attachment", InfoMode::None},
          {"objstm-metadata", InfoMode::None}}},
        {8, {{"minimal", {}}, {"no-metadata", {}}, {"adversarial-strings", {}}}},
    };
    std::vector<Fixture> out;
    std::uint64_t s = seed;
    for (const auto& [count, slots] : plan) {
        for (int i = 0; i < count; ++i) {
            const auto& slot = slots[static_cast<std::size_t>(i) % slots.size()];
            auto f = build(slot.family, ++s, slot.mode);
            char buf[16];
            std::snprintf(buf, sizeof buf, "level-%03zu-", out.size());
            f.manifest.id = buf + f.manifest.id;
            f.name = f.manifest.id + ".pdf";
            out.push_back(std::move(f));
        }
    }
    return out;
}

namespace {

// One file of a population: Info with author, tool and a creation date in `year`.
Fixture population_file(const std::string& group, const std::string& author, const std::string& profile,
                        const Tool& tool, int year, std::size_t index)
{
    Gen g("population", index + 1);
    auto s = skeleton(g);
    finish_skeleton(g, s);
    Meta meta{"Publication " + std::to_string(index), author, tool.creator, tool.producer, g.pdf_date(year), ""};
    meta.modified = meta.created;
    put_info(g, meta, InfoMode::Full);
    g.m.level = 0;
    g.m.group = group;
    g.m.author = author;
    g.m.profile = profile;
    char buf[64];
    std::snprintf(buf, sizeof buf, "population-%04zu", index);
    g.m.id = buf;
    return g.finish();
}

} // namespace

std::vector<Fixture> population_corpus(const PopulationSpec& spec, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto between = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    static const std::vector<std::string> first = {"Ana", "Ben", "Chen", "Dara", "Emil", "Fatima", "Goran", "Hana"};
    static const std::vector<std::string> last = {"Silva", "Okafor", "Lindqvist", "Petrov", "Yamada", "Costa"};
    static const std::vector<std::string> versions = {"7.0.5", "8.0.0", "8.2.5", "9.4.0", "10.1.0", "11.0"};

    std::vector<Fixture> out;
    int author_index = 0;
    auto next_author = [&] {
        int i = author_index++;
        return first[static_cast<std::size_t>(i) % first.size()] + " " +
               last[static_cast<std::size_t>(i / static_cast<int>(first.size())) % last.size()];
    };
    auto emit = [&](const std::string& author, const char* profile, const Tool& tool, int year) {
        out.push_back(population_file(spec.group, author, profile, tool, year, out.size()));
    };

    for (int i = 0; i < spec.profile1; ++i) {
        auto author = next_author();
        int year = between(2008, 2012);
        int steps = between(2, 4);
        std::size_t v = static_cast<std::size_t>(between(0, 1));
        for (int k = 0; k < steps; ++k, ++year, ++v) {
            Tool tool{"PScript5.dll Version 5.2.2", "Acrobat Distiller " + versions[v] + " (Windows)"};
            for (int n = between(1, 2); n > 0; --n) {
                emit(author, "Profile-1", tool, year);
            }
        }
    }
    for (int i = 0; i < spec.profile2; ++i) {
        auto author = next_author();
        int year = between(2012, 2016);
        emit(author, "Profile-2", Tool{"Microsoft Word 2010", "Microsoft Word 2010"}, year);
        emit(author, "Profile-2", Tool{"Writer", "LibreOffice 6.0"}, year + between(1, 3));
    }
    for (int i = 0; i < spec.profile3; ++i) {
        auto author = next_author();
        int year = between(2010, 2015);
        int span = between(2, 5);
        Tool tool{"Microsoft\u00AE Office Word 2007", "Microsoft\u00AE Office Word 2007"};
        emit(author, "Profile-3", tool, year);
        emit(author, "Profile-3", tool, year + span);
        if (rng() & 1) {
            emit(author, "Profile-3", tool, year + between(0, span));
        }
    }
    return out;
}

std::vector<Fixture> author_history_corpus()
{
    struct Batch {
        const char* group;
        const char* author;
        const char* profile;
        std::string producer;
        std::vector<std::pair<int, int>> years; // (year, files)
    };
    const std::vector<Batch> batches = {
        {"fia.gov.pk", "Author-X", "Profile-3", "Microsoft\u00AE Office Word 2007",
         {{2014, 5}, {2015, 5}, {2016, 5}, {2017, 5}, {2018, 5}, {2019, 4}}},
        {"defensa.gob.es", "Author-Y", "Profile-1", "Acrobat Distiller 7.0.5 (Windows)", {{2010, 4}}},
        {"defensa.gob.es", "Author-Y", "Profile-1", "Acrobat Distiller 8.0.0 (Windows)", {{2011, 1}}},
        {"defensa.gob.es", "Author-Y", "Profile-1", "Acrobat Distiller 8.2.5 (Windows)",
         {{2011, 2}, {2012, 3}, {2013, 2}, {2014, 2}}},
        {"defensa.gob.es", "Author-Y", "Profile-1", "Acrobat Distiller 10.1.0 (Windows)", {{2014, 10}, {2015, 16}}},
        {"defensa.gob.es", "Author-Y", "Profile-1", "Acrobat Distiller 11.0 (Windows)", {{2017, 2}, {2018, 1}}},
        {"customs.gov.hk", "Author-Z", "Profile-2", "Adobe Acrobat 11.0.20", {{2017, 1}}},
        {"customs.gov.hk", "Author-Z", "Profile-2", "Adobe Acrobat 11.0.0", {{2018, 1}}},
        {"customs.gov.hk", "Author-Z", "Profile-2", "PDFCreator 2.1.2.0", {{2019, 3}}},
        {"customs.gov.hk", "Author-Z", "Profile-2", "PDFCreator 3.2.2.13517", {{2019, 2}}},
        {"customs.gov.hk", "Author-Z", "Profile-2", "Adobe Acrobat Standard 2017 17.11.30150",
         {{2019, 1}, {2020, 1}}},
    };
    std::vector<Fixture> out;
    for (const auto& b : batches) {
        for (const auto& [year, files] : b.years) {
            for (int i = 0; i < files; ++i) {
                auto f = population_file(b.group, b.author, b.profile, Tool{b.producer, b.producer}, year, out.size());
                f.manifest.id = "history-" + f.manifest.id.substr(std::string("population-").size());
                f.name = f.manifest.id + ".pdf";
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

void write_fixtures(const std::vector<Fixture>& fixtures, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    for (const auto& f : fixtures) {
        std::ofstream pdf(dir / f.name, std::ios::binary);
        pdf.write(f.bytes.data(), static_cast<std::streamsize>(f.bytes.size()));
        std::ofstream manifest(dir / (f.manifest.id + ".json"));
        manifest << f.manifest.to_json().dump(2) << '\n';
        if (!pdf || !manifest) {
            throw std::runtime_error("cannot write fixture " + f.name + " to " + dir.string());
        }
    }
}

} // namespace pdffoot::testkit
