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

#include "pdffoot/xmp.hpp"

#include "pdffoot/text.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

namespace pdffoot {

std::string xml_unescape(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '&') {
            out.push_back(s[i]);
            continue;
        }
        auto semi = s.find(';', i);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back('&');
            continue;
        }
        std::string_view ent = s.substr(i + 1, semi - i - 1);
        if (ent == "amp") {
            out.push_back('&');
        } else if (ent == "lt") {
            out.push_back('<');
        } else if (ent == "gt") {
            out.push_back('>');
        } else if (ent == "quot") {
            out.push_back('"');
        } else if (ent == "apos") {
            out.push_back('\'');
        } else if (ent.size() > 1 && ent[0] == '#') {
            char32_t cp = 0;
            bool hex = ent[1] == 'x' || ent[1] == 'X';
            bool ok = ent.size() > (hex ? 2u : 1u);
            for (std::size_t k = hex ? 2 : 1; k < ent.size() && ok; ++k) {
                char c = ent[k];
                int d = -1;
                if (c >= '0' && c <= '9') {
                    d = c - '0';
                } else if (hex && c >= 'a' && c <= 'f') {
                    d = c - 'a' + 10;
                } else if (hex && c >= 'A' && c <= 'F') {
                    d = c - 'A' + 10;
                }
                if (d < 0 || cp > 0x10FFFF) {
                    ok = false;
                } else {
                    cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(d);
                }
            }
            if (!ok || cp > 0x10FFFF) {
                out.push_back('&');
                continue;
            }
            append_utf8(out, cp);
        } else {
            out.push_back('&');
            continue;
        }
        i = semi;
    }
    return out;
}

namespace {

struct Frame {
    std::string name;
    bool property = false;
    std::string text;
    std::vector<std::string> items;
};

struct Attribute {
    std::string name;
    std::string value;
};

bool name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_' || c == '-' || c == '.' ||
           static_cast<unsigned char>(c) >= 0x80;
}

class XmlReader {
public:
    explicit XmlReader(std::string_view xml) : xml_(xml) {}

    XmpPacket run()
    {
        XmpPacket packet;
        std::size_t pos = 0;
        while (pos < xml_.size()) {
            auto lt = xml_.find('<', pos);
            if (lt == std::string_view::npos) {
                text(xml_.substr(pos));
                break;
            }
            text(xml_.substr(pos, lt - pos));
            pos = tag(lt, packet);
        }
        if (!stack_.empty()) {
            throw std::runtime_error("unclosed element <" + stack_.back().name + ">");
        }
        return packet;
    }

private:
    void text(std::string_view t)
    {
        if (!stack_.empty() && !t.empty()) {
            stack_.back().text += xml_unescape(t);
        }
    }

    std::size_t skip_to(std::size_t pos, std::string_view terminator)
    {
        auto e = xml_.find(terminator, pos);
        if (e == std::string_view::npos) {
            throw std::runtime_error("unterminated markup");
        }
        return e + terminator.size();
    }

    std::size_t tag(std::size_t lt, XmpPacket& packet)
    {
        std::string_view rest = xml_.substr(lt);
        if (rest.substr(0, 4) == "<!--") {
            return skip_to(lt + 4, "-->");
        }
        if (rest.substr(0, 9) == "<![CDATA[") {
            std::size_t end = skip_to(lt + 9, "]]>");
            if (!stack_.empty()) {
                stack_.back().text += std::string(xml_.substr(lt + 9, end - 3 - (lt + 9)));
            }
            return end;
        }
        if (rest.substr(0, 2) == "<?") {
            return skip_to(lt + 2, "?>");
        }
        if (rest.substr(0, 2) == "<!") {
            return skip_to(lt + 2, ">");
        }
        if (rest.substr(0, 2) == "</") {
            std::size_t p = lt + 2;
            std::size_t s = p;
            while (p < xml_.size() && name_char(xml_[p])) {
                ++p;
            }
            std::string name(xml_.substr(s, p - s));
            std::size_t end = skip_to(p, ">");
            if (stack_.empty() || stack_.back().name != name) {
                throw std::runtime_error("mismatched </" + name + ">");
            }
            close(packet);
            return end;
        }
        std::size_t p = lt + 1;
        std::size_t s = p;
        while (p < xml_.size() && name_char(xml_[p])) {
            ++p;
        }
        if (p == s) {
            throw std::runtime_error("bad tag");
        }
        std::string name(xml_.substr(s, p - s));
        std::vector<Attribute> attrs;
        bool empty = false;
        while (true) {
            while (p < xml_.size() && std::isspace(static_cast<unsigned char>(xml_[p]))) {
                ++p;
            }
            if (p >= xml_.size()) {
                throw std::runtime_error("unterminated tag <" + name + ">");
            }
            if (xml_[p] == '>') {
                ++p;
                break;
            }
            if (xml_[p] == '/' && p + 1 < xml_.size() && xml_[p + 1] == '>') {
                p += 2;
                empty = true;
                break;
            }
            std::size_t an = p;
            while (p < xml_.size() && name_char(xml_[p])) {
                ++p;
            }
            if (p == an) {
                throw std::runtime_error("bad attribute in <" + name + ">");
            }
            std::string aname(xml_.substr(an, p - an));
            while (p < xml_.size() && std::isspace(static_cast<unsigned char>(xml_[p]))) {
                ++p;
            }
            if (p >= xml_.size() || xml_[p] != '=') {
                throw std::runtime_error("attribute without value in <" + name + ">");
            }
            ++p;
            while (p < xml_.size() && std::isspace(static_cast<unsigned char>(xml_[p]))) {
                ++p;
            }
            if (p >= xml_.size() || (xml_[p] != '"' && xml_[p] != '\'')) {
                throw std::runtime_error("unquoted attribute in <" + name + ">");
            }
            char q = xml_[p++];
            auto close_q = xml_.find(q, p);
            if (close_q == std::string_view::npos) {
                throw std::runtime_error("unterminated attribute");
            }
            attrs.push_back({aname, xml_unescape(xml_.substr(p, close_q - p))});
            p = close_q + 1;
        }
        open(name, attrs, packet);
        if (empty) {
            close(packet);
        }
        return p;
    }

    void open(const std::string& name, const std::vector<Attribute>& attrs, XmpPacket& packet)
    {
        Frame f;
        f.name = name;
        f.property = !stack_.empty() && stack_.back().name == "rdf:Description";
        if (name == "rdf:Description") {
            for (const auto& a : attrs) {
                if (a.name.rfind("xmlns", 0) == 0 || a.name.rfind("rdf:", 0) == 0 || a.name.rfind("xml:", 0) == 0) {
                    continue;
                }
                if (!trim(a.value).empty()) {
                    packet.properties.push_back({a.name, std::string(trim(a.value))});
                }
            }
        }
        stack_.push_back(std::move(f));
    }

    void close(XmpPacket& packet)
    {
        Frame f = std::move(stack_.back());
        stack_.pop_back();
        if (f.name == "rdf:li") {
            for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
                if (it->property) {
                    auto v = trim(f.text);
                    if (!v.empty()) {
                        it->items.emplace_back(v);
                    }
                    break;
                }
            }
            return;
        }
        if (!f.property) {
            return;
        }
        std::string value;
        if (!f.items.empty()) {
            for (std::size_t i = 0; i < f.items.size(); ++i) {
                if (i) {
                    value += "; ";
                }
                value += f.items[i];
            }
        } else {
            value = std::string(trim(f.text));
        }
        if (!value.empty()) {
            packet.properties.push_back({f.name, value});
        }
    }

    std::string_view xml_;
    std::vector<Frame> stack_;
};

XmpPacket salvage(std::string_view xml)
{
    XmpPacket packet;
    packet.salvaged = true;
    static const std::regex simple(R"(<([A-Za-z][\w.-]*:[A-Za-z][\w.-]*)(?:\s[^>]*)?>([^<]*)</\1>)");
    static const std::regex array(
        R"(<([A-Za-z][\w.-]*:[A-Za-z][\w.-]*)>\s*<rdf:(?:Seq|Bag|Alt)>\s*<rdf:li[^>]*>([^<]*)</rdf:li>)");
    std::string s(xml);
    for (const auto* re : {&array, &simple}) {
        for (std::sregex_iterator it(s.begin(), s.end(), *re), end; it != end; ++it) {
            std::string name = (*it)[1];
            if (name.rfind("rdf:", 0) == 0 || name.rfind("x:", 0) == 0) {
                continue;
            }
            auto value = xml_unescape(trim((*it)[2].str()));
            if (!value.empty()) {
                packet.properties.push_back({name, value});
            }
        }
    }
    return packet;
}

} // namespace

XmpPacket parse_xmp(std::string_view xml)
{
    try {
        return XmlReader(xml).run();
    } catch (const std::exception& e) {
        auto packet = salvage(xml);
        packet.error = e.what();
        return packet;
    }
}

} // namespace pdffoot
