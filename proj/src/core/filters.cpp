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

#include "pdffoot/filters.hpp"

#include "pdffoot/errors.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace pdffoot {

namespace {

std::string inflate_with(std::string_view data, int window_bits, bool& ok, std::string& error)
{
    z_stream zs{};
    ok = false;
    if (inflateInit2(&zs, window_bits) != Z_OK) {
        error = "inflateInit failed";
        return {};
    }
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    std::string out;
    char buf[16384];
    int rc = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf);
        zs.avail_out = sizeof buf;
        rc = inflate(&zs, Z_NO_FLUSH);
        out.append(buf, sizeof buf - zs.avail_out);
        if (rc == Z_BUF_ERROR && zs.avail_in == 0) {
            // truncated input: keep what we have
            break;
        }
    } while (rc == Z_OK);
    inflateEnd(&zs);
    if (rc == Z_STREAM_END) {
        ok = true;
    } else {
        error = zs.msg ? zs.msg : "inflate error " + std::to_string(rc);
    }
    return out;
}

int paeth(int a, int b, int c)
{
    int p = a + b - c;
    int pa = std::abs(p - a);
    int pb = std::abs(p - b);
    int pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) {
        return a;
    }
    return pb <= pc ? b : c;
}

std::string apply_predictor(std::string data, const Dictionary* parms)
{
    if (!parms) {
        return data;
    }
    std::int64_t predictor = parms->integer("Predictor").value_or(1);
    if (predictor <= 1) {
        return data;
    }
    std::int64_t colors = parms->integer("Colors").value_or(1);
    std::int64_t bpc = parms->integer("BitsPerComponent").value_or(8);
    std::int64_t columns = parms->integer("Columns").value_or(1);
    if (colors < 1 || bpc < 1 || columns < 1 || colors * bpc * columns > (1 << 24)) {
        throw CorruptStream("bad predictor parameters", data);
    }
    std::size_t bpp = static_cast<std::size_t>((colors * bpc + 7) / 8);
    std::size_t row = static_cast<std::size_t>((colors * bpc * columns + 7) / 8);

    if (predictor == 2) {
        if (bpc != 8) {
            throw CorruptStream("TIFF predictor only supported for 8 bits per component", data);
        }
        for (std::size_t r = 0; r + row <= data.size(); r += row) {
            for (std::size_t i = bpp; i < row; ++i) {
                data[r + i] = static_cast<char>(data[r + i] + data[r + i - bpp]);
            }
        }
        return data;
    }

    std::string out;
    std::vector<unsigned char> prev(row, 0);
    std::vector<unsigned char> cur(row, 0);
    std::size_t pos = 0;
    while (pos < data.size()) {
        int type = static_cast<unsigned char>(data[pos++]);
        std::size_t n = std::min(row, data.size() - pos);
        for (std::size_t i = 0; i < row; ++i) {
            cur[i] = i < n ? static_cast<unsigned char>(data[pos + i]) : 0;
        }
        pos += n;
        for (std::size_t i = 0; i < row; ++i) {
            int left = i >= bpp ? cur[i - bpp] : 0;
            int up = prev[i];
            int upleft = i >= bpp ? prev[i - bpp] : 0;
            switch (type) {
            case 0: break;
            case 1: cur[i] = static_cast<unsigned char>(cur[i] + left); break;
            case 2: cur[i] = static_cast<unsigned char>(cur[i] + up); break;
            case 3: cur[i] = static_cast<unsigned char>(cur[i] + (left + up) / 2); break;
            case 4: cur[i] = static_cast<unsigned char>(cur[i] + paeth(left, up, upleft)); break;
            default: throw CorruptStream("bad PNG predictor type " + std::to_string(type), out);
            }
        }
        out.append(reinterpret_cast<const char*>(cur.data()), n);
        prev.swap(cur);
    }
    return out;
}

std::vector<std::string> filter_names(const Dictionary& dict)
{
    std::vector<std::string> names;
    const auto* f = dict.find("Filter");
    if (!f) {
        return names;
    }
    if (f->is_name()) {
        names.push_back(f->as_name());
    } else if (f->is_array()) {
        for (const auto& item : f->as_array()) {
            if (item.is_name()) {
                names.push_back(item.as_name());
            }
        }
    }
    return names;
}

const Dictionary* decode_parms(const Dictionary& dict, std::size_t index)
{
    const auto* p = dict.find("DecodeParms");
    if (!p) {
        p = dict.find("DP");
    }
    if (!p) {
        return nullptr;
    }
    if (p->is_dict()) {
        return index == 0 ? &p->as_dict() : nullptr;
    }
    if (p->is_array() && index < p->as_array().size() && p->as_array()[index].is_dict()) {
        return &p->as_array()[index].as_dict();
    }
    return nullptr;
}

} // namespace

std::string flate_decode(std::string_view data)
{
    bool ok = false;
    std::string error;
    std::string out = inflate_with(data, 15, ok, error);
    if (ok) {
        return out;
    }
    // Some writers omit the zlib header; retry as raw deflate.
    bool raw_ok = false;
    std::string raw_error;
    std::string raw = inflate_with(data, -15, raw_ok, raw_error);
    if (raw_ok) {
        return raw;
    }
    throw CorruptStream(error, raw.size() > out.size() ? raw : out);
}

std::string flate_encode(std::string_view data)
{
    uLongf bound = compressBound(static_cast<uLong>(data.size()));
    std::string out(bound, '\0');
    if (compress2(reinterpret_cast<Bytef*>(out.data()), &bound, reinterpret_cast<const Bytef*>(data.data()),
                  static_cast<uLong>(data.size()), Z_BEST_COMPRESSION) != Z_OK) {
        throw Error(ErrorCode::CorruptStream, "compress failed");
    }
    out.resize(bound);
    return out;
}

std::string ascii_hex_decode(std::string_view data)
{
    std::string out;
    int hi = -1;
    for (char c : data) {
        if (c == '>') {
            break;
        }
        int v = -1;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else if (c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0') {
            continue;
        } else {
            throw CorruptStream("bad ASCIIHex digit", out);
        }
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<char>((hi << 4) | v));
            hi = -1;
        }
    }
    if (hi >= 0) {
        out.push_back(static_cast<char>(hi << 4));
    }
    return out;
}

std::string decode_stream(const Stream& stream)
{
    auto names = filter_names(stream.dict);
    std::string data = stream.data;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& name = names[i];
        if (name == "FlateDecode" || name == "Fl") {
            data = apply_predictor(flate_decode(data), decode_parms(stream.dict, i));
        } else if (name == "ASCIIHexDecode" || name == "AHx") {
            data = ascii_hex_decode(data);
        } else {
            throw UnsupportedFilter(name);
        }
    }
    return data;
}

} // namespace pdffoot
