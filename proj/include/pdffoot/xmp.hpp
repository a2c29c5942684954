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

#ifndef PDFFOOT_XMP_HPP
#define PDFFOOT_XMP_HPP

#include <string>
#include <string_view>
#include <vector>

namespace pdffoot {

struct XmpProperty {
    std::string name; // qualified, e.g. "pdf:Producer"
    std::string value;
};

struct XmpPacket {
    std::vector<XmpProperty> properties;
    /// The packet was not well-formed; properties came from pattern salvage.
    bool salvaged = false;
    std::string error;
};

/// Reads the simple and array-valued properties of every rdf:Description.
/// Array items are joined with "; ". Never throws.
XmpPacket parse_xmp(std::string_view xml);

/// Replaces the five predefined entities and numeric character references.
std::string xml_unescape(std::string_view s);

} // namespace pdffoot

#endif
