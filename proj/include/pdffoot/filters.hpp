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

#ifndef PDFFOOT_FILTERS_HPP
#define PDFFOOT_FILTERS_HPP

#include "pdffoot/object.hpp"

#include <string>
#include <string_view>

namespace pdffoot {

/// Applies the stream's /Filter chain. Supports FlateDecode (with PNG/TIFF
/// predictors), ASCIIHexDecode and no filter.
///
/// Throws UnsupportedFilter naming the first filter outside that set, and
/// CorruptStream when inflation fails.
std::string decode_stream(const Stream& stream);

std::string flate_decode(std::string_view data);
std::string flate_encode(std::string_view data);
std::string ascii_hex_decode(std::string_view data);

} // namespace pdffoot

#endif
