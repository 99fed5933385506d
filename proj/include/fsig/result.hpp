// Copyright 2026 The fsigtool authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FSIG_RESULT_HPP
#define FSIG_RESULT_HPP

#include <string>

#include <json.hpp>

#include "fsig/rational.hpp"

namespace fsig {

/// Result documents are ordered JSON objects; key order is fixed by the
/// handlers, so identical inputs yield byte-identical output (the isolated
/// "timing" subsection aside).
using Json = nlohmann::ordered_json;

/// Fractions travel as {"num": "...", "den": "..."} with integer strings.
Json frac_json(const Rational& r);

std::string emit_json(const Json& doc);

/// Flat table with a fixed column set; one row per record/(e,t) sample,
/// fractions as "num/den" plus a 12-digit decimal column.
std::string emit_csv(const Json& doc);

std::string emit_document(const Json& doc, const std::string& format);

}  // namespace fsig

#endif
