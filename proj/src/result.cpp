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

#include "fsig/result.hpp"

#include "fsig/errors.hpp"

namespace fsig {

Json frac_json(const Rational& r) {
    return Json{{"num", std::to_string(r.num())}, {"den", std::to_string(r.den())}};
}

std::string emit_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string frac_text(const Json& v) {
    if (!v.is_object()) return "";
    std::string num = v.value("num", "");
    std::string den = v.value("den", "");
    return den == "1" ? num : num + "/" + den;
}

std::string cell(const Json& obj, const char* key) {
    if (!obj.contains(key)) return "";
    const Json& v = obj[key];
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_object()) return frac_text(v);
    return "";
}

void emit_row(std::string& out, const std::string& kind, const Json& obj) {
    out += kind;
    for (const char* key : {"e", "q", "t", "name", "length", "value", "decimal", "pass", "detail"})
        out += "," + csv_quote(cell(obj, key));
    out += "\n";
}

}  // namespace

std::string emit_csv(const Json& doc) {
    std::string out = "kind,e,q,t,name,length,value,decimal,pass,detail\n";
    if (doc.contains("records"))
        for (const Json& row : doc["records"]) emit_row(out, "record", row);
    if (doc.contains("curve"))
        for (const Json& row : doc["curve"]) emit_row(out, "curve", row);
    if (doc.contains("coefficients"))
        for (const Json& row : doc["coefficients"]) emit_row(out, "coeff", row);
    if (doc.contains("extrapolation")) emit_row(out, "extrap", doc["extrapolation"]);
    if (doc.contains("checks"))
        for (const Json& row : doc["checks"]) emit_row(out, "check", row);
    return out;
}

std::string emit_document(const Json& doc, const std::string& format) {
    if (format == "json") return emit_json(doc);
    if (format == "csv") return emit_csv(doc);
    fail(Errc::input, "unknown output format '" + format + "'");
}

}  // namespace fsig
