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

#include "fsig/ring.hpp"

#include <algorithm>
#include <cctype>

namespace fsig {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha((unsigned char)s[0])) return false;
    for (char ch : s)
        if (!std::isalnum((unsigned char)ch) && ch != '_') return false;
    return true;
}

}  // namespace

Ring::Ring(std::uint32_t p, std::vector<std::string> vars) : p_(p), vars_(std::move(vars)) {}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

std::uint32_t Ring::finv(std::uint32_t a) const {
    if (a == 0) fail(Errc::input, "inverse of zero in F_" + std::to_string(p_));
    // Extended Euclid on (a, p).
    long long t = 0, new_t = 1;
    long long r = p_, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return (std::uint32_t)t;
}

std::uint32_t Ring::fpow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t base = a % p_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return (std::uint32_t)acc;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
    if (!is_prime(p)) fail(Errc::input, "modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) fail(Errc::input, "modulus too large");
    if (vars.empty()) fail(Errc::input, "ring needs at least one variable");
    if ((int)vars.size() > Ring::kMaxVars - 1)
        fail(Errc::input, "too many variables (desk-scale cap is " +
                              std::to_string(Ring::kMaxVars - 1) + ")");
    for (const auto& v : vars) {
        if (!valid_identifier(v)) fail(Errc::input, "invalid variable name '" + v + "'");
        if (std::count(vars.begin(), vars.end(), v) != 1)
            fail(Errc::input, "duplicate variable name '" + v + "'");
    }
    return std::make_shared<Ring>(p, std::move(vars));
}

RingPtr extend_ring_front(const RingPtr& ring, const std::string& name) {
    std::vector<std::string> vars;
    vars.reserve((size_t)ring->nvars() + 1);
    vars.push_back(name);
    for (const auto& v : ring->vars()) vars.push_back(v);
    if ((int)vars.size() > Ring::kMaxVars) fail(Errc::input, "too many variables for elimination");
    return std::make_shared<Ring>(ring->p(), std::move(vars));
}

}  // namespace fsig
