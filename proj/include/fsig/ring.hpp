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

#ifndef FSIG_RING_HPP
#define FSIG_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fsig/errors.hpp"

namespace fsig {

/// Polynomial ring context F_p[vars]. Immutable after construction and shared
/// by every polynomial built over it; all coefficient arithmetic is exact
/// arithmetic in the prime field.
class Ring {
  public:
    static constexpr int kMaxVars = 12;

    Ring(std::uint32_t p, std::vector<std::string> vars);

    std::uint32_t p() const { return p_; }
    int nvars() const { return (int)vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[(size_t)i]; }
    int var_index(const std::string& name) const;  // -1 when absent

    bool same_as(const Ring& other) const { return p_ == other.p_ && vars_ == other.vars_; }

    // Prime field ops on residues in [0, p).
    std::uint32_t fadd(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t fsub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t fneg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t fmul(std::uint32_t a, std::uint32_t b) const {
        return (std::uint32_t)((std::uint64_t)a * b % p_);
    }
    std::uint32_t finv(std::uint32_t a) const;
    std::uint32_t fpow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t freduce(std::uint64_t v) const { return (std::uint32_t)(v % p_); }

  private:
    std::uint32_t p_;
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Builds a ring after validating that p is prime (trial division) and the
/// variable names are well-formed, distinct identifiers.
RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars);

/// Ring with one extra variable prepended, used for elimination. The new
/// variable name cannot collide with user identifiers.
RingPtr extend_ring_front(const RingPtr& ring, const std::string& name = "__t");

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (!a.same_as(b)) fail(Errc::input, "mixed ring contexts");
}

}  // namespace fsig

#endif
