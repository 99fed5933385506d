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

#ifndef FSIG_ERRORS_HPP
#define FSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsig {

enum class Errc {
    input,     // malformed input, mixed ring contexts, bad arguments
    parse,     // text could not be parsed (carries line/column)
    overflow,  // checked integer arithmetic would wrap
    budget,    // a configured resource cap was exceeded
    check,     // an asserted invariant or acceptance inequality failed
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Error(Errc code, std::string msg, int line, int col)
        : std::runtime_error(std::move(msg)), code_(code), line_(line), col_(col) {}

    Errc code() const { return code_; }
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    Errc code_;
    int line_ = -1;
    int col_ = -1;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Checked 64-bit helpers. Silent wraparound would corrupt every length
// downstream, so all exponent/degree arithmetic goes through these.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in multiplication");
    return r;
}

}  // namespace fsig

#endif
