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

#ifndef FSIG_RATIONAL_HPP
#define FSIG_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "fsig/errors.hpp"

namespace fsig {

/// Exact rational number over 64-bit integers. Always stored reduced with a
/// positive denominator; intermediates use 128-bit arithmetic and overflow of
/// the reduced result is an error, never silent.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : n_(n) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return n_; }
    long long den() const { return d_; }

    bool is_zero() const { return n_ == 0; }
    bool is_integer() const { return d_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make128((__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make128((__int128)a.n_ * b.d_ - (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make128((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.n_ == 0) fail(Errc::input, "rational division by zero");
        return make128((__int128)a.n_ * b.d_, (__int128)a.d_ * b.n_);
    }
    Rational operator-() const {
        Rational r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return n_ < 0 ? -*this : *this; }

    /// Renders "n/d", or just "n" when the value is an integer.
    std::string to_string() const {
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

    /// Fixed-point decimal rendering, truncated toward zero.
    std::string decimal_string(int digits = 12) const {
        unsigned long long n = n_ < 0 ? (unsigned long long)(-(n_ + 1)) + 1ull : (unsigned long long)n_;
        unsigned long long d = (unsigned long long)d_;
        std::string out = n_ < 0 ? "-" : "";
        out += std::to_string(n / d);
        out += '.';
        unsigned __int128 rem = n % d;
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += char('0' + (int)(rem / d));
            rem %= d;
        }
        return out;
    }

  private:
    static Rational make128(__int128 n, __int128 d) {
        if (d == 0) fail(Errc::input, "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        const __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) fail(Errc::overflow, "rational overflow");
        Rational r;
        r.n_ = (long long)n;
        r.d_ = (long long)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    void assign(long long n, long long d) { *this = make128(n, d); }

    long long n_ = 0;
    long long d_ = 1;
};

}  // namespace fsig

#endif
