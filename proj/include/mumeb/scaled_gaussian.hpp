// Copyright 2026 The mumeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>

#include "mumeb/error.hpp"
#include "mumeb/phase.hpp"

namespace mumeb {

namespace detail {

// Overflow-checked primitives. Builtin integers trap overflow instead of
// wrapping; any other integer type (e.g. a bignum) is assumed unbounded.
template <typename Int>
Int checked_add(Int a, Int b) {
    if constexpr (std::is_integral_v<Int> || std::is_same_v<Int, __int128>) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) {
            throw std::overflow_error("ScaledGaussian: integer overflow in addition");
        }
        return r;
    } else {
        return a + b;
    }
}

template <typename Int>
Int checked_sub(Int a, Int b) {
    if constexpr (std::is_integral_v<Int> || std::is_same_v<Int, __int128>) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) {
            throw std::overflow_error("ScaledGaussian: integer overflow in subtraction");
        }
        return r;
    } else {
        return a - b;
    }
}

template <typename Int>
Int checked_mul(Int a, Int b) {
    if constexpr (std::is_integral_v<Int> || std::is_same_v<Int, __int128>) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) {
            throw std::overflow_error("ScaledGaussian: integer overflow in multiplication");
        }
        return r;
    } else {
        return a * b;
    }
}

template <typename Int>
bool is_even(const Int &v) {
    return v % 2 == 0;
}

template <typename Int>
std::string int_to_string(const Int &v) {
    if constexpr (std::is_same_v<Int, __int128>) {
        if (v == 0) {
            return "0";
        }
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        std::string s;
        while (u > 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    } else {
        std::ostringstream out;
        out << v;
        return out.str();
    }
}

}  // namespace detail

/// Exact dyadic rational num / 2^log2den. Canonical: log2den == 0 or num odd.
template <typename Int>
class BasicDyadic {
   public:
    BasicDyadic() = default;
    BasicDyadic(Int num, int log2den) : num_(num), log2den_(log2den) {
        while (log2den_ < 0) {
            num_ = detail::checked_mul(num_, Int(2));
            ++log2den_;
        }
        if (num_ == 0) {
            log2den_ = 0;
        }
        while (log2den_ > 0 && detail::is_even(num_)) {
            num_ /= 2;
            --log2den_;
        }
    }

    const Int &num() const {
        return num_;
    }
    int log2den() const {
        return log2den_;
    }

    friend bool operator==(const BasicDyadic &a, const BasicDyadic &b) = default;

    friend std::strong_ordering operator<=>(const BasicDyadic &a, const BasicDyadic &b) {
        // Compare a.num * 2^b.den with b.num * 2^a.den.
        Int lhs = a.num_;
        Int rhs = b.num_;
        for (int i = 0; i < b.log2den_; ++i) {
            lhs = detail::checked_mul(lhs, Int(2));
        }
        for (int i = 0; i < a.log2den_; ++i) {
            rhs = detail::checked_mul(rhs, Int(2));
        }
        if (lhs < rhs) {
            return std::strong_ordering::less;
        }
        if (rhs < lhs) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(Int(1) << log2den_);
    }

    std::string str() const {
        std::string out = detail::int_to_string(num_);
        if (log2den_ > 0) {
            out += "/" + detail::int_to_string(Int(1) << log2den_);
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &out, const BasicDyadic &d) {
        return out << d.str();
    }

   private:
    Int num_ = 0;
    int log2den_ = 0;
};

/// Exact complex number (re + im i) * 2^(-k/2).
///
/// Canonical form: k >= 0, and if k >= 2 then re and im are not both even.
/// Zero is (0, 0, 0). Because sqrt(2) is irrational, the parity of k is an
/// invariant of every nonzero value, so sums of mixed-parity operands are not
/// representable and raise MixedParity.
template <typename Int>
class BasicScaledGaussian {
   public:
    using IntType = Int;

    BasicScaledGaussian() = default;
    // Implicit from small integers so generic matrix code can write Scalar(0).
    BasicScaledGaussian(int v) : re_(v) {  // NOLINT(google-explicit-constructor)
    }
    BasicScaledGaussian(Int re, Int im, int k) : re_(re), im_(im), k_(k) {
        canonicalize();
    }

    static BasicScaledGaussian from_phase(I4Phase p, int k = 0) {
        switch (p.exponent()) {
            case 0:
                return {Int(1), Int(0), k};
            case 1:
                return {Int(0), Int(1), k};
            case 2:
                return {Int(-1), Int(0), k};
            default:
                return {Int(0), Int(-1), k};
        }
    }

    const Int &re() const {
        return re_;
    }
    const Int &im() const {
        return im_;
    }
    int k() const {
        return k_;
    }
    bool is_zero() const {
        return re_ == 0 && im_ == 0;
    }

    BasicScaledGaussian conj() const {
        BasicScaledGaussian r = *this;
        r.im_ = -r.im_;
        return r;
    }

    /// |value|^2 = (re^2 + im^2) / 2^k.
    BasicDyadic<Int> norm_sq() const {
        return {detail::checked_add(detail::checked_mul(re_, re_), detail::checked_mul(im_, im_)), k_};
    }

    /// Multiplies by 2^(e/2); e may be negative.
    BasicScaledGaussian scaled_by_sqrt2_pow(int e) const {
        if (is_zero()) {
            return {};
        }
        return {re_, im_, k_ - e};
    }

    /// Numerators of this value rewritten over 2^(-target_k/2); target_k must be
    /// >= k and of the same parity (zero fits any target).
    std::pair<Int, Int> numerators_at(int target_k) const {
        if (is_zero()) {
            return {Int(0), Int(0)};
        }
        if (target_k < k_ || (target_k - k_) % 2 != 0) {
            throw Error(ErrorKind::MixedParity, "cannot rewrite value at the requested exponent");
        }
        Int scale = 1;
        for (int i = 0; i < (target_k - k_) / 2; ++i) {
            scale = detail::checked_mul(scale, Int(2));
        }
        return {detail::checked_mul(re_, scale), detail::checked_mul(im_, scale)};
    }

    BasicScaledGaussian &operator+=(const BasicScaledGaussian &other) {
        if (other.is_zero()) {
            return *this;
        }
        if (is_zero()) {
            return *this = other;
        }
        if (((k_ - other.k_) & 1) != 0) {
            throw Error(ErrorKind::MixedParity, "sum of values with odd and even sqrt(2) exponents");
        }
        const int k = std::max(k_, other.k_);
        auto [a_re, a_im] = numerators_at(k);
        auto [b_re, b_im] = other.numerators_at(k);
        *this = BasicScaledGaussian(detail::checked_add(a_re, b_re), detail::checked_add(a_im, b_im), k);
        return *this;
    }

    BasicScaledGaussian &operator-=(const BasicScaledGaussian &other) {
        return *this += -other;
    }

    BasicScaledGaussian &operator*=(const BasicScaledGaussian &other) {
        using detail::checked_add;
        using detail::checked_mul;
        using detail::checked_sub;
        if (is_zero() || other.is_zero()) {
            return *this = BasicScaledGaussian();
        }
        Int re = checked_sub(checked_mul(re_, other.re_), checked_mul(im_, other.im_));
        Int im = checked_add(checked_mul(re_, other.im_), checked_mul(im_, other.re_));
        *this = BasicScaledGaussian(re, im, k_ + other.k_);
        return *this;
    }

    BasicScaledGaussian operator-() const {
        BasicScaledGaussian r = *this;
        r.re_ = -r.re_;
        r.im_ = -r.im_;
        return r;
    }

    friend BasicScaledGaussian operator+(BasicScaledGaussian a, const BasicScaledGaussian &b) {
        return a += b;
    }
    friend BasicScaledGaussian operator-(BasicScaledGaussian a, const BasicScaledGaussian &b) {
        return a -= b;
    }
    friend BasicScaledGaussian operator*(BasicScaledGaussian a, const BasicScaledGaussian &b) {
        return a *= b;
    }
    friend bool operator==(const BasicScaledGaussian &a, const BasicScaledGaussian &b) = default;

    /// Human-readable form, e.g. "1", "-i", "(1+i)/2", "i/sqrt2".
    std::string str() const {
        std::string z = gaussian_str(re_, im_);
        if (k_ == 0) {
            return z;
        }
        std::string den;
        if (k_ / 2 > 0) {
            den = detail::int_to_string(Int(1) << (k_ / 2));
        }
        if (k_ % 2 == 1) {
            den += den.empty() ? "sqrt2" : "*sqrt2";
        }
        const bool compound = re_ != 0 && im_ != 0;
        return (compound ? "(" + z + ")" : z) + "/" + den;
    }

    friend std::ostream &operator<<(std::ostream &out, const BasicScaledGaussian &v) {
        return out << v.str();
    }

    /// Gaussian integer rendered as "a", "bi", "a+bi" with unit coefficients elided.
    static std::string gaussian_str(const Int &re, const Int &im) {
        auto imag = [](const Int &v) -> std::string {
            if (v == 1) {
                return "i";
            }
            if (v == -1) {
                return "-i";
            }
            return detail::int_to_string(v) + "i";
        };
        if (im == 0) {
            return detail::int_to_string(re);
        }
        if (re == 0) {
            return imag(im);
        }
        std::string im_part = imag(im);
        if (im_part[0] != '-') {
            im_part = "+" + im_part;
        }
        return detail::int_to_string(re) + im_part;
    }

   private:
    void canonicalize() {
        if (re_ == 0 && im_ == 0) {
            k_ = 0;
            return;
        }
        while (k_ < 0) {
            re_ = detail::checked_mul(re_, Int(2));
            im_ = detail::checked_mul(im_, Int(2));
            k_ += 2;
        }
        while (k_ >= 2 && detail::is_even(re_) && detail::is_even(im_)) {
            re_ /= 2;
            im_ /= 2;
            k_ -= 2;
        }
    }

    Int re_ = 0;
    Int im_ = 0;
    int k_ = 0;
};

template <typename Int>
BasicScaledGaussian<Int> conj(const BasicScaledGaussian<Int> &x) {
    return x.conj();
}

using Dyadic = BasicDyadic<std::int64_t>;
using ScaledGaussian = BasicScaledGaussian<std::int64_t>;

/// i^p * 2^(-k/2).
inline ScaledGaussian phase_entry(I4Phase p, int k) {
    return ScaledGaussian::from_phase(p, k);
}

}  // namespace mumeb
