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
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mumeb/error.hpp"

namespace mumeb {

class Field;

/// Element of GF(2^s), stored as its polynomial bits over the field's
/// primitive polynomial. Arithmetic goes through the owning field's log/exp
/// tables; mixing elements of two different Field objects throws.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(const Field *field, std::uint16_t bits) : field_(field), bits_(bits) {
    }

    const Field &field() const {
        return *field_;
    }
    const Field *field_ptr() const {
        return field_;
    }
    std::uint16_t bits() const {
        return bits_;
    }
    bool is_zero() const {
        return bits_ == 0;
    }

    /// Position in the order {0, 1, xi, xi^2, ..., xi^(q-2)}.
    std::size_t index() const;

    /// Discrete log base xi; undefined for zero.
    int log() const;

    bool operator==(const FieldElem &other) const {
        return field_ == other.field_ && bits_ == other.bits_;
    }

    FieldElem &operator+=(const FieldElem &other);
    FieldElem &operator*=(const FieldElem &other);

   private:
    const Field *field_ = nullptr;
    std::uint16_t bits_ = 0;
};

FieldElem operator+(FieldElem x, const FieldElem &y);
// Characteristic 2: subtraction and negation coincide with addition and identity.
FieldElem operator-(FieldElem x, const FieldElem &y);
FieldElem operator-(const FieldElem &x);
FieldElem operator*(FieldElem x, const FieldElem &y);
FieldElem operator/(const FieldElem &x, const FieldElem &y);

FieldElem inverse(const FieldElem &x);
FieldElem pow(const FieldElem &x, long long n);
/// The unique square root x^(2^(s-1)).
FieldElem sqrt(const FieldElem &x);

/// GF(2^s) for 2 <= s <= 8 with precomputed log/exp tables. Immutable after
/// construction; hand it around as shared_ptr<const Field> so elements keep a
/// stable owner address.
class Field {
   public:
    static constexpr int kMinDegree = 2;
    static constexpr int kMaxDegree = 8;

    /// Built-in primitive polynomial for degree s, as bits (bit i = coeff of x^i).
    static std::uint32_t default_polynomial(int s);

    /// Validates that `poly` has degree s and that x has order 2^s - 1 modulo it.
    static std::shared_ptr<const Field> create(int s, std::optional<std::uint32_t> poly = std::nullopt);

    int degree() const {
        return s_;
    }
    std::size_t size() const {
        return q_;
    }
    std::uint32_t polynomial() const {
        return poly_;
    }
    /// Coefficients c0..cs.
    std::vector<int> polynomial_coefficients() const;

    FieldElem zero() const {
        return {this, 0};
    }
    FieldElem one() const {
        return {this, 1};
    }
    /// The primitive element xi (the class of x).
    FieldElem primitive() const {
        return {this, 2};
    }
    /// xi^k for any integer k (negative allowed).
    FieldElem xi_pow(long long k) const;
    /// Element at canonical position `index`.
    FieldElem elem(std::size_t index) const;
    FieldElem from_bits(std::uint32_t bits) const;

    /// All q elements in canonical order.
    std::vector<FieldElem> elements() const;

    void check_same(const FieldElem &x) const {
        if (x.field_ptr() != this) {
            throw Error(ErrorKind::DomainMismatch, "field element belongs to a different field");
        }
    }

    // Table access for hot loops.
    std::uint16_t exp_bits(std::size_t k) const {
        return exp_[k % (q_ - 1)];
    }
    int log_bits(std::uint16_t bits) const {
        return log_[bits];
    }

    Field(const Field &) = delete;
    Field &operator=(const Field &) = delete;

   private:
    Field(int s, std::uint32_t poly);

    int s_;
    std::size_t q_;
    std::uint32_t poly_;
    std::vector<std::uint16_t> exp_;  // exp_[k] = bits of xi^k, 0 <= k < 2(q-1)
    std::vector<int> log_;            // log_[bits], -1 for zero

    friend class FieldElem;
    friend FieldElem operator*(FieldElem x, const FieldElem &y);
    friend FieldElem inverse(const FieldElem &x);
    friend FieldElem pow(const FieldElem &x, long long n);
};

using FieldPtr = std::shared_ptr<const Field>;

/// Parses coefficient list c0..cs into polynomial bits; throws InvalidPolynomial
/// on anything other than 0/1 entries or a non-monic top coefficient.
std::uint32_t polynomial_from_coefficients(std::span<const int> coeffs);

}  // namespace mumeb
