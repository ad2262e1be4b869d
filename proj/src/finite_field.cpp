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

#include "mumeb/finite_field.hpp"

#include <array>
#include <bit>
#include <string>

namespace mumeb {

namespace {

constexpr std::array<std::uint32_t, 9> kDefaultPolys = {
    0, 0,
    0x7,    // x^2 + x + 1
    0xB,    // x^3 + x + 1
    0x13,   // x^4 + x + 1
    0x25,   // x^5 + x^2 + 1
    0x43,   // x^6 + x + 1
    0x83,   // x^7 + x + 1
    0x11D,  // x^8 + x^4 + x^3 + x^2 + 1
};

void check_degree(int s) {
    if (s < Field::kMinDegree || s > Field::kMaxDegree) {
        throw Error(ErrorKind::UnsupportedDegree,
                    "s = " + std::to_string(s) + " outside supported range [2, 8]");
    }
}

}  // namespace

std::uint32_t Field::default_polynomial(int s) {
    check_degree(s);
    return kDefaultPolys[s];
}

std::uint32_t polynomial_from_coefficients(std::span<const int> coeffs) {
    if (coeffs.empty() || coeffs.size() > 32) {
        throw Error(ErrorKind::InvalidPolynomial, "coefficient list has bad length");
    }
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0 && coeffs[i] != 1) {
            throw Error(ErrorKind::InvalidPolynomial, "coefficients must be 0 or 1");
        }
        bits |= static_cast<std::uint32_t>(coeffs[i]) << i;
    }
    if (coeffs.back() != 1) {
        throw Error(ErrorKind::InvalidPolynomial, "leading coefficient must be 1");
    }
    return bits;
}

std::shared_ptr<const Field> Field::create(int s, std::optional<std::uint32_t> poly) {
    check_degree(s);
    std::uint32_t p = poly.value_or(kDefaultPolys[s]);
    if (std::bit_width(p) != static_cast<unsigned>(s + 1)) {
        throw Error(ErrorKind::InvalidPolynomial, "polynomial degree differs from s = " + std::to_string(s));
    }
    return std::shared_ptr<const Field>(new Field(s, p));
}

Field::Field(int s, std::uint32_t poly) : s_(s), q_(std::size_t{1} << s), poly_(poly) {
    const std::size_t order = q_ - 1;
    exp_.assign(2 * order, 0);
    log_.assign(q_, -1);
    std::uint32_t cur = 1;
    for (std::size_t k = 0; k < order; ++k) {
        if (log_[cur] != -1) {
            // x cycled back before visiting every nonzero residue.
            throw Error(ErrorKind::InvalidPolynomial, "polynomial is not primitive (x has order < q - 1)");
        }
        exp_[k] = static_cast<std::uint16_t>(cur);
        log_[cur] = static_cast<int>(k);
        cur <<= 1;
        if (cur & q_) {
            cur ^= poly_;
        }
    }
    if (cur != 1) {
        throw Error(ErrorKind::InvalidPolynomial, "polynomial is not primitive (x^(q-1) != 1)");
    }
    for (std::size_t k = 0; k < order; ++k) {
        exp_[k + order] = exp_[k];
    }
}

std::vector<int> Field::polynomial_coefficients() const {
    std::vector<int> out(s_ + 1);
    for (int i = 0; i <= s_; ++i) {
        out[i] = (poly_ >> i) & 1;
    }
    return out;
}

FieldElem Field::xi_pow(long long k) const {
    const long long order = static_cast<long long>(q_ - 1);
    long long r = k % order;
    if (r < 0) {
        r += order;
    }
    return {this, exp_[static_cast<std::size_t>(r)]};
}

FieldElem Field::elem(std::size_t index) const {
    if (index >= q_) {
        throw Error(ErrorKind::DomainMismatch, "canonical index " + std::to_string(index) + " out of range");
    }
    if (index == 0) {
        return zero();
    }
    return {this, exp_[index - 1]};
}

FieldElem Field::from_bits(std::uint32_t bits) const {
    if (bits >= q_) {
        throw Error(ErrorKind::DomainMismatch, "bit pattern wider than the field");
    }
    return {this, static_cast<std::uint16_t>(bits)};
}

std::vector<FieldElem> Field::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (std::size_t i = 0; i < q_; ++i) {
        out.push_back(elem(i));
    }
    return out;
}

std::size_t FieldElem::index() const {
    return bits_ == 0 ? 0 : static_cast<std::size_t>(field_->log_[bits_]) + 1;
}

int FieldElem::log() const {
    if (bits_ == 0) {
        throw Error(ErrorKind::DivisionByZero, "log of zero");
    }
    return field_->log_[bits_];
}

FieldElem &FieldElem::operator+=(const FieldElem &other) {
    field_->check_same(other);
    bits_ ^= other.bits_;
    return *this;
}

FieldElem &FieldElem::operator*=(const FieldElem &other) {
    *this = *this * other;
    return *this;
}

FieldElem operator+(FieldElem x, const FieldElem &y) {
    x += y;
    return x;
}

FieldElem operator-(FieldElem x, const FieldElem &y) {
    x += y;
    return x;
}

FieldElem operator-(const FieldElem &x) {
    return x;
}

FieldElem operator*(FieldElem x, const FieldElem &y) {
    const Field &f = x.field();
    f.check_same(y);
    if (x.is_zero() || y.is_zero()) {
        return f.zero();
    }
    return {&f, f.exp_[f.log_[x.bits()] + f.log_[y.bits()]]};
}

FieldElem inverse(const FieldElem &x) {
    if (x.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    const Field &f = x.field();
    const int l = f.log_[x.bits()];
    return {&f, f.exp_[l == 0 ? 0 : (f.q_ - 1) - l]};
}

FieldElem operator/(const FieldElem &x, const FieldElem &y) {
    return x * inverse(y);
}

FieldElem pow(const FieldElem &x, long long n) {
    const Field &f = x.field();
    if (x.is_zero()) {
        if (n < 0) {
            throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        }
        return n == 0 ? f.one() : f.zero();
    }
    return f.xi_pow(static_cast<long long>(f.log_[x.bits()]) * (n % static_cast<long long>(f.q_ - 1)));
}

FieldElem sqrt(const FieldElem &x) {
    return pow(x, 1LL << (x.field().degree() - 1));
}

}  // namespace mumeb
