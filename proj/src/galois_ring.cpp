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

#include "mumeb/galois_ring.hpp"

#include <set>

namespace mumeb {

namespace {

int mod4(int v) {
    return ((v % 4) + 4) % 4;
}

// Remainder of num modulo the monic divisor, coefficients mod 4 (c0 first).
std::vector<int> z4_remainder(std::vector<int> num, const std::vector<int> &divisor) {
    const std::size_t d = divisor.size() - 1;
    for (std::size_t top = num.size(); top-- > d;) {
        const int c = mod4(num[top]);
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= d; ++i) {
            num[top - d + i] = mod4(num[top - d + i] - c * divisor[i]);
        }
    }
    num.resize(d);
    for (int &c : num) {
        c = mod4(c);
    }
    return num;
}

}  // namespace

std::vector<int> graeffe_lift(std::uint32_t h2, int s) {
    std::vector<int> plus(s + 1), minus(s + 1);
    for (int i = 0; i <= s; ++i) {
        plus[i] = (h2 >> i) & 1;
        minus[i] = (i % 2 == 0) ? plus[i] : -plus[i];
    }
    std::vector<int> prod(2 * s + 1, 0);
    for (int i = 0; i <= s; ++i) {
        for (int j = 0; j <= s; ++j) {
            prod[i + j] += plus[i] * minus[j];
        }
    }
    const int sign = (s % 2 == 0) ? 1 : -1;
    std::vector<int> h(s + 1);
    for (int i = 1; i < 2 * s; i += 2) {
        if (prod[i] != 0) {
            throw Error(ErrorKind::LiftFailed, "h2(x) h2(-x) has an odd-degree term");
        }
    }
    for (int j = 0; j <= s; ++j) {
        h[j] = mod4(sign * prod[2 * j]);
    }
    if (h[s] != 1) {
        throw Error(ErrorKind::LiftFailed, "lifted polynomial is not monic");
    }
    for (int j = 0; j <= s; ++j) {
        if ((h[j] & 1) != static_cast<int>((h2 >> j) & 1)) {
            throw Error(ErrorKind::LiftFailed, "lift does not reduce to h2 modulo 2");
        }
    }
    const std::size_t order = (std::size_t{1} << s) - 1;
    std::vector<int> target(order + 1, 0);
    target[order] = 1;
    target[0] = -1;
    for (int c : z4_remainder(target, h)) {
        if (c != 0) {
            throw Error(ErrorKind::LiftFailed, "lift does not divide x^(q-1) - 1 modulo 4");
        }
    }
    return h;
}

std::shared_ptr<const GaloisRing> GaloisRing::create(FieldPtr field) {
    return std::shared_ptr<const GaloisRing>(new GaloisRing(std::move(field)));
}

GaloisRing::GaloisRing(FieldPtr field) : field_(std::move(field)) {
    const int s = field_->degree();
    const std::size_t q = field_->size();
    lift_ = graeffe_lift(field_->polynomial(), s);

    teich_polys_.assign(q, Z4Poly{});
    Z4Poly x{};
    x[1] = 1;
    Z4Poly cur{};
    cur[0] = 1;
    std::set<Z4Poly> seen;
    for (std::size_t k = 0; k + 1 < q; ++k) {
        // Residue mod 2 of xi^k must be the field's xi^k.
        std::uint32_t bits = 0;
        for (int i = 0; i < s; ++i) {
            bits |= static_cast<std::uint32_t>(cur[i] & 1) << i;
        }
        if (bits != field_->exp_bits(k) || !seen.insert(cur).second) {
            throw Error(ErrorKind::LiftFailed, "Teichmueller powers are inconsistent with the field");
        }
        teich_polys_[k + 1] = cur;
        cur = poly_mul(cur, x);
    }
    Z4Poly one{};
    one[0] = 1;
    if (cur != one) {
        throw Error(ErrorKind::LiftFailed, "xi^(q-1) != 1 in the ring");
    }

    trace_.assign(q * q, 0);
    for (std::size_t n = 0; n < q * q; ++n) {
        trace_[n] = static_cast<std::uint8_t>(trace_by_orbit(elem_at(n)));
    }
}

RingElem GaloisRing::elem(TeichIndex a, TeichIndex b) const {
    if (a.value >= teich_size() || b.value >= teich_size()) {
        throw Error(ErrorKind::DomainMismatch, "Teichmueller index out of range");
    }
    return {this, a, b};
}

RingElem GaloisRing::from_int(int c) const {
    // 0, 1, 2 = 0 + 2*1, 3 = 1 + 2*1.
    switch (mod4(c)) {
        case 0:
            return {this, TeichIndex(0), TeichIndex(0)};
        case 1:
            return {this, TeichIndex(1), TeichIndex(0)};
        case 2:
            return {this, TeichIndex(0), TeichIndex(1)};
        default:
            return {this, TeichIndex(1), TeichIndex(1)};
    }
}

std::vector<RingElem> GaloisRing::elements() const {
    std::vector<RingElem> out;
    out.reserve(size());
    for (std::size_t n = 0; n < size(); ++n) {
        out.push_back(elem_at(n));
    }
    return out;
}

Z4Poly GaloisRing::poly_add(const Z4Poly &x, const Z4Poly &y) const {
    Z4Poly out{};
    for (int i = 0; i < degree(); ++i) {
        out[i] = static_cast<std::uint8_t>((x[i] + y[i]) & 3);
    }
    return out;
}

Z4Poly GaloisRing::poly_neg(const Z4Poly &x) const {
    Z4Poly out{};
    for (int i = 0; i < degree(); ++i) {
        out[i] = static_cast<std::uint8_t>((4 - x[i]) & 3);
    }
    return out;
}

Z4Poly GaloisRing::poly_mul(const Z4Poly &x, const Z4Poly &y) const {
    const int s = degree();
    std::array<int, 2 * Field::kMaxDegree> t{};
    for (int i = 0; i < s; ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (int j = 0; j < s; ++j) {
            t[i + j] += x[i] * y[j];
        }
    }
    for (int top = 2 * s - 2; top >= s; --top) {
        const int c = t[top] & 3;
        if (c == 0) {
            continue;
        }
        for (int i = 0; i < s; ++i) {
            t[top - s + i] -= c * lift_[i];
        }
        t[top] = 0;
    }
    Z4Poly out{};
    for (int i = 0; i < s; ++i) {
        out[i] = static_cast<std::uint8_t>(mod4(t[i]));
    }
    return out;
}

Z4Poly GaloisRing::to_poly(const RingElem &x) const {
    check_same(x);
    const Z4Poly &a = teich_polys_[x.a().value];
    const Z4Poly &b = teich_polys_[x.b().value];
    return poly_add(a, poly_add(b, b));
}

RingElem GaloisRing::from_poly(const Z4Poly &p) const {
    const int s = degree();
    std::uint32_t residue = 0;
    for (int i = 0; i < s; ++i) {
        residue |= static_cast<std::uint32_t>(p[i] & 1) << i;
    }
    const TeichIndex a(field_->from_bits(residue).index());
    const Z4Poly diff = poly_add(p, poly_neg(teich_polys_[a.value]));
    std::uint32_t half = 0;
    for (int i = 0; i < s; ++i) {
        if (diff[i] & 1) {
            throw Error(ErrorKind::InvariantViolation, "p - teich(p mod 2) is not divisible by 2");
        }
        half |= static_cast<std::uint32_t>((diff[i] >> 1) & 1) << i;
    }
    return {this, a, TeichIndex(field_->from_bits(half).index())};
}

RingElem GaloisRing::add(const RingElem &x, const RingElem &y) const {
    return from_poly(poly_add(to_poly(x), to_poly(y)));
}

RingElem GaloisRing::sub(const RingElem &x, const RingElem &y) const {
    return from_poly(poly_add(to_poly(x), poly_neg(to_poly(y))));
}

RingElem GaloisRing::mul(const RingElem &x, const RingElem &y) const {
    return from_poly(poly_mul(to_poly(x), to_poly(y)));
}

RingElem GaloisRing::neg(const RingElem &x) const {
    return from_poly(poly_neg(to_poly(x)));
}

RingElem GaloisRing::frobenius(const RingElem &x) const {
    check_same(x);
    return {this, teich_square(x.a()), teich_square(x.b())};
}

int GaloisRing::trace_by_orbit(const RingElem &x) const {
    check_same(x);
    Z4Poly sum{};
    RingElem cur = x;
    for (int i = 0; i < degree(); ++i) {
        sum = poly_add(sum, to_poly(cur));
        cur = frobenius(cur);
    }
    for (int i = 1; i < degree(); ++i) {
        if (sum[i] != 0) {
            throw Error(ErrorKind::InvariantViolation, "Frobenius orbit sum is not in Z4");
        }
    }
    return sum[0];
}

TeichIndex GaloisRing::teich_mul(TeichIndex a, TeichIndex b) const {
    if (a.is_zero() || b.is_zero()) {
        return TeichIndex(0);
    }
    const std::size_t order = teich_size() - 1;
    return TeichIndex((a.value - 1 + b.value - 1) % order + 1);
}

TeichIndex GaloisRing::teich_inv(TeichIndex a) const {
    if (a.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of the zero Teichmueller element");
    }
    const std::size_t order = teich_size() - 1;
    return TeichIndex((order - (a.value - 1)) % order + 1);
}

TeichIndex GaloisRing::teich_square(TeichIndex a) const {
    return teich_mul(a, a);
}

TeichIndex GaloisRing::teich_sqrt(TeichIndex a) const {
    if (a.is_zero()) {
        return a;
    }
    const std::size_t order = teich_size() - 1;
    const std::size_t half = std::size_t{1} << (degree() - 1);
    return TeichIndex(((a.value - 1) * half) % order + 1);
}

TeichIndex GaloisRing::oplus(TeichIndex a, TeichIndex b) const {
    const TeichIndex root = teich_sqrt(teich_mul(a, b));
    const RingElem sum = add(add(teich(a), teich(b)), add(teich(root), teich(root)));
    if (!sum.b().is_zero()) {
        throw Error(ErrorKind::InvariantViolation, "a (+) b is not a Teichmueller element");
    }
    return sum.a();
}

ScaledGaussian GaloisRing::gamma(const RingElem &r) const {
    check_same(r);
    std::int64_t re = 0;
    std::int64_t im = 0;
    for (std::size_t x = 0; x < teich_size(); ++x) {
        switch (lambda(mul(r, teich(TeichIndex(x)))).exponent()) {
            case 0:
                ++re;
                break;
            case 1:
                ++im;
                break;
            case 2:
                --re;
                break;
            default:
                --im;
                break;
        }
    }
    return {re, im, 0};
}

std::string GaloisRing::teich_name(TeichIndex a) const {
    if (a.value == 0) {
        return "0";
    }
    if (a.value == 1) {
        return "1";
    }
    if (a.value == 2) {
        return "ξ";
    }
    return "ξ^" + std::to_string(a.value - 1);
}

std::string GaloisRing::name(const RingElem &x) const {
    check_same(x);
    if (x.b().is_zero()) {
        return teich_name(x.a());
    }
    std::string two = x.b().value == 1 ? "2" : "2" + teich_name(x.b());
    if (x.a().is_zero()) {
        return two;
    }
    return teich_name(x.a()) + "+" + two;
}

}  // namespace mumeb
