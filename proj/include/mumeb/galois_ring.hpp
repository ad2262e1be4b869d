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

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "mumeb/finite_field.hpp"
#include "mumeb/phase.hpp"
#include "mumeb/scaled_gaussian.hpp"

namespace mumeb {

/// Canonical position in T_s = {0, 1, xi, ..., xi^(q-2)}: 0 is zero, k >= 1 is
/// xi^(k-1). The same numbering as FieldElem::index(), so phi is the identity
/// on indices.
struct TeichIndex {
    std::uint16_t value = 0;

    constexpr TeichIndex() = default;
    constexpr explicit TeichIndex(std::size_t v) : value(static_cast<std::uint16_t>(v)) {
    }
    constexpr bool is_zero() const {
        return value == 0;
    }
    friend constexpr auto operator<=>(TeichIndex, TeichIndex) = default;
};

class GaloisRing;

/// a + 2b with a, b in T_s; the pair representation is unique.
class RingElem {
   public:
    RingElem() = default;
    RingElem(const GaloisRing *ring, TeichIndex a, TeichIndex b) : ring_(ring), a_(a), b_(b) {
    }

    const GaloisRing &ring() const {
        return *ring_;
    }
    const GaloisRing *ring_ptr() const {
        return ring_;
    }
    TeichIndex a() const {
        return a_;
    }
    TeichIndex b() const {
        return b_;
    }
    bool is_zero() const {
        return a_.is_zero() && b_.is_zero();
    }

    bool operator==(const RingElem &other) const = default;

   private:
    const GaloisRing *ring_ = nullptr;
    TeichIndex a_;
    TeichIndex b_;
};

/// Coefficients c0..c(s-1) of a residue class in Z4[x]/(h).
using Z4Poly = std::array<std::uint8_t, Field::kMaxDegree>;

/// Monic degree-s h over Z4 with h = h2 (mod 2) and h | x^(2^s - 1) - 1 (mod 4),
/// obtained from h(x^2) = (-1)^s h2(x) h2(-x). Returned as c0..cs in [0, 4).
std::vector<int> graeffe_lift(std::uint32_t h2, int s);

/// GR(4, 4^s) = Z4[x]/(h). Elements are Teichmueller pairs; arithmetic is
/// carried out on Z4 coefficient vectors and mapped back to pair form.
/// Immutable after construction.
class GaloisRing {
   public:
    static std::shared_ptr<const GaloisRing> create(FieldPtr field);

    const Field &field() const {
        return *field_;
    }
    const FieldPtr &field_ptr() const {
        return field_;
    }
    int degree() const {
        return field_->degree();
    }
    /// |T_s| = q.
    std::size_t teich_size() const {
        return field_->size();
    }
    /// |R| = q^2.
    std::size_t size() const {
        return teich_size() * teich_size();
    }
    /// h as c0..cs mod 4.
    const std::vector<int> &lift_polynomial() const {
        return lift_;
    }

    RingElem elem(TeichIndex a, TeichIndex b) const;
    RingElem teich(TeichIndex a) const {
        return elem(a, TeichIndex(0));
    }
    /// Image of c in Z4 inside R.
    RingElem from_int(int c) const;
    RingElem zero() const {
        return from_int(0);
    }
    RingElem one() const {
        return from_int(1);
    }
    /// Element number a + q*b in the (a, b) enumeration.
    RingElem elem_at(std::size_t n) const {
        return elem(TeichIndex(n % teich_size()), TeichIndex(n / teich_size()));
    }
    std::vector<RingElem> elements() const;

    RingElem add(const RingElem &x, const RingElem &y) const;
    RingElem sub(const RingElem &x, const RingElem &y) const;
    RingElem mul(const RingElem &x, const RingElem &y) const;
    RingElem neg(const RingElem &x) const;

    /// a + 2b -> a^2 + 2b^2.
    RingElem frobenius(const RingElem &x) const;
    /// Relative trace to Z4 (table lookup).
    int trace(const RingElem &x) const {
        check_same(x);
        return trace_[x.a().value + teich_size() * x.b().value];
    }
    /// Relative trace computed from scratch as the Frobenius orbit sum.
    int trace_by_orbit(const RingElem &x) const;
    /// lambda(x) = i^tr(x).
    I4Phase lambda(const RingElem &x) const {
        return I4Phase(trace(x));
    }
    /// lambda(phi^-1(x)) for a field element.
    I4Phase lambda(const FieldElem &x) const {
        return lambda(teich(phi_inv(x)));
    }

    // Multiplicative structure of T_s on indices.
    TeichIndex teich_mul(TeichIndex a, TeichIndex b) const;
    TeichIndex teich_inv(TeichIndex a) const;
    TeichIndex teich_square(TeichIndex a) const;
    TeichIndex teich_sqrt(TeichIndex a) const;

    /// a (+) b = a + b + 2 sqrt(ab), asserted to land in T_s.
    TeichIndex oplus(TeichIndex a, TeichIndex b) const;

    FieldElem phi(TeichIndex a) const {
        return field_->elem(a.value);
    }
    TeichIndex phi_inv(const FieldElem &x) const {
        field_->check_same(x);
        return TeichIndex(x.index());
    }
    /// Teichmueller lift of a field element as a ring element.
    RingElem lift(const FieldElem &x) const {
        return teich(phi_inv(x));
    }

    /// Gamma(r) = sum over x in T_s of lambda(r x), as an exact Gaussian integer.
    ScaledGaussian gamma(const RingElem &r) const;

    Z4Poly to_poly(const RingElem &x) const;
    RingElem from_poly(const Z4Poly &p) const;

    /// Human-readable name in the style "xi^2+2xi".
    std::string name(const RingElem &x) const;
    std::string teich_name(TeichIndex a) const;

    void check_same(const RingElem &x) const {
        if (x.ring_ptr() != this) {
            throw Error(ErrorKind::DomainMismatch, "ring element belongs to a different ring");
        }
    }

    GaloisRing(const GaloisRing &) = delete;
    GaloisRing &operator=(const GaloisRing &) = delete;

   private:
    explicit GaloisRing(FieldPtr field);

    Z4Poly poly_add(const Z4Poly &x, const Z4Poly &y) const;
    Z4Poly poly_mul(const Z4Poly &x, const Z4Poly &y) const;
    Z4Poly poly_neg(const Z4Poly &x) const;

    FieldPtr field_;
    std::vector<int> lift_;
    std::vector<Z4Poly> teich_polys_;  // by canonical index
    std::vector<std::uint8_t> trace_;  // by a + q*b
};

using RingPtr = std::shared_ptr<const GaloisRing>;

inline RingElem operator+(const RingElem &x, const RingElem &y) {
    return x.ring().add(x, y);
}
inline RingElem operator-(const RingElem &x, const RingElem &y) {
    return x.ring().sub(x, y);
}
inline RingElem operator-(const RingElem &x) {
    return x.ring().neg(x);
}
inline RingElem operator*(const RingElem &x, const RingElem &y) {
    return x.ring().mul(x, y);
}

}  // namespace mumeb
