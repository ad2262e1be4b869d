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

#include <gtest/gtest.h>

#include <set>

using namespace mumeb;

namespace {

// Carry-less multiply and reduce, independent of the log tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int s) {
    std::uint32_t r = 0;
    for (int i = 0; i < 16; ++i) {
        if ((b >> i) & 1) {
            r ^= a << i;
        }
    }
    for (int d = 31; d >= s; --d) {
        if ((r >> d) & 1) {
            r ^= poly << (d - s);
        }
    }
    return r;
}

}  // namespace

TEST(finite_field, default_polynomials_are_primitive) {
    for (int s = Field::kMinDegree; s <= Field::kMaxDegree; ++s) {
        const std::uint32_t poly = Field::default_polynomial(s);
        const std::uint32_t q = 1u << s;
        std::set<std::uint32_t> seen;
        std::uint32_t x = 1;
        for (std::uint32_t k = 0; k + 1 < q; ++k) {
            seen.insert(x);
            x = slow_mul(x, 2, poly, s);
        }
        EXPECT_EQ(x, 1u) << s;
        EXPECT_EQ(seen.size(), q - 1) << s;
    }
}

TEST(finite_field, multiplication_matches_slow_oracle) {
    for (int s = 2; s <= 8; ++s) {
        const FieldPtr f = Field::create(s);
        const std::uint32_t step = s <= 5 ? 1 : 7;
        for (std::uint32_t a = 0; a < f->size(); ++a) {
            for (std::uint32_t b = 0; b < f->size(); b += step) {
                const FieldElem x = f->from_bits(a);
                const FieldElem y = f->from_bits(b);
                ASSERT_EQ((x * y).bits(), slow_mul(a, b, f->polynomial(), s));
                ASSERT_EQ((x + y).bits(), a ^ b);
            }
        }
    }
}

TEST(finite_field, canonical_index_order) {
    const FieldPtr f = Field::create(3);
    EXPECT_EQ(f->elem(0), f->zero());
    EXPECT_EQ(f->elem(1), f->one());
    EXPECT_EQ(f->elem(2), f->primitive());
    for (std::size_t k = 1; k < f->size(); ++k) {
        EXPECT_EQ(f->elem(k), f->xi_pow(static_cast<long long>(k) - 1));
        EXPECT_EQ(f->elem(k).index(), k);
        EXPECT_EQ(f->elem(k).log(), static_cast<int>(k) - 1);
    }
    const auto all = f->elements();
    ASSERT_EQ(all.size(), 8u);
    for (std::size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(all[k].index(), k);
    }
}

TEST(finite_field, s2_multiplication_table) {
    // F4 = {0, 1, w, w^2} with w^2 = w + 1.
    const FieldPtr f = Field::create(2);
    const FieldElem w = f->primitive();
    EXPECT_EQ(w * w, w + f->one());
    EXPECT_EQ(w * w * w, f->one());
    EXPECT_EQ(f->polynomial(), 0x7u);
}

TEST(finite_field, inverse_pow_sqrt_exhaustive) {
    for (int s = 2; s <= 8; ++s) {
        const FieldPtr f = Field::create(s);
        const auto q = static_cast<long long>(f->size());
        for (const FieldElem &x : f->elements()) {
            const FieldElem r = sqrt(x);
            ASSERT_EQ(r * r, x);
            ASSERT_EQ(pow(x, 2), x * x);
            ASSERT_EQ(pow(x, q), x);
            if (x.is_zero()) {
                EXPECT_THROW(inverse(x), Error);
                continue;
            }
            ASSERT_EQ(x * inverse(x), f->one());
            ASSERT_EQ(pow(x, -1), inverse(x));
            ASSERT_EQ(pow(x, -3) * pow(x, 3), f->one());
            ASSERT_EQ(x / x, f->one());
        }
    }
}

TEST(finite_field, negative_xi_powers) {
    const FieldPtr f = Field::create(4);
    for (long long k = -40; k <= 40; ++k) {
        EXPECT_EQ(f->xi_pow(k) * f->xi_pow(-k), f->one());
        EXPECT_EQ(f->xi_pow(k), f->xi_pow(k + 15));
    }
}

TEST(finite_field, subtraction_is_addition) {
    const FieldPtr f = Field::create(3);
    for (const FieldElem &x : f->elements()) {
        EXPECT_EQ(-x, x);
        EXPECT_EQ(x - x, f->zero());
        EXPECT_EQ(x + x, f->zero());
    }
}

TEST(finite_field, errors) {
    auto kind_of = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvariantViolation;
    };
    EXPECT_EQ(kind_of([] { Field::create(1); }), ErrorKind::UnsupportedDegree);
    EXPECT_EQ(kind_of([] { Field::create(9); }), ErrorKind::UnsupportedDegree);
    // x^2 + 1 = (x + 1)^2 is reducible.
    EXPECT_EQ(kind_of([] { Field::create(2, 0x5); }), ErrorKind::InvalidPolynomial);
    // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
    EXPECT_EQ(kind_of([] { Field::create(4, 0x1F); }), ErrorKind::InvalidPolynomial);
    // Wrong degree.
    EXPECT_EQ(kind_of([] { Field::create(3, 0x7); }), ErrorKind::InvalidPolynomial);

    const FieldPtr a = Field::create(2);
    const FieldPtr b = Field::create(2);
    EXPECT_EQ(kind_of([&] { (void)(a->one() * b->one()); }), ErrorKind::DomainMismatch);
}

TEST(finite_field, alternative_polynomial) {
    // x^3 + x^2 + 1 is the other primitive cubic.
    const FieldPtr f = Field::create(3, 0xD);
    EXPECT_EQ(f->polynomial_coefficients(), (std::vector<int>{1, 0, 1, 1}));
    EXPECT_EQ(pow(f->primitive(), 7), f->one());
    EXPECT_NE(pow(f->primitive(), 1), f->one());
}

TEST(finite_field, polynomial_from_coefficients) {
    const std::vector<int> c{1, 1, 0, 0, 1};
    EXPECT_EQ(polynomial_from_coefficients(c), 0x13u);
    const std::vector<int> bad{1, 2, 1};
    EXPECT_THROW(polynomial_from_coefficients(bad), Error);
    const std::vector<int> not_monic{1, 1, 0};
    EXPECT_THROW(polynomial_from_coefficients(not_monic), Error);
}
