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

#include "mumeb/scaled_gaussian.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "mumeb/exact_matrix.hpp"

using namespace mumeb;

namespace {

using C = std::complex<long double>;

C approx(const ScaledGaussian &x) {
    return C(static_cast<long double>(x.re()), static_cast<long double>(x.im())) *
           std::pow(2.0L, -x.k() / 2.0L);
}

ScaledGaussian random_value(std::mt19937_64 &rng, int parity) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> half(0, 3);
    return {coeff(rng), coeff(rng), 2 * half(rng) + parity};
}

}  // namespace

TEST(scaled_gaussian, canonical_form) {
    EXPECT_EQ(ScaledGaussian(2, 0, 2), ScaledGaussian(1));
    EXPECT_EQ(ScaledGaussian(4, 2, 4), ScaledGaussian(2, 1, 2));
    EXPECT_EQ(ScaledGaussian(2, 2, 3), ScaledGaussian(1, 1, 1));
    EXPECT_EQ(ScaledGaussian(0, 0, 7).k(), 0);
    EXPECT_EQ(ScaledGaussian(1, 0, -2), ScaledGaussian(2));
    // Odd exponent survives even when the numerator is divisible by 1+i.
    EXPECT_EQ(ScaledGaussian(1, 1, 1).k(), 1);
    EXPECT_EQ(ScaledGaussian(2, 0, 1).k(), 1);
}

TEST(scaled_gaussian, arithmetic_matches_complex_oracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int parity = trial % 2;
        const ScaledGaussian a = random_value(rng, parity);
        const ScaledGaussian b = random_value(rng, parity);
        const ScaledGaussian c = random_value(rng, 1 - parity);
        EXPECT_LT(std::abs(approx(a + b) - (approx(a) + approx(b))), 1e-12L);
        EXPECT_LT(std::abs(approx(a - b) - (approx(a) - approx(b))), 1e-12L);
        EXPECT_LT(std::abs(approx(a * b) - approx(a) * approx(b)), 1e-12L);
        EXPECT_LT(std::abs(approx(a * c) - approx(a) * approx(c)), 1e-12L);
        EXPECT_LT(std::abs(approx(a.conj()) - std::conj(approx(a))), 1e-12L);
        EXPECT_NEAR(static_cast<double>(a.norm_sq().to_double()), static_cast<double>(std::norm(approx(a))), 1e-9);
    }
}

TEST(scaled_gaussian, exact_identities) {
    const ScaledGaussian h(1, 0, 1);  // 1/sqrt2
    EXPECT_EQ(h * h, ScaledGaussian(1, 0, 2));
    EXPECT_EQ(h + h, ScaledGaussian(2, 0, 1));
    EXPECT_EQ((h + h) * h, ScaledGaussian(1));
    const ScaledGaussian w(1, 1, 1);  // e^{i pi/4}
    EXPECT_EQ(w * w, ScaledGaussian(0, 1, 0));
    EXPECT_EQ(w * w.conj(), ScaledGaussian(1));
    EXPECT_EQ(ScaledGaussian(3, 4, 0).norm_sq(), Dyadic(25, 0));
    EXPECT_EQ(ScaledGaussian(1, 1, 2).norm_sq(), Dyadic(1, 1));
}

TEST(scaled_gaussian, mixed_parity_sum_throws) {
    try {
        (void)(ScaledGaussian(1, 0, 1) + ScaledGaussian(1));
        FAIL() << "expected MixedParity";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::MixedParity);
    }
    // Zero has no parity.
    EXPECT_EQ(ScaledGaussian(1, 0, 1) + ScaledGaussian(0), ScaledGaussian(1, 0, 1));
}

TEST(scaled_gaussian, overflow_is_detected) {
    const ScaledGaussian big(std::int64_t{1} << 62, 0, 0);
    EXPECT_THROW((void)(big * big), std::overflow_error);
    EXPECT_THROW((void)(big + big), std::overflow_error);
}

TEST(scaled_gaussian, phases) {
    EXPECT_EQ(phase_entry(I4Phase(0), 0), ScaledGaussian(1));
    EXPECT_EQ(phase_entry(I4Phase(1), 0), ScaledGaussian(0, 1, 0));
    EXPECT_EQ(phase_entry(I4Phase(2), 2), ScaledGaussian(-1, 0, 2));
    EXPECT_EQ(phase_entry(I4Phase(3), 1), ScaledGaussian(0, -1, 1));
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            EXPECT_EQ(phase_entry(I4Phase(a), 0) * phase_entry(I4Phase(b), 0), phase_entry(I4Phase(a + b), 0));
        }
    }
    EXPECT_EQ(I4Phase(5), I4Phase(1));
    EXPECT_EQ(I4Phase(-1), I4Phase(3));
    EXPECT_EQ(I4Phase(1).conj(), I4Phase(3));
}

TEST(scaled_gaussian, rendering) {
    EXPECT_EQ(ScaledGaussian(1).str(), "1");
    EXPECT_EQ(ScaledGaussian(0, -1, 0).str(), "-i");
    EXPECT_EQ(ScaledGaussian(1, 1, 2).str(), "(1+i)/2");
    EXPECT_EQ(ScaledGaussian(0, 1, 1).str(), "i/sqrt2");
    EXPECT_EQ(ScaledGaussian(3, -2, 3).str(), "(3-2i)/2*sqrt2");
}

TEST(dyadic, ordering_and_normal_form) {
    EXPECT_EQ(Dyadic(4, 2), Dyadic(1, 0));
    EXPECT_EQ(Dyadic(0, 5), Dyadic(0, 0));
    EXPECT_LT(Dyadic(1, 2), Dyadic(1, 1));
    EXPECT_GT(Dyadic(3, 2), Dyadic(1, 1));
    EXPECT_EQ(Dyadic(3, 2).str(), "3/4");
}

TEST(exact_matrix, eigen_product_matches_oracle) {
    std::mt19937_64 rng(11);
    const Eigen::Index n = 12;
    ExactMatrix a(n, n);
    ExactMatrix b(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = random_value(rng, 0);
            b(i, j) = random_value(rng, 0);
        }
    }
    const ExactMatrix p = mat_product(a, b);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            ScaledGaussian acc(0);
            C ref = 0;
            for (Eigen::Index k = 0; k < n; ++k) {
                acc += a(i, k) * b(k, j);
                ref += approx(a(i, k)) * approx(b(k, j));
            }
            EXPECT_EQ(p(i, j), acc);
            EXPECT_LT(std::abs(approx(p(i, j)) - ref), 1e-9L);
        }
    }
    EXPECT_THROW(mat_product(a, ExactMatrix(3, 3)), Error);
}

TEST(exact_matrix, adjoint_and_unitarity) {
    // Hadamard-like 2x2 over 1/sqrt2 and a phase.
    ExactMatrix h(2, 2);
    h << ScaledGaussian(1, 0, 1), ScaledGaussian(1, 0, 1), ScaledGaussian(0, 1, 1), ScaledGaussian(0, -1, 1);
    EXPECT_TRUE(is_unitary(h));
    const ExactMatrix ha = mat_adjoint(h);
    EXPECT_EQ(ha(0, 1), ScaledGaussian(0, -1, 1));
    EXPECT_EQ(mat_product(ha, h), exact_identity<std::int64_t>(2));
    h(1, 1) = ScaledGaussian(0, 1, 1);
    EXPECT_FALSE(is_unitary(h));
    EXPECT_FALSE(is_unitary(ExactMatrix(2, 3)));
}

TEST(exact_matrix, int128_instantiation) {
    using Big = BasicScaledGaussian<__int128>;
    BasicExactMatrix<__int128> m(2, 2);
    m << Big(1, 0, 1), Big(1, 0, 1), Big(1, 0, 1), Big(-1, 0, 1);
    EXPECT_TRUE(is_unitary(m));
    // 2^60 squared overflows int64 but not __int128.
    const Big huge(static_cast<__int128>(1) << 60, 0, 0);
    EXPECT_TRUE((huge * huge).re() == static_cast<__int128>(1) << 120);
}

TEST(exact_matrix, proportionality) {
    ExactMatrix x(2, 2);
    x << ScaledGaussian(1), ScaledGaussian(0, 1, 0), ScaledGaussian(0), ScaledGaussian(-1);
    const ExactMatrix y = x * ScaledGaussian(0, 1, 0);
    const ProportionalityCheck same = check_proportional(y, x);
    EXPECT_TRUE(same.proportional);
    EXPECT_TRUE(same.unimodular);
    const ProportionalityCheck half = check_proportional(ExactMatrix(x * ScaledGaussian(1, 0, 2)), x);
    EXPECT_TRUE(half.proportional);
    EXPECT_FALSE(half.unimodular);
    ExactMatrix z = x;
    z(1, 1) = ScaledGaussian(1);
    const ProportionalityCheck differ = check_proportional(z, x);
    EXPECT_FALSE(differ.proportional);
    EXPECT_NE(differ.first, differ.second);
}

TEST(exact_matrix, common_exponent) {
    ExactMatrix m(1, 3);
    m << ScaledGaussian(1), ScaledGaussian(1, 1, 2), ScaledGaussian(0);
    EXPECT_EQ(common_exponent(m), 2);
    m(0, 2) = ScaledGaussian(1, 0, 1);
    EXPECT_THROW(common_exponent(m), Error);
}
