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
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mumeb/finite_field.hpp"

namespace mumeb {

/// [alpha beta; gamma delta] over GF(2^s) with determinant 1.
class Mat2F {
   public:
    /// Throws InvalidMatrix unless alpha*delta + beta*gamma == 1.
    Mat2F(FieldElem alpha, FieldElem beta, FieldElem gamma, FieldElem delta);

    static Mat2F identity(const Field &field);
    /// [0 1; 1 0].
    static Mat2F swap(const Field &field);
    static Mat2F from_indices(const Field &field, const std::array<std::size_t, 4> &idx);

    const FieldElem &alpha() const {
        return alpha_;
    }
    const FieldElem &beta() const {
        return beta_;
    }
    const FieldElem &gamma() const {
        return gamma_;
    }
    const FieldElem &delta() const {
        return delta_;
    }
    const Field &field() const {
        return alpha_.field();
    }

    std::array<std::size_t, 4> indices() const {
        return {alpha_.index(), beta_.index(), gamma_.index(), delta_.index()};
    }
    FieldElem trace() const {
        return alpha_ + delta_;
    }
    std::string str() const;

    bool operator==(const Mat2F &other) const = default;
    /// Lexicographic in canonical indices (alpha, beta, gamma, delta).
    std::strong_ordering operator<=>(const Mat2F &other) const {
        return indices() <=> other.indices();
    }

   private:
    FieldElem alpha_, beta_, gamma_, delta_;
};

Mat2F mat_mul(const Mat2F &a, const Mat2F &b);
/// Adjugate; in characteristic 2 with det 1 this is [delta beta; gamma alpha].
Mat2F mat_inv(const Mat2F &a);

/// trace(A^-1 B) = beta1 gamma2 + beta2 gamma1 + alpha2 delta1 + alpha1 delta2.
FieldElem rel_trace_pair(const Mat2F &a, const Mat2F &b);

struct ExclusionCheck {
    bool excluded = false;
    /// First (i, j), i < j, with trace(A_i^-1 A_j) == 0; duplicates are caught here.
    std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Throws EmptySet on an empty list and DomainMismatch on mixed fields.
ExclusionCheck is_trace_zero_excluded(const std::vector<Mat2F> &members);

/// An ordered list of distinct SL(2, F) matrices whose pairwise relative traces
/// are all nonzero.
class ExcludedSubset {
   public:
    /// Throws InvalidMatrix if the list is not trace-zero excluded.
    explicit ExcludedSubset(std::vector<Mat2F> members);

    const std::vector<Mat2F> &members() const {
        return members_;
    }
    std::size_t size() const {
        return members_.size();
    }
    const Mat2F &operator[](std::size_t i) const {
        return members_[i];
    }

   private:
    std::vector<Mat2F> members_;
};

/// [1 r_k; r_k xi^k] with r_k = sqrt(1 + xi^k), 0 <= k <= q-2, followed by
/// [1 1; 1 0] and [0 1; 1 1] (q + 1 matrices, the first is I).
ExcludedSubset family_symmetric(const Field &field);

/// A_k = diag(xi^k, xi^-k), B_k = [xi^k xi^k; xi^-k 0], C_k = [0 xi^k; xi^-k xi^-k]
/// for 0 <= k <= q-2, listed as A_0..A_{q-2}, B_0.., C_0.. (3(q-1) matrices).
ExcludedSubset family_triple(const Field &field);

/// Largest field for which the whole group is enumerated.
inline constexpr std::size_t kMaxEnumerableQ = 64;

/// Every element of SL(2, F) exactly once, in lexicographic index order.
/// Throws EnumerationTooLarge for q > 64.
std::vector<Mat2F> sl2_enumerate(const Field &field);

/// |SL(2, q)| = q (q^2 - 1).
inline std::size_t sl2_order(std::size_t q) {
    return q * (q * q - 1);
}

/// Uniform random element of SL(2, F).
Mat2F random_sl2(const Field &field, std::mt19937_64 &rng);

}  // namespace mumeb
