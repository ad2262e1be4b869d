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

#include <Eigen/Core>
#include <optional>
#include <utility>

#include "mumeb/error.hpp"
#include "mumeb/scaled_gaussian.hpp"

namespace Eigen {

// Exact scalars: no rounding, so epsilon/precision are zero and isApprox-style
// helpers must not be used on these matrices; compare with operator== instead.
template <typename Int>
struct NumTraits<mumeb::BasicScaledGaussian<Int>> : GenericNumTraits<mumeb::BasicScaledGaussian<Int>> {
    using Real = mumeb::BasicScaledGaussian<Int>;
    using NonInteger = mumeb::BasicScaledGaussian<Int>;
    using Literal = mumeb::BasicScaledGaussian<Int>;
    using Nested = mumeb::BasicScaledGaussian<Int>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 6,
        MulCost = 8,
    };
    static inline Real epsilon() {
        return Real(0);
    }
    static inline Real dummy_precision() {
        return Real(0);
    }
    static inline int digits10() {
        return 0;
    }
};

}  // namespace Eigen

namespace mumeb {

template <typename Int>
using BasicExactMatrix = Eigen::Matrix<BasicScaledGaussian<Int>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Int>
using BasicExactVector = Eigen::Matrix<BasicScaledGaussian<Int>, Eigen::Dynamic, 1>;

/// q x q matrix whose row/column r is the field element at canonical index r.
using ExactMatrix = BasicExactMatrix<std::int64_t>;
using ExactVector = BasicExactVector<std::int64_t>;

template <typename Derived>
auto mat_adjoint(const Eigen::MatrixBase<Derived> &m) {
    using Scalar = typename Derived::Scalar;
    return m.unaryExpr([](const Scalar &x) { return x.conj(); }).transpose();
}

template <typename DerivedA, typename DerivedB>
auto mat_product(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product of incompatible shapes");
    }
    using Scalar = typename DerivedA::Scalar;
    BasicExactMatrix<typename Scalar::IntType> out = a * b;
    return out;
}

template <typename Int>
BasicExactMatrix<Int> exact_identity(Eigen::Index n) {
    BasicExactMatrix<Int> m = BasicExactMatrix<Int>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = BasicScaledGaussian<Int>(1);
    }
    return m;
}

/// Exact test M* M == I.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived> &m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    using Int = typename Derived::Scalar::IntType;
    const BasicExactMatrix<Int> gram = mat_adjoint(m) * m;
    return gram == exact_identity<Int>(m.rows());
}

/// Smallest common sqrt(2)-exponent k such that every entry is z * 2^(-k/2)
/// with Gaussian-integer z. Throws MixedParity if entries disagree in parity.
template <typename Derived>
int common_exponent(const Eigen::MatrixBase<Derived> &m) {
    int k = -1;
    int parity = -1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto &v = m(i, j);
            if (v.is_zero()) {
                continue;
            }
            if (parity == -1) {
                parity = v.k() & 1;
            } else if ((v.k() & 1) != parity) {
                throw Error(ErrorKind::MixedParity, "matrix mixes odd and even sqrt(2) exponents");
            }
            k = std::max(k, v.k());
        }
    }
    return k < 0 ? 0 : k;
}

/// Certificate that X != z * Y for every complex z, or the ratio when one exists.
struct ProportionalityCheck {
    bool proportional = false;
    bool unimodular = false;  // |z| == 1 when proportional
    // Positions (row, col) whose ratios X/Y differ; set when !proportional.
    std::pair<Eigen::Index, Eigen::Index> first{-1, -1};
    std::pair<Eigen::Index, Eigen::Index> second{-1, -1};
};

/// Decides X = z Y exactly by cross-multiplication: X[p] Y[p0] == X[p0] Y[p]
/// for a pivot p0 with Y[p0] != 0, plus zero-pattern agreement.
template <typename DerivedX, typename DerivedY>
ProportionalityCheck check_proportional(const Eigen::MatrixBase<DerivedX> &x,
                                        const Eigen::MatrixBase<DerivedY> &y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "proportionality of differently shaped matrices");
    }
    ProportionalityCheck out;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> pivot;
    for (Eigen::Index i = 0; i < y.rows() && !pivot; ++i) {
        for (Eigen::Index j = 0; j < y.cols(); ++j) {
            if (!y(i, j).is_zero()) {
                pivot = {i, j};
                break;
            }
        }
    }
    if (!pivot) {
        // Y == 0: X = zY only if X == 0 too.
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                if (!x(i, j).is_zero()) {
                    out.first = {i, j};
                    out.second = {i, j};
                    return out;
                }
            }
        }
        out.proportional = true;
        return out;
    }
    const auto [pi, pj] = *pivot;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            if (x(i, j) * y(pi, pj) != x(pi, pj) * y(i, j)) {
                out.first = *pivot;
                out.second = {i, j};
                return out;
            }
        }
    }
    out.proportional = true;
    out.unimodular = x(pi, pj).norm_sq() == y(pi, pj).norm_sq();
    return out;
}

}  // namespace mumeb
