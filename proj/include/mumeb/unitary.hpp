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

#include <optional>
#include <utility>

#include "mumeb/exact_matrix.hpp"
#include "mumeb/galois_ring.hpp"
#include "mumeb/sl2.hpp"

namespace mumeb {

/// The unitary V_A attached to A = [alpha beta; gamma delta] in SL(2, F).
///
/// For beta != 0 the (m, n) entry is lambda(beta^-1 (alpha n^2 + 2mn + delta m^2)) / sqrt(q),
/// with every field element lifted to T_s and the argument evaluated in R. For
/// beta == 0 it is the exact product V_L V_K with L = [0 1; 1 0] and
/// K = [gamma delta; alpha 0], cross-checked against va_lower_closed_form().
ExactMatrix build_va(const GaloisRing &ring, const Mat2F &a);

/// Closed form for beta == 0: entry (m, n) is lambda(mn gamma) when m = alpha n, else 0.
ExactMatrix va_lower_closed_form(const GaloisRing &ring, const Mat2F &a);

/// H_{xi,eta}: entry (r + eta, r) = lambda(2 r xi), zero elsewhere.
ExactMatrix build_pauli(const GaloisRing &ring, const FieldElem &xi, const FieldElem &eta);

/// Shift: (m, n) = 1 iff m = n + a.
ExactMatrix build_xa(const GaloisRing &ring, const FieldElem &a);
/// Diagonal phase: (m, m) = lambda(2 m b).
ExactMatrix build_zb(const GaloisRing &ring, const FieldElem &b);
/// D_v for v = (a, b): (n + a, n) = lambda(ab + 2bn). Verified against
/// lambda(ab) X_a Z_b on construction.
ExactMatrix build_dv(const GaloisRing &ring, const FieldElem &a, const FieldElem &b);

/// A v for v = (a, b): (alpha a + beta b, gamma a + delta b).
std::pair<FieldElem, FieldElem> apply(const Mat2F &a, const std::pair<FieldElem, FieldElem> &v);

struct CovarianceReport {
    /// +1 or -1 when V_A D_v V_A^* = sign * D_{Av}; empty otherwise.
    std::optional<int> sign;
    /// lambda(2 sqrt(alpha beta a b)(gamma a + delta b) + 2 sqrt(gamma delta a b)(alpha a + beta b)).
    I4Phase predicted;
    /// lambda(c) from expanding both sides directly; see covariance_phase().
    I4Phase derived;
    /// First entry (row, col) where the two sides differ by something other than a sign.
    std::optional<std::pair<Eigen::Index, Eigen::Index>> counterexample;

    bool predicted_matches() const {
        return sign && predicted.is_real() && predicted.sign() == *sign;
    }
    bool derived_matches() const {
        return sign && derived.is_real() && derived.sign() == *sign;
    }
};

/// Phase p with V_A D_v V_A^* = p D_{Av}, in closed form. For beta != 0 it is
/// lambda(ab + beta^-1 alpha a^2 + a'b' - beta^-1 delta a'^2) with (a', b') = Av
/// and all field values lifted to T_s; for beta == 0 it composes through V_L V_K.
/// The sqrt-based sign lambda(2 sqrt(alpha beta ab)(gamma a + delta b) +
/// 2 sqrt(gamma delta ab)(alpha a + beta b)) omits terms and is wrong in
/// general, e.g. for A = [0 1; 1 0] the true phase is lambda(2ab).
I4Phase covariance_phase(const GaloisRing &ring, const Mat2F &a, const std::pair<FieldElem, FieldElem> &v);

/// Computes V_A D_v V_A^* and D_{Av} exactly and compares them.
CovarianceReport check_clifford_covariance(const GaloisRing &ring, const Mat2F &a,
                                           const std::pair<FieldElem, FieldElem> &v);

}  // namespace mumeb
