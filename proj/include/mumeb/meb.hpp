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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "mumeb/exact_matrix.hpp"
#include "mumeb/galois_ring.hpp"
#include "mumeb/sl2.hpp"

namespace mumeb {

/// The q^2 states (H_{xi,eta} (x) I) |Psi_U> for xi, eta in F.
///
/// States are the columns of `states()`: column xi.index() * q + eta.index(),
/// row i * q + j for the tensor basis vector e_i (x) e_j. State (xi, eta) has
/// entry lambda(2 r xi) U(j, r) / sqrt(q) at row (r + eta) * q + j.
class MEBasis {
   public:
    /// Throws InvalidGenerator unless `generator` is exactly unitary and q x q.
    MEBasis(const GaloisRing &ring, ExactMatrix generator);

    std::size_t q() const {
        return q_;
    }
    const ExactMatrix &generator() const {
        return generator_;
    }
    const ExactMatrix &states() const {
        return states_;
    }
    ExactMatrix &mutable_states() {
        return states_;
    }
    static std::size_t label(std::size_t xi, std::size_t eta, std::size_t q) {
        return xi * q + eta;
    }

   private:
    std::size_t q_;
    int s_;
    ExactMatrix generator_;
    ExactMatrix states_;
};

inline MEBasis build_meb(const GaloisRing &ring, const ExactMatrix &u) {
    return MEBasis(ring, u);
}

/// Exact orthonormality of all q^2 states, and maximal entanglement of each:
/// the q x q reshape M of a state satisfies (sqrt(q) M)^* (sqrt(q) M) = I.
bool is_meb(const MEBasis &basis);

struct ShortcutWitness {
    std::size_t xi = 0;
    std::size_t eta = 0;
    Dyadic mod2;
};

struct ShortcutResult {
    bool unbiased = false;
    std::optional<ShortcutWitness> witness;
};

/// With W = U^* V, checks |sum_r lambda(2 r xi) W(r, r + eta)|^2 == 1 for all
/// (xi, eta); stops at the first failure.
ShortcutResult unbiased_shortcut(const GaloisRing &ring, const ExactMatrix &u, const ExactMatrix &v);

struct BruteforceWitness {
    std::size_t state1 = 0;
    std::size_t state2 = 0;
    Dyadic mod2;
};

struct BruteforceResult {
    bool unbiased = false;
    /// Entry with the largest |<phi|psi>|^2 - 1/q^2|, when the bases are not unbiased.
    std::optional<BruteforceWitness> worst;
};

/// All q^2 x q^2 inner products, each |<phi_i|psi_j>|^2 compared with 1/q^2.
BruteforceResult unbiased_bruteforce(const MEBasis &b1, const MEBasis &b2);

enum class VerifyMode { Shortcut, Bruteforce, Both };

VerifyMode parse_verify_mode(const std::string &name);
std::string verify_mode_name(VerifyMode mode);

/// Brute-force bases are materialized only up to this degree (dimension 64).
inline constexpr int kMaxBruteforceDegree = 3;

struct PairOutcome {
    std::size_t i = 0;
    std::size_t j = 0;
    std::optional<bool> shortcut;
    std::optional<bool> bruteforce;
    std::optional<ShortcutWitness> shortcut_witness;
    std::optional<BruteforceWitness> bruteforce_witness;

    /// Unbiased by every test that ran, and the tests agree.
    bool passed() const {
        return shortcut.value_or(true) && bruteforce.value_or(true);
    }
    bool agree() const {
        return !shortcut || !bruteforce || *shortcut == *bruteforce;
    }
};

struct VerificationReport {
    std::vector<Mat2F> members;
    VerifyMode mode = VerifyMode::Shortcut;
    /// "materialized" when every basis was built and checked state by state,
    /// "unitary" when only the generators' unitarity was checked (large q).
    std::string meb_check;
    std::vector<bool> meb;
    std::vector<PairOutcome> pairs;  // all unordered pairs, (0,1), (0,2), ...
    std::chrono::milliseconds elapsed{0};

    std::size_t failed_pairs() const;
    bool all_meb() const;
    bool ok() const;
};

/// Builds V_A for every member, checks each is an MEB generator and every
/// unordered pair unbiased. Both mode fails any pair whose two tests disagree.
/// Work is split across `threads` workers; the report does not depend on it.
VerificationReport verify_mumeb_family(const GaloisRing &ring, const std::vector<Mat2F> &members, VerifyMode mode,
                                       unsigned threads = 1);

struct TheoremDirection {
    bool trace_nonzero = false;
    bool unbiased = false;
};

/// Evaluates trace(A^-1 B) != 0 and the shortcut test on (V_A, V_B).
TheoremDirection check_theorem_direction(const GaloisRing &ring, const Mat2F &a, const Mat2F &b);

}  // namespace mumeb
