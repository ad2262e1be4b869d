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

#include "mumeb/meb.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "mumeb/unitary.hpp"

namespace mumeb {

namespace {

// |x - y| for dyadic rationals.
Dyadic abs_diff(const Dyadic &x, const Dyadic &y) {
    const int den = std::max(x.log2den(), y.log2den());
    const std::int64_t xn = x.num() << (den - x.log2den());
    const std::int64_t yn = y.num() << (den - y.log2den());
    return {xn > yn ? xn - yn : yn - xn, den};
}

}  // namespace

MEBasis::MEBasis(const GaloisRing &ring, ExactMatrix generator)
    : q_(ring.teich_size()), s_(ring.degree()), generator_(std::move(generator)) {
    if (generator_.rows() != static_cast<Eigen::Index>(q_) || generator_.cols() != static_cast<Eigen::Index>(q_)) {
        throw Error(ErrorKind::InvalidGenerator, "generator must be q x q");
    }
    if (!is_unitary(generator_)) {
        throw Error(ErrorKind::InvalidGenerator, "generator is not unitary");
    }
    const Field &f = ring.field();
    const std::size_t dim = q_ * q_;
    states_ = ExactMatrix::Zero(dim, dim);
    for (std::size_t xi = 0; xi < q_; ++xi) {
        for (std::size_t eta = 0; eta < q_; ++eta) {
            const std::size_t col = label(xi, eta, q_);
            for (std::size_t r = 0; r < q_; ++r) {
                const FieldElem fr = f.elem(r);
                const RingElem two_r_xi = ring.elem(TeichIndex(0), ring.phi_inv(fr * f.elem(xi)));
                const ScaledGaussian coeff = phase_entry(ring.lambda(two_r_xi), s_);
                const std::size_t i = (fr + f.elem(eta)).index();
                for (std::size_t j = 0; j < q_; ++j) {
                    states_(i * q_ + j, col) = coeff * generator_(j, r);
                }
            }
        }
    }
}

bool is_meb(const MEBasis &basis) {
    const ExactMatrix &states = basis.states();
    const std::size_t q = basis.q();
    const std::size_t dim = q * q;
    if (static_cast<std::size_t>(states.rows()) != dim || static_cast<std::size_t>(states.cols()) != dim) {
        return false;
    }
    if (!is_unitary(states)) {
        return false;
    }
    const int s = std::countr_zero(q);
    ExactMatrix reshaped(q, q);
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                reshaped(i, j) = states(i * q + j, col).scaled_by_sqrt2_pow(s);
            }
        }
        if (!is_unitary(reshaped)) {
            return false;
        }
    }
    return true;
}

ShortcutResult unbiased_shortcut(const GaloisRing &ring, const ExactMatrix &u, const ExactMatrix &v) {
    const std::size_t q = ring.teich_size();
    if (u.rows() != static_cast<Eigen::Index>(q) || v.rows() != static_cast<Eigen::Index>(q) ||
        u.cols() != u.rows() || v.cols() != v.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "shortcut test needs two q x q matrices");
    }
    const Field &f = ring.field();
    const ExactMatrix w = mat_product(mat_adjoint(u), v);
    const Dyadic one(1, 0);
    ShortcutResult out;
    for (std::size_t xi = 0; xi < q; ++xi) {
        for (std::size_t eta = 0; eta < q; ++eta) {
            ScaledGaussian sum;
            for (std::size_t r = 0; r < q; ++r) {
                const FieldElem fr = f.elem(r);
                const RingElem two_r_xi = ring.elem(TeichIndex(0), ring.phi_inv(fr * f.elem(xi)));
                sum += phase_entry(ring.lambda(two_r_xi), 0) * w(r, (fr + f.elem(eta)).index());
            }
            const Dyadic mod2 = sum.norm_sq();
            if (mod2 != one) {
                out.witness = ShortcutWitness{xi, eta, mod2};
                return out;
            }
        }
    }
    out.unbiased = true;
    return out;
}

BruteforceResult unbiased_bruteforce(const MEBasis &b1, const MEBasis &b2) {
    if (b1.q() != b2.q()) {
        throw Error(ErrorKind::DimensionMismatch, "bases live in different dimensions");
    }
    const std::size_t q = b1.q();
    const ExactMatrix gram = mat_product(mat_adjoint(b1.states()), b2.states());
    const Dyadic target(1, 2 * std::countr_zero(q));
    BruteforceResult out;
    std::optional<Dyadic> worst_dev;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            const Dyadic mod2 = gram(i, j).norm_sq();
            if (mod2 == target) {
                continue;
            }
            const Dyadic dev = abs_diff(mod2, target);
            if (!worst_dev || dev > *worst_dev) {
                worst_dev = dev;
                out.worst = BruteforceWitness{static_cast<std::size_t>(i), static_cast<std::size_t>(j), mod2};
            }
        }
    }
    out.unbiased = !out.worst.has_value();
    return out;
}

VerifyMode parse_verify_mode(const std::string &name) {
    if (name == "shortcut") {
        return VerifyMode::Shortcut;
    }
    if (name == "bruteforce") {
        return VerifyMode::Bruteforce;
    }
    if (name == "both") {
        return VerifyMode::Both;
    }
    throw Error(ErrorKind::InvalidConfig, "unknown mode '" + name + "' (expected shortcut|bruteforce|both)");
}

std::string verify_mode_name(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::Shortcut:
            return "shortcut";
        case VerifyMode::Bruteforce:
            return "bruteforce";
        case VerifyMode::Both:
            return "both";
    }
    return "shortcut";
}

std::size_t VerificationReport::failed_pairs() const {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [](const PairOutcome &p) { return !p.passed() || !p.agree(); }));
}

bool VerificationReport::all_meb() const {
    return std::all_of(meb.begin(), meb.end(), [](bool b) { return b; });
}

bool VerificationReport::ok() const {
    return all_meb() && failed_pairs() == 0;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn &&fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads) {
                fn(i);
            }
        });
    }
}

}  // namespace

VerificationReport verify_mumeb_family(const GaloisRing &ring, const std::vector<Mat2F> &members, VerifyMode mode,
                                       unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    if (members.empty()) {
        throw Error(ErrorKind::EmptySet, "nothing to verify");
    }
    const bool brute = mode != VerifyMode::Shortcut;
    if (brute && ring.degree() > kMaxBruteforceDegree) {
        throw Error(ErrorKind::InvalidConfig, "bruteforce verification is limited to s <= 3");
    }
    VerificationReport report;
    report.members = members;
    report.mode = mode;
    const std::size_t n = members.size();

    std::vector<ExactMatrix> unitaries(n);
    parallel_for(n, threads, [&](std::size_t i) { unitaries[i] = build_va(ring, members[i]); });

    const bool materialize = ring.degree() <= kMaxBruteforceDegree;
    report.meb_check = materialize ? "materialized" : "unitary";
    std::vector<std::optional<MEBasis>> bases(n);
    std::vector<char> meb_flags(n, 0);
    parallel_for(n, threads, [&](std::size_t i) {
        if (!is_unitary(unitaries[i])) {
            return;
        }
        if (materialize) {
            bases[i].emplace(ring, unitaries[i]);
            meb_flags[i] = is_meb(*bases[i]) ? 1 : 0;
        } else {
            meb_flags[i] = 1;
        }
    });
    report.meb.assign(meb_flags.begin(), meb_flags.end());

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            PairOutcome pair;
            pair.i = i;
            pair.j = j;
            report.pairs.push_back(pair);
        }
    }
    parallel_for(report.pairs.size(), threads, [&](std::size_t p) {
        PairOutcome &out = report.pairs[p];
        if (mode != VerifyMode::Bruteforce) {
            const ShortcutResult r = unbiased_shortcut(ring, unitaries[out.i], unitaries[out.j]);
            out.shortcut = r.unbiased;
            out.shortcut_witness = r.witness;
        }
        if (brute) {
            if (!bases[out.i] || !bases[out.j]) {
                out.bruteforce = false;
                return;
            }
            const BruteforceResult r = unbiased_bruteforce(*bases[out.i], *bases[out.j]);
            out.bruteforce = r.unbiased;
            out.bruteforce_witness = r.worst;
        }
    });
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

TheoremDirection check_theorem_direction(const GaloisRing &ring, const Mat2F &a, const Mat2F &b) {
    TheoremDirection out;
    out.trace_nonzero = !rel_trace_pair(a, b).is_zero();
    out.unbiased = unbiased_shortcut(ring, build_va(ring, a), build_va(ring, b)).unbiased;
    return out;
}

}  // namespace mumeb
