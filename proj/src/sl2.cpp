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

#include "mumeb/sl2.hpp"

#include <sstream>

namespace mumeb {

Mat2F::Mat2F(FieldElem alpha, FieldElem beta, FieldElem gamma, FieldElem delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
    const Field &f = alpha_.field();
    f.check_same(beta_);
    f.check_same(gamma_);
    f.check_same(delta_);
    if (alpha_ * delta_ + beta_ * gamma_ != f.one()) {
        throw Error(ErrorKind::InvalidMatrix, "determinant is not 1: " + str());
    }
}

Mat2F Mat2F::identity(const Field &field) {
    return {field.one(), field.zero(), field.zero(), field.one()};
}

Mat2F Mat2F::swap(const Field &field) {
    return {field.zero(), field.one(), field.one(), field.zero()};
}

Mat2F Mat2F::from_indices(const Field &field, const std::array<std::size_t, 4> &idx) {
    return {field.elem(idx[0]), field.elem(idx[1]), field.elem(idx[2]), field.elem(idx[3])};
}

std::string Mat2F::str() const {
    std::ostringstream out;
    const auto idx = indices();
    out << "[" << idx[0] << " " << idx[1] << "; " << idx[2] << " " << idx[3] << "]";
    return out.str();
}

Mat2F mat_mul(const Mat2F &a, const Mat2F &b) {
    return {a.alpha() * b.alpha() + a.beta() * b.gamma(), a.alpha() * b.beta() + a.beta() * b.delta(),
            a.gamma() * b.alpha() + a.delta() * b.gamma(), a.gamma() * b.beta() + a.delta() * b.delta()};
}

Mat2F mat_inv(const Mat2F &a) {
    return {a.delta(), a.beta(), a.gamma(), a.alpha()};
}

FieldElem rel_trace_pair(const Mat2F &a, const Mat2F &b) {
    return a.beta() * b.gamma() + b.beta() * a.gamma() + b.alpha() * a.delta() + a.alpha() * b.delta();
}

ExclusionCheck is_trace_zero_excluded(const std::vector<Mat2F> &members) {
    if (members.empty()) {
        throw Error(ErrorKind::EmptySet, "trace-zero excluded subsets are non-empty");
    }
    const Field &f = members.front().field();
    for (const Mat2F &m : members) {
        f.check_same(m.alpha());
    }
    ExclusionCheck out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (rel_trace_pair(members[i], members[j]).is_zero()) {
                out.violation = {i, j};
                return out;
            }
        }
    }
    out.excluded = true;
    return out;
}

ExcludedSubset::ExcludedSubset(std::vector<Mat2F> members) : members_(std::move(members)) {
    const ExclusionCheck check = is_trace_zero_excluded(members_);
    if (!check.excluded) {
        const auto [i, j] = *check.violation;
        throw Error(ErrorKind::InvalidMatrix, "members " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " have trace(A^-1 B) = 0");
    }
}

ExcludedSubset family_symmetric(const Field &field) {
    // Symmetric [a c; c b] with (a, b) running over the q + 1 points of the
    // projective line: (1, xi^k), then (1, 0) and (0, 1). The k = 0 member is I.
    const long long order = static_cast<long long>(field.size()) - 1;
    const FieldElem one = field.one();
    const FieldElem zero = field.zero();
    std::vector<Mat2F> members;
    members.reserve(static_cast<std::size_t>(order) + 2);
    for (long long k = 0; k < order; ++k) {
        const FieldElem xk = field.xi_pow(k);
        const FieldElem r = sqrt(one + xk);
        members.emplace_back(one, r, r, xk);
    }
    members.emplace_back(one, one, one, zero);
    members.emplace_back(zero, one, one, one);
    return ExcludedSubset(std::move(members));
}

ExcludedSubset family_triple(const Field &field) {
    const long long order = static_cast<long long>(field.size()) - 1;
    const FieldElem zero = field.zero();
    std::vector<Mat2F> members;
    members.reserve(3 * order);
    for (long long k = 0; k < order; ++k) {
        members.emplace_back(field.xi_pow(k), zero, zero, field.xi_pow(-k));
    }
    for (long long k = 0; k < order; ++k) {
        members.emplace_back(field.xi_pow(k), field.xi_pow(k), field.xi_pow(-k), zero);
    }
    for (long long k = 0; k < order; ++k) {
        members.emplace_back(zero, field.xi_pow(k), field.xi_pow(-k), field.xi_pow(-k));
    }
    return ExcludedSubset(std::move(members));
}

std::vector<Mat2F> sl2_enumerate(const Field &field) {
    const std::size_t q = field.size();
    if (q > kMaxEnumerableQ) {
        throw Error(ErrorKind::EnumerationTooLarge,
                    "SL(2, " + std::to_string(q) + ") has " + std::to_string(sl2_order(q)) + " elements");
    }
    std::vector<Mat2F> out;
    out.reserve(sl2_order(q));
    const auto elems = field.elements();
    for (const FieldElem &a : elems) {
        for (const FieldElem &b : elems) {
            for (const FieldElem &c : elems) {
                if (!a.is_zero()) {
                    out.emplace_back(a, b, c, (field.one() + b * c) / a);
                } else if (b * c == field.one()) {
                    for (const FieldElem &d : elems) {
                        out.emplace_back(a, b, c, d);
                    }
                }
            }
        }
    }
    return out;
}

Mat2F random_sl2(const Field &field, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> pick(0, field.size() - 1);
    FieldElem a = field.zero();
    FieldElem c = field.zero();
    while (a.is_zero() && c.is_zero()) {
        a = field.elem(pick(rng));
        c = field.elem(pick(rng));
    }
    // Particular solution of a d + b c = 1, then shift along the kernel t (a, c).
    FieldElem b = a.is_zero() ? inverse(c) : field.zero();
    FieldElem d = a.is_zero() ? field.zero() : inverse(a);
    const FieldElem t = field.elem(pick(rng));
    return {a, b + t * a, c, d + t * c};
}

}  // namespace mumeb
