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

#include "mumeb/unitary.hpp"

namespace mumeb {

namespace {

void check_ring_field(const GaloisRing &ring, const Mat2F &a) {
    ring.field().check_same(a.alpha());
}

ExactMatrix va_generic(const GaloisRing &ring, const Mat2F &a) {
    const std::size_t q = ring.teich_size();
    const int s = ring.degree();
    const TeichIndex alpha = ring.phi_inv(a.alpha());
    const TeichIndex delta = ring.phi_inv(a.delta());
    const RingElem beta_inv = ring.teich(ring.teich_inv(ring.phi_inv(a.beta())));
    ExactMatrix v(q, q);
    for (std::size_t m = 0; m < q; ++m) {
        const TeichIndex tm(m);
        const RingElem dm2 = ring.teich(ring.teich_mul(delta, ring.teich_square(tm)));
        for (std::size_t n = 0; n < q; ++n) {
            const TeichIndex tn(n);
            const RingElem an2 = ring.teich(ring.teich_mul(alpha, ring.teich_square(tn)));
            const RingElem two_mn = ring.elem(TeichIndex(0), ring.teich_mul(tm, tn));
            const RingElem arg = beta_inv * (an2 + two_mn + dm2);
            v(m, n) = phase_entry(ring.lambda(arg), s);
        }
    }
    return v;
}

}  // namespace

ExactMatrix va_lower_closed_form(const GaloisRing &ring, const Mat2F &a) {
    check_ring_field(ring, a);
    if (!a.beta().is_zero()) {
        throw Error(ErrorKind::InvalidMatrix, "closed form applies to beta == 0 only");
    }
    const Field &f = ring.field();
    const std::size_t q = ring.teich_size();
    ExactMatrix v = ExactMatrix::Zero(q, q);
    for (std::size_t n = 0; n < q; ++n) {
        const FieldElem fn = f.elem(n);
        const FieldElem fm = a.alpha() * fn;
        v(fm.index(), n) = phase_entry(ring.lambda(fm * fn * a.gamma()), 0);
    }
    return v;
}

ExactMatrix build_va(const GaloisRing &ring, const Mat2F &a) {
    check_ring_field(ring, a);
    if (!a.beta().is_zero()) {
        return va_generic(ring, a);
    }
    const Field &f = ring.field();
    const Mat2F l = Mat2F::swap(f);
    const Mat2F k(a.gamma(), a.delta(), a.alpha(), f.zero());
    ExactMatrix v = mat_product(va_generic(ring, l), va_generic(ring, k));
    if (v != va_lower_closed_form(ring, a)) {
        throw Error(ErrorKind::InvariantViolation, "V_L V_K disagrees with the beta = 0 closed form for " + a.str());
    }
    return v;
}

ExactMatrix build_pauli(const GaloisRing &ring, const FieldElem &xi, const FieldElem &eta) {
    const Field &f = ring.field();
    f.check_same(xi);
    f.check_same(eta);
    const std::size_t q = ring.teich_size();
    ExactMatrix h = ExactMatrix::Zero(q, q);
    for (std::size_t r = 0; r < q; ++r) {
        const FieldElem fr = f.elem(r);
        const RingElem two_r_xi = ring.elem(TeichIndex(0), ring.phi_inv(fr * xi));
        h((fr + eta).index(), r) = phase_entry(ring.lambda(two_r_xi), 0);
    }
    return h;
}

ExactMatrix build_xa(const GaloisRing &ring, const FieldElem &a) {
    const Field &f = ring.field();
    f.check_same(a);
    const std::size_t q = ring.teich_size();
    ExactMatrix x = ExactMatrix::Zero(q, q);
    for (std::size_t n = 0; n < q; ++n) {
        x((f.elem(n) + a).index(), n) = ScaledGaussian(1);
    }
    return x;
}

ExactMatrix build_zb(const GaloisRing &ring, const FieldElem &b) {
    const Field &f = ring.field();
    f.check_same(b);
    const std::size_t q = ring.teich_size();
    ExactMatrix z = ExactMatrix::Zero(q, q);
    for (std::size_t m = 0; m < q; ++m) {
        const RingElem two_mb = ring.elem(TeichIndex(0), ring.phi_inv(f.elem(m) * b));
        z(m, m) = phase_entry(ring.lambda(two_mb), 0);
    }
    return z;
}

ExactMatrix build_dv(const GaloisRing &ring, const FieldElem &a, const FieldElem &b) {
    const Field &f = ring.field();
    f.check_same(a);
    f.check_same(b);
    const std::size_t q = ring.teich_size();
    const RingElem ab = ring.lift(a * b);
    ExactMatrix d = ExactMatrix::Zero(q, q);
    for (std::size_t n = 0; n < q; ++n) {
        const FieldElem fn = f.elem(n);
        const RingElem two_bn = ring.elem(TeichIndex(0), ring.phi_inv(b * fn));
        d((fn + a).index(), n) = phase_entry(ring.lambda(ab + two_bn), 0);
    }
    ExactMatrix factored = mat_product(build_xa(ring, a), build_zb(ring, b));
    factored *= phase_entry(ring.lambda(ab), 0);
    if (d != factored) {
        throw Error(ErrorKind::InvariantViolation, "D_v closed form disagrees with lambda(ab) X_a Z_b");
    }
    return d;
}

std::pair<FieldElem, FieldElem> apply(const Mat2F &a, const std::pair<FieldElem, FieldElem> &v) {
    return {a.alpha() * v.first + a.beta() * v.second, a.gamma() * v.first + a.delta() * v.second};
}

I4Phase covariance_phase(const GaloisRing &ring, const Mat2F &a, const std::pair<FieldElem, FieldElem> &v) {
    check_ring_field(ring, a);
    if (a.beta().is_zero()) {
        // A = L K with K = [gamma delta; alpha 0]; the phases compose.
        const Field &f = a.field();
        const Mat2F k(a.gamma(), a.delta(), a.alpha(), f.zero());
        return covariance_phase(ring, k, v) * covariance_phase(ring, Mat2F::swap(f), apply(k, v));
    }
    // V_A D_v = lambda(c) D_{Av} V_A with c = ab + b^-1 alpha a^2 + a'b' - b^-1 delta a'^2 on lifts.
    const auto [x, y] = v;
    const auto [x2, y2] = apply(a, v);
    const RingElem binv = ring.lift(inverse(a.beta()));
    const RingElem lx = ring.lift(x);
    const RingElem lx2 = ring.lift(x2);
    const RingElem c = lx * ring.lift(y) + binv * ring.lift(a.alpha()) * lx * lx + lx2 * ring.lift(y2) -
                       binv * ring.lift(a.delta()) * lx2 * lx2;
    return ring.lambda(c);
}

CovarianceReport check_clifford_covariance(const GaloisRing &ring, const Mat2F &a,
                                           const std::pair<FieldElem, FieldElem> &v) {
    check_ring_field(ring, a);
    const auto &[x, y] = v;
    const ExactMatrix va = build_va(ring, a);
    const ExactMatrix lhs = mat_product(mat_product(va, build_dv(ring, x, y)), mat_adjoint(va));
    const auto [ax, ay] = apply(a, v);
    const ExactMatrix rhs = build_dv(ring, ax, ay);

    CovarianceReport report;
    const FieldElem xy = x * y;
    const FieldElem phase_arg = sqrt(a.alpha() * a.beta() * xy) * (a.gamma() * x + a.delta() * y) +
                                sqrt(a.gamma() * a.delta() * xy) * (a.alpha() * x + a.beta() * y);
    report.predicted = ring.lambda(ring.elem(TeichIndex(0), ring.phi_inv(phase_arg)));
    report.derived = covariance_phase(ring, a, v);

    if (lhs == rhs) {
        report.sign = 1;
    } else if (lhs == ExactMatrix(-rhs)) {
        report.sign = -1;
    } else {
        for (Eigen::Index i = 0; i < lhs.rows() && !report.counterexample; ++i) {
            for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
                if (lhs(i, j) != rhs(i, j) && lhs(i, j) != -rhs(i, j)) {
                    report.counterexample = {i, j};
                    break;
                }
            }
        }
        // Entrywise equal up to sign, but the sign is not global.
        for (Eigen::Index i = 0; i < lhs.rows() && !report.counterexample; ++i) {
            for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
                if (lhs(i, j) != rhs(i, j)) {
                    report.counterexample = {i, j};
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace mumeb
