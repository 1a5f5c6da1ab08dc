#pragma once

// Numeric face-type layer on the 2-dimensional evaluation module: the
// trigonometric R matrix, its elliptic deformation with a dynamical parameter,
// the spectral twistor between them (closed hypergeometric form and the
// downward difference recursion), and residual functions for the gauge
// relation, the dynamical Yang-Baxter equation, the nome degenerations, and
// the L-operator exchange relation.  Basis order is v1v1, v1v2, v2v1, v2v2.

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qtwist/errors.hpp"
#include "qtwist/matrix.hpp"
#include "qtwist/qseries.hpp"

namespace qtwist {

using CxMatrix = SpectralMatrix<Cx>;

struct FaceParams {
    double q = 0.5;  // deformation parameter, 0 < q < 1
    double p = 0.0;  // elliptic nome, 0 <= p < 1
    Cx w = 0.0;      // dynamical parameter; nonzero whenever p > 0

    void validate() const {
        if (!(q > 0.0 && q < 1.0)) throw InvalidParams("FaceParams: need 0 < q < 1");
        if (!(p >= 0.0 && p < 1.0)) throw InvalidParams("FaceParams: need 0 <= p < 1");
        if (p > 0.0 && w == Cx(0.0))
            throw InvalidParams("FaceParams: dynamical parameter must be nonzero when p > 0");
    }
};

inline CxMatrix swap_matrix() {
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = 1.0;
    m.at(1, 2) = 1.0;
    m.at(2, 1) = 1.0;
    m.at(3, 3) = 1.0;
    return m;
}

inline CxMatrix diag4(Cx a, Cx b, Cx c, Cx d) {
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    m.at(3, 3) = d;
    return m;
}

// scalar prefactor of the trigonometric R matrix
inline Cx rho_trig(Cx z, double q) {
    double q4 = q * q * q * q;
    Cx num = qpoch_inf(q * q * z, q4);
    return (num * num) / (std::sqrt(q) * qpoch_inf(z, q4) * qpoch_inf(q4 * z, q4));
}

// trigonometric R matrix; at z = 0 it reduces to the constant quasi-triangular
// image on the tensor square of the 2-dimensional module
inline CxMatrix r_trig(Cx z, double q) {
    Cx b = (1.0 - z) * q / (1.0 - q * q * z);
    Cx c = (1.0 - q * q) / (1.0 - q * q * z);
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = 1.0;
    m.at(1, 1) = b;
    m.at(1, 2) = c;
    m.at(2, 1) = z * c;
    m.at(2, 2) = b;
    m.at(3, 3) = 1.0;
    return m.scaled(rho_trig(z, q));
}

// scalar prefactor of the elliptic R matrix; degenerates to rho_trig at p = 0
inline Cx rho_ell(Cx z, double q, double p) {
    if (z == Cx(0.0)) throw ZeroArgument("rho_ell: argument must be nonzero");
    double q4 = q * q * q * q;
    Cx zi = 1.0 / z;
    Cx num = multipoch_inf(q * q * z, p, q4);
    Cx den = multipoch_inf(z, p, q4) * multipoch_inf(q4 * z, p, q4);
    Cx numi = multipoch_inf(p * zi, p, q4) * multipoch_inf(p * q4 * zi, p, q4);
    Cx deni = multipoch_inf(p * q * q * zi, p, q4);
    return (num * num * numi) / (std::sqrt(q) * den * deni * deni);
}

// elliptic R matrix with dynamical parameter w.  At p = 0 every theta factor
// degenerates to (1 - argument) and the entries tied to the p/w lattice
// collapse to their limits, which keeps the matrix defined there (including
// at w = 0, where it coincides with the trigonometric R matrix).
inline CxMatrix r_elliptic(Cx z, const FaceParams& fp) {
    fp.validate();
    double q = fp.q, p = fp.p;
    Cx w = fp.w, q2 = q * q;
    Cx b, bb, c, cb;
    if (p == 0.0) {
        Cx bt = q * (1.0 - z) / (1.0 - q2 * z);
        b = bt;
        bb = bt * (1.0 - w * q2) * (1.0 - w / q2) / ((1.0 - w) * (1.0 - w));
        c = (1.0 - q2) * (1.0 - w * z) / ((1.0 - w) * (1.0 - q2 * z));
        // the theta at argument p z / w keeps its reflected factor 1 - w/z
        cb = (1.0 - q2) * (z - w) / ((1.0 - w) * (1.0 - q2 * z));
    } else {
        Cx pw = p / w;
        Cx th_q2z = theta(q2 * z, p), th_z = theta(z, p);
        b = q * qpoch_inf(pw * q2, p) * qpoch_inf(pw / q2, p) /
            (qpoch_inf(pw, p) * qpoch_inf(pw, p)) * th_z / th_q2z;
        bb = q * qpoch_inf(w * q2, p) * qpoch_inf(w / q2, p) /
             (qpoch_inf(w, p) * qpoch_inf(w, p)) * th_z / th_q2z;
        c = theta(q2, p) * theta(w * z, p) / (theta(w, p) * th_q2z);
        cb = z * theta(q2, p) * theta(pw * z, p) / (theta(pw, p) * th_q2z);
    }
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = 1.0;
    m.at(1, 1) = b;
    m.at(1, 2) = c;
    m.at(2, 1) = cb;
    m.at(2, 2) = bb;
    m.at(3, 3) = 1.0;
    return m.scaled(rho_ell(z, q, p));
}

// spectral face twistor in closed form: a middle 2x2 block of basic
// hypergeometric series in the nome, under a double-base scalar prefactor
inline CxMatrix f_vv_closed(Cx z, const FaceParams& fp) {
    fp.validate();
    double q = fp.q, p = fp.p;
    Cx w = fp.w, q2 = q * q;
    Cx arg = p / q2 * z;
    Cx x11, x12, x21, x22;
    if (p == 0.0) {
        x11 = 1.0;
        x22 = 1.0;
        x12 = w * (q - 1.0 / q) / (1.0 - w);
        x21 = 0.0;
    } else {
        Cx pw = p / w;
        x11 = phi21(w * q2, q2, w, p, arg).value;
        x12 = w * (q - 1.0 / q) / (1.0 - w) * phi21(w * q2, p * q2, p * w, p, arg).value;
        x21 = pw * (q - 1.0 / q) / (1.0 - pw) * z * phi21(pw * q2, p * q2, p * pw, p, arg).value;
        x22 = phi21(pw * q2, q2, pw, p, arg).value;
    }
    Cx pref = 1.0;
    if (p > 0.0) {
        double q4 = q * q * q * q;
        Cx a = multipoch_inf(p * z, q4, p) * multipoch_inf(p * q4 * z, q4, p);
        Cx d = multipoch_inf(p * q2 * z, q4, p);
        pref = a / (d * d);
    }
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = 1.0;
    m.at(1, 1) = x11;
    m.at(1, 2) = x12;
    m.at(2, 1) = x21;
    m.at(2, 2) = x22;
    m.at(3, 3) = 1.0;
    return m.scaled(pref);
}

namespace detail {

inline MpCx mp_qpoch_inf(MpCx a, const MpCx& q) {
    MpCx r(1);
    auto qa = abs(q);
    for (int k = 0; k < 200000; ++k) {
        if (2 * abs(a) / (1 - qa) < 1e-45) return r;
        r *= 1 - a;
        a *= q;
    }
    throw NonConvergent("mp_qpoch_inf: product did not stabilize");
}

inline SpectralMatrix<MpCx> mp_r_trig(const MpCx& z, const MpCx& q) {
    MpCx q2 = q * q, q4 = q2 * q2;
    MpCx num = mp_qpoch_inf(q2 * z, q4);
    MpCx rho = num * num / (sqrt(q) * mp_qpoch_inf(z, q4) * mp_qpoch_inf(q4 * z, q4));
    MpCx b = (1 - z) * q / (1 - q2 * z);
    MpCx c = (1 - q2) / (1 - q2 * z);
    SpectralMatrix<MpCx> m(4, MpCx(0));
    m.at(0, 0) = 1;
    m.at(1, 1) = b;
    m.at(1, 2) = c;
    m.at(2, 1) = z * c;
    m.at(2, 2) = b;
    m.at(3, 3) = 1;
    return m.scaled(rho);
}

inline double mp_max_abs_diff(const SpectralMatrix<MpCx>& a, const SpectralMatrix<MpCx>& b) {
    double r = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r = std::max(r, abs(a.at(i, j) - b.at(i, j)).convert_to<double>());
    return r;
}

}  // namespace detail

// the same twistor from its difference equation, iterated downward from the
// constant twistor at argument p^K z.  The downward direction amplifies
// perturbations by 1/|w| per step, which caps machine-precision accuracy near
// 1e-7, so the recursion runs in 100-digit arithmetic internally.  With
// trunc = 0 the depth doubles until two successive values agree, with a floor
// so the stop cannot trigger spuriously early at small |z|.
inline CxMatrix f_vv_by_difference(Cx z, const FaceParams& fp, int trunc = 0,
                                   double tol = 1e-16, int min_iters = 8, int max_iters = 2048) {
    fp.validate();
    if (fp.p == 0.0) return f_vv_closed(z, fp);
    using M = SpectralMatrix<MpCx>;
    MpCx q(fp.q), p(fp.p), w(fp.w.real(), fp.w.imag()), zz(z.real(), z.imag());
    MpCx sq = sqrt(q);
    M kinv(4, MpCx(0)), dw(4, MpCx(0)), dwi(4, MpCx(0));
    MpCx kd[4] = {1 / sq, sq, sq, 1 / sq};
    for (int i = 0; i < 4; ++i) {
        kinv.at(i, i) = kd[i];
        dw.at(i, i) = i < 2 ? MpCx(1) : w;
        dwi.at(i, i) = i < 2 ? MpCx(1) : 1 / w;
    }
    M seed = M::identity(4, MpCx(0));
    seed.at(2, 1) = w * (q - 1 / q) / (1 - w);  // transposed constant twistor
    auto to_double = [](const M& m) {
        CxMatrix r(4, Cx(0.0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r.at(i, j) = Cx(m.at(i, j).real().convert_to<double>(),
                                m.at(i, j).imag().convert_to<double>());
        return r;
    };
    auto run = [&](int K) {
        M ft = seed;
        std::vector<MpCx> pows(K + 1, MpCx(1));
        for (int j = 1; j <= K; ++j) pows[j] = pows[j - 1] * p;
        for (int j = K; j >= 1; --j)
            ft = dw * kinv * detail::mp_r_trig(pows[j] * zz, q).transposed().inverse() * ft * dwi;
        return ft.transposed();
    };
    if (trunc > 0) return to_double(run(trunc));
    M prev = run(min_iters);
    for (int K = 2 * min_iters; K <= max_iters; K *= 2) {
        M cur = run(K);
        if (detail::mp_max_abs_diff(cur, prev) < tol) return to_double(cur);
        prev = cur;
    }
    throw NonConvergent("f_vv_by_difference: recursion did not stabilize");
}

// one-step residual of the closed form substituted into the transposed
// difference equation; independent of the iterative solver
inline double diff_equation_residual(Cx z, const FaceParams& fp) {
    fp.validate();
    double sq = std::sqrt(fp.q);
    CxMatrix k = diag4(sq, 1.0 / sq, 1.0 / sq, sq);
    CxMatrix dw = diag4(1.0, 1.0, fp.w, fp.w);
    CxMatrix dwi = diag4(1.0, 1.0, 1.0 / fp.w, 1.0 / fp.w);
    CxMatrix lhs = f_vv_closed(fp.p * z, fp).transposed();
    CxMatrix rhs =
        r_trig(fp.p * z, fp.q).transposed() * k * dwi * f_vv_closed(z, fp).transposed() * dw;
    return max_abs_diff(lhs, rhs);
}

// two-site embedding into a three-fold tensor space where the bystander state
// shifts the dynamical parameter: q^{+e} w against v1, q^{-e} w against v2
inline CxMatrix embed_shifted(const std::function<CxMatrix(Cx)>& rfun, Cx w, double q, int s1,
                              int s2, int bys, int shift_exp) {
    if (s1 == s2 || s1 == bys || s2 == bys || s1 < 0 || s1 > 2 || s2 < 0 || s2 > 2 || bys < 0 ||
        bys > 2)
        throw SlotOutOfRange("embed_shifted: slots must be a permutation of 0,1,2");
    CxMatrix out(8, Cx(0.0));
    for (int bv = 0; bv < 2; ++bv) {
        CxMatrix r4 = rfun(w * std::pow(q, bv == 0 ? shift_exp : -shift_exp));
        for (int i1 = 0; i1 < 2; ++i1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j1 = 0; j1 < 2; ++j1)
                    for (int j2 = 0; j2 < 2; ++j2) {
                        int ri[3], ci[3];
                        ri[s1] = i1, ri[s2] = i2, ri[bys] = bv;
                        ci[s1] = j1, ci[s2] = j2, ci[bys] = bv;
                        out.at((ri[0] * 2 + ri[1]) * 2 + ri[2], (ci[0] * 2 + ci[1]) * 2 + ci[2]) =
                            r4.at(i1 * 2 + i2, j1 * 2 + j2);
                    }
    }
    return out;
}

// dynamical Yang-Baxter residual for the elliptic R matrix; the identity holds
// with shift exponent 2, and a wrong exponent serves as a negative control
inline double dybe_residual(Cx z1, Cx z2, Cx z3, const FaceParams& fp, int shift_exp = 2) {
    fp.validate();
    auto rf = [&](Cx z) {
        return std::function<CxMatrix(Cx)>([=, &fp](Cx wv) {
            FaceParams sub{fp.q, fp.p, wv};
            return r_elliptic(z, sub);
        });
    };
    Cx z12 = z1 / z2, z13 = z1 / z3, z23 = z2 / z3;
    auto es = [&](Cx z, int s1, int s2, int bys, int e) {
        return embed_shifted(rf(z), fp.w, fp.q, s1, s2, bys, e);
    };
    CxMatrix lhs = es(z12, 0, 1, 2, shift_exp) * es(z13, 0, 2, 1, 0) * es(z23, 1, 2, 0, shift_exp);
    CxMatrix rhs = es(z23, 1, 2, 0, 0) * es(z13, 0, 2, 1, shift_exp) * es(z12, 0, 1, 2, 0);
    return max_abs_diff(lhs, rhs);
}

// gauge relation tying the elliptic R matrix to the trigonometric one through
// the spectral twistor; dropping the elliptic prefactor is the negative control
inline double gauge_residual(Cx z, const FaceParams& fp, bool drop_prefactor = false) {
    fp.validate();
    CxMatrix lhs = r_elliptic(z, fp);
    if (drop_prefactor) lhs = lhs.scaled(1.0 / rho_ell(z, fp.q, fp.p));
    CxMatrix f = f_vv_closed(z, fp);
    CxMatrix fi = f_vv_closed(1.0 / z, fp);
    CxMatrix pm = swap_matrix();
    CxMatrix rhs = pm * fi * pm * r_trig(z, fp.q) * f.inverse();
    return max_abs_diff(lhs, rhs);
}

// exchange relation satisfied by the two chiral L operators built from the
// elliptic R matrix on the level-zero module; the dynamical gauge on the first
// tensor slot is essential, and freezing it to the identity is the control
inline double l_exchange_residual(Cx z, const FaceParams& fp, bool identity_gauge = false) {
    fp.validate();
    if (!(fp.p > 0.0)) throw InvalidParams("l_exchange_residual: needs p > 0");
    CxMatrix lhs = r_elliptic(fp.p * z, fp);
    CxMatrix pm = swap_matrix();
    CxMatrix m = (pm * r_elliptic(1.0 / z, fp) * pm).inverse();
    CxMatrix dt = diag4(1.0 / fp.q, fp.q, fp.q, 1.0 / fp.q);
    Cx x = identity_gauge ? Cx(1.0) : 1.0 / fp.w;
    CxMatrix gauge = diag4(1.0, 1.0, x, x);       // diag(1, x) on the first slot
    CxMatrix gauge_inv = diag4(1.0, 1.0, 1.0 / x, 1.0 / x);
    CxMatrix rhs = dt * gauge_inv * m * gauge;
    return max_abs_diff(lhs, rhs);
}

// weight conservation: entries outside the ice-rule pattern vanish identically
inline bool ice_rule_holds(const CxMatrix& m) {
    if (m.dim() != 4) throw RankMismatch("ice_rule_holds: expected a two-site matrix");
    auto wt = [](int i) { return (i >> 1) + (i & 1); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (wt(i) != wt(j) && m.at(i, j) != Cx(0.0)) return false;
    return true;
}

}  // namespace qtwist
