#pragma once

// The dynamical twist of the face type: a left-ordered infinite product of
// q-exponential factors in two tensor slots, its closed-form resummation, the
// shifted cocycle identity it satisfies, the induced associator, and the image
// of the twisted R matrix on the 2-fold module as exact rational functions of
// the dynamical variable w.  Truncation runs at w-order wcap and nilpotency
// degree dcap; every identity here is checked exactly, no floating point.

#include <vector>

#include "qtwist/ratfun.hpp"
#include "qtwist/uqsl2.hpp"

namespace qtwist {

// (n)_Q! with Q = q^base_exp, as the product of (1 - Q^k)/(1 - Q)
inline QScalar q_factorial(int n, int base_exp) {
    QScalar r(1);
    QScalar d = (QScalar(1) - QScalar::q_pow(base_exp)).invert();
    for (int k = 1; k <= n; ++k) r *= (QScalar(1) - QScalar::q_pow(base_exp * k)) * d;
    return r;
}

// k-th factor of the ordered product: the q^{-2}-exponential of
// (q - q^{-1}) (q^2 w)^k e t^{2k-1} ot t f, whose PBW seed is
// (q - q^{-1}) q^{-2k} w^k (t^{2k-1} e) ot (f t)
inline TensorElement face_product_factor(const VarSpec& spec, int dcap, int k) {
    TensorElement x(spec, 2, dcap);
    x.add_term(TensorKey{PBWMonomial{0, 2 * k - 1, 1}, PBWMonomial{1, 1, 0}},
               WSeries::monomial(spec, {k},
                                 (QScalar::q_pow(1) - QScalar::q_pow(-1)) * QScalar::q_pow(-2 * k)));
    int wcap = spec.vars[0].cap;
    int nmax = std::min(dcap, wcap / k);
    TensorElement a = TensorElement::one(spec, 2, dcap);
    TensorElement pw = a;
    for (int n = 1; n <= nmax; ++n) {
        pw = pw * x;
        a = a + pw.scaled_q(q_factorial(n, -2).invert());
    }
    return a;
}

// ordered product ... A_3 A_2 A_1 of the factors above, truncated at w^wcap
inline TensorElement build_product(int wcap, int dcap) {
    VarSpec spec = VarSpec::single("w", wcap);
    TensorElement acc = TensorElement::one(spec, 2, dcap);
    for (int k = 1; k <= wcap; ++k) acc = face_product_factor(spec, dcap, k) * acc;
    return acc;
}

// closed form: sum over n of
//   s_n * [prod_{j<n} (1 - q^{-2-2j} w t^2 ot 1)]^{-1} * (et)^n ot (tf)^n,
// s_n = (q^2 w)^n (q - q^{-1})^n / (n)_{q^{-2}}!.  The inverted Cartan
// product sits to the LEFT of the nilpotent part; the other order is wrong.
inline TensorElement build_closed(int wcap, int dcap) {
    VarSpec spec = VarSpec::single("w", wcap);
    const int nmax = std::min(wcap, dcap);

    TensorElement et_tf(spec, 2, dcap);  // (et) ot (tf) in PBW form
    et_tf.add_term(TensorKey{PBWMonomial{0, 1, 1}, PBWMonomial{1, 1, 0}},
                   WSeries::constant(spec, QScalar::q_pow(-4)));

    TensorElement f = TensorElement::one(spec, 2, dcap);
    TensorElement pw = f;
    TensorElement pinv = f;
    QScalar sn(1);
    for (int n = 1; n <= nmax; ++n) {
        pw = pw * et_tf;
        sn *= QScalar::q_pow(2) * (QScalar::q_pow(1) - QScalar::q_pow(-1));
        // geometric inverse of 1 - q^{-2n} w t^2 ot 1, the j = n-1 factor
        TensorElement g(spec, 2, dcap);
        for (int s = 0; s <= wcap; ++s)
            g.add_term(TensorKey{PBWMonomial{0, 2 * s, 0}, PBWMonomial{}},
                       WSeries::monomial(spec, {s}, QScalar::q_pow(-2 * n * s)));
        pinv = pinv * g;
        QScalar coef = sn * q_factorial(n, -2).invert();
        f = f + (pinv * pw).scaled(WSeries::monomial(spec, {n}, coef));
    }
    return f;
}

// left side minus right side of the shifted cocycle identity
//   F_{12}(w) (cop ot id)F = F_{23}(w, shifted by the weight of slot 1) (id ot cop)F
inline TensorElement cocycle_difference(const TensorElement& f) {
    TensorElement lhs = f.embed(3, {0, 1}) * f.coproduct(0);
    TensorElement rhs = f.embed(3, {1, 2}).dynamical_shift(0) * f.coproduct(1);
    return lhs - rhs;
}

// associator induced by the twist: F_{23}(w) * F_{23}(w + weight of slot 1)^{-1}
inline TensorElement build_phi(const TensorElement& f) {
    TensorElement f23 = f.embed(3, {1, 2});
    return f23 * f23.dynamical_shift(0).invert_unipotent();
}

// ---- exact rational-function layer on the 2-fold module ----

using QRat = RatFun<QScalar>;
using QRatMatrix = SpectralMatrix<QRat>;

// expand a rational function of w into the truncated series ring, for
// comparisons against algebra-route computations
inline WSeries ratfun_series(const QRat& r, const VarSpec& spec) {
    int cap = spec.vars[0].cap;
    auto cs = r.series_coeffs(cap);
    WSeries s(spec);
    for (int k = 0; k <= cap; ++k) s.set_coeff({k}, cs[static_cast<size_t>(k)]);
    return s;
}

inline QRat face_mu() {  // (q - q^{-1}) w / (1 - w)
    QRat w = QRat::variable();
    return QRat(QScalar::q_pow(1) - QScalar::q_pow(-1)) * w * (QRat(QScalar(1)) - w).inverse();
}

// image of the twist: identity plus mu(w) in the (v1v2, v2v1) entry
inline QRatMatrix face_f_rep() {
    QRatMatrix m = QRatMatrix::identity(4, QRat());
    m.at(1, 2) = face_mu();
    return m;
}

// constant R matrix on the 2-fold module (diagonal Cartan part included)
inline QRatMatrix r_rep_constant() {
    QRatMatrix m(4, QRat());
    QScalar vm = QScalar::v_pow(-1), vp = QScalar::v_pow(1);
    m.at(0, 0) = QRat(vm);
    m.at(1, 1) = QRat(vp);
    m.at(2, 2) = QRat(vp);
    m.at(3, 3) = QRat(vm);
    m.at(1, 2) = QRat(vm * (QScalar(1) - QScalar::q_pow(2)));
    return m;
}

// twisted R matrix image: F_21 R F^{-1}, a function of w
inline QRatMatrix face_r_rep() {
    QRatMatrix f = face_f_rep();
    return flip_slots(f) * r_rep_constant() * f.inverse();
}

// place a two-site matrix in slots (s1, s2) of three, substituting
// w -> q^{+shift_exp} w when the bystander slot carries v1 and
// w -> q^{-shift_exp} w when it carries v2.  shift_exp 0 is a plain embedding.
inline QRatMatrix embed_shifted(const QRatMatrix& r4, int s1, int s2, int bys, int shift_exp) {
    if (r4.dim() != 4) throw RankMismatch("embed_shifted: need a 4x4 matrix");
    QRatMatrix rp = r4, rm = r4;
    if (shift_exp != 0) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                rp.at(i, j) = r4.at(i, j).substitute_scale(QScalar::q_pow(shift_exp));
                rm.at(i, j) = r4.at(i, j).substitute_scale(QScalar::q_pow(-shift_exp));
            }
    }
    QRatMatrix out(8, QRat());
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            auto bit = [](int x, int s) { return (x >> (2 - s)) & 1; };
            if (bit(i, bys) != bit(j, bys)) continue;
            const QRatMatrix& src = bit(i, bys) == 0 ? rp : rm;
            out.at(i, j) = src.at(2 * bit(i, s1) + bit(i, s2), 2 * bit(j, s1) + bit(j, s2));
        }
    return out;
}

// dynamical Yang-Baxter difference for the twisted R image; shift_exp 2 is
// the true weight shift and must give zero, other values must not
inline QRatMatrix dybe_face_difference(int shift_exp = 2) {
    QRatMatrix r = face_r_rep();
    QRatMatrix lhs = embed_shifted(r, 0, 1, 2, shift_exp) * embed_shifted(r, 0, 2, 1, 0) *
                     embed_shifted(r, 1, 2, 0, shift_exp);
    QRatMatrix rhs = embed_shifted(r, 1, 2, 0, 0) * embed_shifted(r, 0, 2, 1, shift_exp) *
                     embed_shifted(r, 0, 1, 2, 0);
    return lhs - rhs;
}

// nonzero-entry count, the natural residual for exact matrix identities
template <typename T>
int nonzero_entries(const SpectralMatrix<T>& m) {
    int n = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!ring_is_zero(m.at(i, j))) ++n;
    return n;
}

}  // namespace qtwist
