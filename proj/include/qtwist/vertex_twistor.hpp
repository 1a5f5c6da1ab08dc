#pragma once

// Vertex-type layer: the symmetrized trigonometric R matrix in the square-root
// spectral variable, the vertex twistor as an ordered product of twisted
// factors and in closed Pochhammer form, the elliptic eight-vertex R matrix,
// and residuals for the Yang-Baxter equation, the vertex gauge relation, and
// the two-chirality L-operator exchange.  Basis order is v1v1, v1v2, v2v1,
// v2v2; the square root of the nome enters explicitly, with a sign flag.

#include <cmath>
#include <complex>

#include "qtwist/errors.hpp"
#include "qtwist/face_elliptic.hpp"
#include "qtwist/matrix.hpp"
#include "qtwist/qseries.hpp"

namespace qtwist {

struct VertexParams {
    double q = 0.5;               // deformation parameter, 0 < q < 1
    double p = 0.1;               // elliptic nome, 0 < p < 1
    bool sqrt_p_negative = false; // branch of p^{1/2}

    double sqrt_p() const { return sqrt_p_negative ? -std::sqrt(p) : std::sqrt(p); }
    void validate() const {
        if (!(q > 0.0 && q < 1.0)) throw InvalidParams("VertexParams: need 0 < q < 1");
        if (!(p > 0.0 && p < 1.0)) throw InvalidParams("VertexParams: need 0 < p < 1");
    }
};

inline CxMatrix sigma_x_first_slot() {
    CxMatrix m(4, Cx(0.0));
    m.at(0, 2) = 1.0;
    m.at(1, 3) = 1.0;
    m.at(2, 0) = 1.0;
    m.at(3, 1) = 1.0;
    return m;
}

// symmetrized trigonometric R matrix in the square-root variable: conjugating
// the plain R by diag(1, zeta) on the second slot balances the off-diagonals
inline CxMatrix r_trig_symmetric(Cx zeta, double q) {
    Cx z = zeta * zeta;
    Cx b = (1.0 - z) * q / (1.0 - q * q * z);
    Cx c = (1.0 - q * q) / (1.0 - q * q * z);
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = 1.0;
    m.at(1, 1) = b;
    m.at(1, 2) = zeta * c;
    m.at(2, 1) = zeta * c;
    m.at(2, 2) = b;
    m.at(3, 3) = 1.0;
    return m.scaled(rho_trig(z, q));
}

// one factor of the vertex twistor product: the symmetrized R at p^{l/2} zeta,
// conjugated on the first slot by sigma-x when l is odd
inline CxMatrix vertex_factor(int l, Cx zeta, const VertexParams& vp) {
    vp.validate();
    if (l < 1) throw InvalidParams("vertex_factor: index starts at 1");
    Cx arg = std::pow(vp.sqrt_p(), l) * zeta;
    CxMatrix r = r_trig_symmetric(arg, vp.q);
    if (l % 2 == 0) return r;
    CxMatrix s = sigma_x_first_slot();
    return s * r * s;
}

// vertex twistor as the left-ordered product of inverted factors,
// factor(K)^{-1} ... factor(1)^{-1}; K must be even since only factor pairs
// approach the identity, and the truncation error decays like |p|^{K/2}
inline CxMatrix e_vv_product(Cx zeta, const VertexParams& vp, int K = 60) {
    vp.validate();
    if (K < 2 || K % 2 != 0) throw InvalidParams("e_vv_product: truncation must be even");
    CxMatrix acc = CxMatrix::identity(4, Cx(0.0));
    for (int l = K; l >= 1; --l) acc = acc * vertex_factor(l, zeta, vp).inverse();
    return acc;
}

// closed form of the vertex twistor: corner and middle blocks from Pochhammer
// ratios at the two square-root shifts, under the same scalar prefactor as
// the face-type spectral twistor
inline CxMatrix e_vv_closed(Cx zeta, const VertexParams& vp) {
    vp.validate();
    double q = vp.q, p = vp.p, sp = vp.sqrt_p();
    Cx z = zeta * zeta;
    auto ratio = [&](double scale) {
        Cx plus = qpoch_inf(-scale * q * zeta, p) / qpoch_inf(-scale / q * zeta, p);
        Cx minus = qpoch_inf(scale * q * zeta, p) / qpoch_inf(scale / q * zeta, p);
        return std::pair<Cx, Cx>{(plus + minus) / 2.0, (plus - minus) / 2.0};
    };
    auto [a_e, d_e] = ratio(sp);
    auto [b_e, c_e] = ratio(p);
    double q4 = q * q * q * q;
    Cx q2 = Cx(q * q);
    Cx pref = multipoch_inf(p * z, q4, p) * multipoch_inf(p * q4 * z, q4, p) /
              (multipoch_inf(p * q2 * z, q4, p) * multipoch_inf(p * q2 * z, q4, p));
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = a_e;
    m.at(0, 3) = d_e;
    m.at(1, 1) = b_e;
    m.at(1, 2) = c_e;
    m.at(2, 1) = c_e;
    m.at(2, 2) = b_e;
    m.at(3, 0) = d_e;
    m.at(3, 3) = a_e;
    return m.scaled(pref);
}

// entry matrix of the elliptic eight-vertex R before the scalar
// normalization; at zeta = 1 it is the swap of the symmetric and
// antisymmetric channels, a = 1, d = 0, b = 0, c = 1
inline CxMatrix r_eight_vertex_entries(Cx zeta, const VertexParams& vp) {
    vp.validate();
    double q = vp.q, p = vp.p, sp = vp.sqrt_p();
    Cx zi = 1.0 / zeta;
    auto pair_ratio = [&](double scale) {
        // upper sign: arguments -scale..., lower sign: +scale...
        Cx up = qpoch_inf(-scale / q * zeta, p) / qpoch_inf(-scale * q * zeta, p) *
                qpoch_inf(-scale * q * zi, p) / qpoch_inf(-scale / q * zi, p);
        Cx dn = qpoch_inf(scale / q * zeta, p) / qpoch_inf(scale * q * zeta, p) *
                qpoch_inf(scale * q * zi, p) / qpoch_inf(scale / q * zi, p);
        return std::pair<Cx, Cx>{up, dn};
    };
    auto [sum_ad, dif_ad] = pair_ratio(sp);
    Cx a_v = (sum_ad + dif_ad) / 2.0, d_v = (sum_ad - dif_ad) / 2.0;
    auto [pu, pd] = pair_ratio(p);
    Cx sum_bc = q * (1.0 + zeta / q) / (1.0 + q * zeta) * pu;
    Cx dif_bc = q * (1.0 - zeta / q) / (1.0 - q * zeta) * pd;
    Cx b_v = (sum_bc + dif_bc) / 2.0, c_v = (sum_bc - dif_bc) / 2.0;
    CxMatrix m(4, Cx(0.0));
    m.at(0, 0) = a_v;
    m.at(0, 3) = d_v;
    m.at(1, 1) = b_v;
    m.at(1, 2) = c_v;
    m.at(2, 1) = c_v;
    m.at(2, 2) = b_v;
    m.at(3, 0) = d_v;
    m.at(3, 3) = a_v;
    return m;
}

// elliptic eight-vertex R matrix; the corner entries carry the square root of
// the nome and are odd under zeta -> -zeta while the diagonal ones are even
inline CxMatrix r_eight_vertex(Cx zeta, const VertexParams& vp) {
    CxMatrix m = r_eight_vertex_entries(zeta, vp);
    return m.scaled(rho_ell(zeta * zeta, vp.q, vp.p));
}

// Yang-Baxter residual for the eight-vertex R matrix; zeroing the corner
// entries is the negative control
inline double ybe_vertex_residual(Cx zeta1, Cx zeta2, Cx zeta3, const VertexParams& vp,
                                  bool drop_corners = false) {
    auto rv = [&](Cx zeta) {
        CxMatrix r = r_eight_vertex(zeta, vp);
        if (drop_corners) {
            r.at(0, 3) = 0.0;
            r.at(3, 0) = 0.0;
        }
        return r;
    };
    CxMatrix r12 = embed12(rv(zeta1 / zeta2));
    CxMatrix r13 = embed13(rv(zeta1 / zeta3));
    CxMatrix r23 = embed23(rv(zeta2 / zeta3));
    return max_abs_diff(r12 * r13 * r23, r23 * r13 * r12);
}

// gauge relation: the vertex twistor intertwines the symmetrized
// trigonometric R with the eight-vertex one
inline double vertex_gauge_residual(Cx zeta, const VertexParams& vp) {
    CxMatrix e = e_vv_closed(zeta, vp);
    CxMatrix ei = e_vv_closed(1.0 / zeta, vp);
    CxMatrix pm = swap_matrix();
    CxMatrix rhs = pm * ei * pm * r_trig_symmetric(zeta, vp.q) * e.inverse();
    return max_abs_diff(r_eight_vertex(zeta, vp), rhs);
}

// exchange relation between the two chiral L operators built from the
// eight-vertex R matrix; replacing sigma-x by the identity is the control
inline double vertex_l_exchange_residual(Cx zeta, const VertexParams& vp,
                                         bool identity_twist = false) {
    CxMatrix lhs = r_eight_vertex(vp.sqrt_p() * zeta, vp);
    CxMatrix pm = swap_matrix();
    CxMatrix m = (pm * r_eight_vertex(1.0 / zeta, vp) * pm).inverse();
    CxMatrix s = identity_twist ? CxMatrix::identity(4, Cx(0.0)) : sigma_x_first_slot();
    return max_abs_diff(lhs, s * m * s);
}

}  // namespace qtwist
