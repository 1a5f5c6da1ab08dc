#include "qtwist/vertex_twistor.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

using namespace qtwist;

namespace {

double pick(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Cx pick_on_annulus(std::mt19937_64& rng, double rlo, double rhi) {
    return std::polar(pick(rng, rlo, rhi), pick(rng, 0.0, 6.283185307179586));
}

// keeps every Pochhammer argument of the closed twistor and the eight-vertex
// entries well away from 1, so no sampled point sits near a pole or zero
VertexParams pick_vertex_params(std::mt19937_64& rng) {
    VertexParams vp;
    vp.q = pick(rng, 0.4, 0.6);
    vp.p = pick(rng, 0.05, 0.4 * vp.q * vp.q);
    return vp;
}

CxMatrix e_vv_product_reversed(Cx zeta, const VertexParams& vp, int K) {
    CxMatrix acc = CxMatrix::identity(4, Cx(0.0));
    for (int l = 1; l <= K; ++l) acc = acc * vertex_factor(l, zeta, vp).inverse();
    return acc;
}

}  // namespace

TEST_CASE("symmetrized trigonometric R is a diagonal gauge of the plain one") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        double q = pick(rng, 0.2, 0.7);
        Cx zeta = pick_on_annulus(rng, 0.3, 1.2);
        if (std::abs(1.0 - q * q * zeta * zeta) < 0.1) continue;
        CxMatrix d = diag4(1.0, zeta, 1.0, zeta);
        CxMatrix want = d * r_trig(zeta * zeta, q) * d.inverse();
        CHECK(max_abs_diff(r_trig_symmetric(zeta, q), want) < 1e-13);
    }
}

TEST_CASE("deep product factors approach the constant limits pairwise") {
    VertexParams vp;
    vp.q = 0.45;
    vp.p = 0.2;
    Cx zeta(0.6, 0.15);
    double s = std::sqrt(vp.q);
    CxMatrix even_limit = diag4(1.0 / s, vp.q / s, vp.q / s, 1.0 / s);
    CHECK(max_abs_diff(vertex_factor(40, zeta, vp), even_limit) < 1e-12);
    CxMatrix pair = vertex_factor(39, zeta, vp) * vertex_factor(40, zeta, vp);
    CHECK(max_abs_diff(pair, CxMatrix::identity(4, Cx(0.0))) < 1e-12);
}

TEST_CASE("vertex twistor product matches the closed form at seeded points") {
    std::mt19937_64 rng(20240720);
    int accepted = 0;
    while (accepted < 20) {
        VertexParams vp;
        vp.q = pick(rng, 0.2, 0.6);
        vp.p = pick(rng, 0.05, 0.3);
        Cx zeta = pick_on_annulus(rng, 0.4, 0.9);
        // leading Pochhammer factors of the closed form must stay off zero
        if (std::abs(1.0 - vp.sqrt_p() / vp.q * zeta) < 0.1) continue;
        if (std::abs(1.0 + vp.sqrt_p() / vp.q * zeta) < 0.1) continue;
        ++accepted;
        CHECK(max_abs_diff(e_vv_product(zeta, vp, 60), e_vv_closed(zeta, vp)) < 1e-10);
    }
    CHECK(accepted == 20);
}

TEST_CASE("product ordering is immaterial because the factors commute") {
    // every factor has the eight-vertex shape, hence the shared eigenbasis
    // (1,0,0,±1), (0,1,±1,0); both orderings must agree with the closed form
    VertexParams vp;
    vp.q = 0.45;
    vp.p = 0.2;
    Cx zeta(0.6, 0.15);
    CxMatrix closed = e_vv_closed(zeta, vp);
    CHECK(max_abs_diff(e_vv_product(zeta, vp, 60), closed) < 1e-13);
    CHECK(max_abs_diff(e_vv_product_reversed(zeta, vp, 60), closed) < 1e-13);
}

TEST_CASE("negative square-root branch leaves product and closed form in step") {
    VertexParams vp;
    vp.q = 0.45;
    vp.p = 0.2;
    vp.sqrt_p_negative = true;
    Cx zeta(0.6, 0.15);
    CHECK(max_abs_diff(e_vv_product(zeta, vp, 60), e_vv_closed(zeta, vp)) < 1e-12);
    // the two branches give genuinely different twistors
    VertexParams vpos = vp;
    vpos.sqrt_p_negative = false;
    CHECK(max_abs_diff(e_vv_closed(zeta, vp), e_vv_closed(zeta, vpos)) > 1e-2);
}

TEST_CASE("truncation error of the vertex product decays geometrically") {
    VertexParams vp;
    vp.q = 0.45;
    vp.p = 0.3;
    Cx zeta(0.6, 0.15);
    CxMatrix closed = e_vv_closed(zeta, vp);
    double e20 = max_abs_diff(e_vv_product(zeta, vp, 20), closed);
    double e40 = max_abs_diff(e_vv_product(zeta, vp, 40), closed);
    double e60 = max_abs_diff(e_vv_product(zeta, vp, 60), closed);
    // each 20 extra factors multiply the error by about p^10
    CHECK(e40 < 1e-4 * e20);
    CHECK(e60 < 1e-10);
    CHECK(e20 < 1e-3);
}

TEST_CASE("eight-vertex entries at the unit point swap the two channels") {
    for (double p : {0.1, 0.3, 0.5}) {
        VertexParams vp;
        vp.q = 0.45;
        vp.p = p;
        CxMatrix e1 = r_eight_vertex_entries(Cx(1.0), vp);
        CHECK(std::abs(e1.at(0, 0) - 1.0) < 1e-14);
        CHECK(std::abs(e1.at(0, 3)) < 1e-14);
        CHECK(std::abs(e1.at(1, 1)) < 1e-14);
        CHECK(std::abs(e1.at(1, 2) - 1.0) < 1e-14);
    }
}

TEST_CASE("eight-vertex entries split into even and odd parts in zeta") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 5; ++trial) {
        VertexParams vp = pick_vertex_params(rng);
        Cx zeta = pick_on_annulus(rng, 0.75, 1.33);
        CxMatrix plus = r_eight_vertex_entries(zeta, vp);
        CxMatrix minus = r_eight_vertex_entries(-zeta, vp);
        CHECK(std::abs(plus.at(0, 0) - minus.at(0, 0)) < 1e-13);
        CHECK(std::abs(plus.at(1, 1) - minus.at(1, 1)) < 1e-13);
        CHECK(std::abs(plus.at(0, 3) + minus.at(0, 3)) < 1e-13);
        CHECK(std::abs(plus.at(1, 2) + minus.at(1, 2)) < 1e-13);
        // corners are present, so strict weight conservation fails
        CHECK(ice_rule_holds(r_trig(zeta * zeta, vp.q)));
        CHECK(!ice_rule_holds(r_eight_vertex(zeta, vp)));
    }
}

TEST_CASE("eight-vertex R satisfies the Yang-Baxter equation") {
    std::mt19937_64 rng(20240808);
    int accepted = 0;
    while (accepted < 10) {
        VertexParams vp;
        vp.q = pick(rng, 0.2, 0.6);
        vp.p = pick(rng, 0.05, 0.2);
        Cx z1 = pick_on_annulus(rng, 0.8, 1.2);
        Cx z2 = pick_on_annulus(rng, 0.8, 1.2);
        Cx z3 = pick_on_annulus(rng, 0.8, 1.2);
        bool ok = true;
        for (Cx r : {z1 / z2, z1 / z3, z2 / z3}) {
            if (std::abs(r * r - 1.0) < 0.1) ok = false;          // scalar prefactor pole
            if (std::abs(1.0 - vp.q * r) < 0.1) ok = false;       // middle-entry pole
            if (std::abs(1.0 + vp.q * r) < 0.1) ok = false;
            if (std::abs(r * r * vp.p - 1.0) < 0.1) ok = false;   // prefactor zero
        }
        if (!ok) continue;
        ++accepted;
        CHECK(ybe_vertex_residual(z1, z2, z3, vp) < 1e-10);
    }
    CHECK(accepted == 10);
}

TEST_CASE("dropping the corner entries breaks the Yang-Baxter equation") {
    VertexParams vp;
    vp.q = 0.45;
    vp.p = 0.3;
    Cx z1(0.8, 0.5), z2(1.1, -0.3), z3(0.65, 0.4);
    CHECK(ybe_vertex_residual(z1, z2, z3, vp) < 1e-10);
    CHECK(ybe_vertex_residual(z1, z2, z3, vp, true) > 1e-2);
}

TEST_CASE("vertex twistor carries the trigonometric R to the eight-vertex one") {
    std::mt19937_64 rng(20240811);
    int accepted = 0;
    while (accepted < 20) {
        VertexParams vp = pick_vertex_params(rng);
        Cx zeta = pick_on_annulus(rng, 0.75, 1.33);
        if (std::abs(zeta * zeta - 1.0) < 0.1) continue;
        ++accepted;
        CHECK(vertex_gauge_residual(zeta, vp) < 1e-10);
    }
    CHECK(accepted == 20);
    VertexParams vn;
    vn.q = 0.5;
    vn.p = 0.08;
    vn.sqrt_p_negative = true;
    CHECK(vertex_gauge_residual(Cx(0.9, 0.25), vn) < 1e-10);
}

TEST_CASE("chiral L operators exchange through the spin-flip twist") {
    std::mt19937_64 rng(20240812);
    int accepted = 0;
    while (accepted < 20) {
        VertexParams vp = pick_vertex_params(rng);
        vp.sqrt_p_negative = (accepted % 2 == 1);  // exercise both branches
        Cx zeta = pick_on_annulus(rng, 0.75, 1.33);
        if (std::abs(zeta * zeta - 1.0) < 0.1) continue;
        ++accepted;
        CHECK(vertex_l_exchange_residual(zeta, vp) < 1e-8);
    }
    CHECK(accepted == 20);
}

TEST_CASE("replacing the spin flip by the identity breaks the exchange") {
    VertexParams vp;
    vp.q = 0.45;
    vp.p = 0.06;
    CHECK(vertex_l_exchange_residual(Cx(0.9, 0.3), vp, true) > 1e-2);
}

TEST_CASE("vertex parameter validation rejects out-of-range input") {
    VertexParams bad_q;
    bad_q.q = 1.2;
    CHECK_THROWS_AS(bad_q.validate(), InvalidParams);
    VertexParams bad_p;
    bad_p.p = 0.0;
    CHECK_THROWS_AS(bad_p.validate(), InvalidParams);
    VertexParams vp;
    CHECK_THROWS_AS(e_vv_product(Cx(0.5), vp, 7), InvalidParams);
    CHECK_THROWS_AS(e_vv_product(Cx(0.5), vp, 0), InvalidParams);
    CHECK_THROWS_AS(vertex_factor(0, Cx(0.5), vp), InvalidParams);
}
