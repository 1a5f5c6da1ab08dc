#pragma once

// Registry of machine-checkable identities.  Every check resolves its
// parameters from defaults plus a JSON override, runs deterministically from
// a fixed seed, and reports the worst residual over its sample set against a
// pinned tolerance.  Exact symbolic checks count nonzero terms instead and
// carry tolerance zero.

#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qtwist/face_elliptic.hpp"
#include "qtwist/face_twistor.hpp"
#include "qtwist/qseries.hpp"
#include "qtwist/report.hpp"
#include "qtwist/vertex_twistor.hpp"

namespace qtwist {

namespace detail {

inline double sample_uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

inline Cx sample_annulus(std::mt19937_64& rng, double rlo, double rhi) {
    return std::polar(sample_uniform(rng, rlo, rhi), sample_uniform(rng, 0.0, 6.283185307179586));
}

inline std::uint64_t seed_of(const Json& p, std::uint64_t fallback) {
    return p.value("seed", fallback);
}

}  // namespace detail

// ---- exact symbolic checks ----

inline CheckReport check_face_product_vs_closed(const Json& p) {
    int wcap = p.value("wcap", 4);
    int dcap = p.value("dcap", 4);
    auto diff = build_product(wcap, dcap) - build_closed(wcap, dcap);
    CheckReport r;
    r.name = "face_product_vs_closed";
    r.params = Json{{"wcap", wcap}, {"dcap", dcap}};
    r.residual = static_cast<double>(diff.term_count());
    r.tolerance = 0.0;
    return r;
}

inline CheckReport check_face_cocycle(const Json& p) {
    int wcap = p.value("wcap", 3);
    int dcap = p.value("dcap", 3);
    auto diff = cocycle_difference(build_closed(wcap, dcap));
    CheckReport r;
    r.name = "face_cocycle";
    r.params = Json{{"wcap", wcap}, {"dcap", dcap}};
    r.residual = static_cast<double>(diff.term_count());
    r.tolerance = 0.0;
    return r;
}

inline CheckReport check_face_counit(const Json& p) {
    int wcap = p.value("wcap", 4);
    int dcap = p.value("dcap", 4);
    auto f = build_closed(wcap, dcap);
    auto one = TensorElement::one(f.spec(), 1, dcap);
    auto d0 = f.counit(0) - one;
    auto d1 = f.counit(1) - one;
    CheckReport r;
    r.name = "face_counit";
    r.params = Json{{"wcap", wcap}, {"dcap", dcap}};
    r.residual = static_cast<double>(d0.term_count() + d1.term_count());
    r.tolerance = 0.0;
    return r;
}

inline CheckReport check_face_rep_image(const Json& p) {
    int wcap = p.value("wcap", 5);
    int dcap = p.value("dcap", 5);
    auto f = build_closed(wcap, dcap);
    auto mat = f.rep2();
    auto frep = face_f_rep();
    int bad = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(mat.at(i, j) == ratfun_series(frep.at(i, j), f.spec()))) ++bad;
    CheckReport r;
    r.name = "face_rep_image";
    r.params = Json{{"wcap", wcap}, {"dcap", dcap}};
    r.residual = static_cast<double>(bad);
    r.tolerance = 0.0;
    return r;
}

inline CheckReport check_face_dybe_exact(const Json& p) {
    int shift_exp = p.value("shift_exp", 2);
    CheckReport r;
    r.name = "face_dybe_exact";
    r.params = Json{{"shift_exp", shift_exp}};
    r.residual = static_cast<double>(nonzero_entries(dybe_face_difference(shift_exp)));
    r.tolerance = 0.0;
    return r;
}

inline CheckReport check_face_ybe_constant(const Json&) {
    QRatMatrix rw = face_r_rep();
    QRatMatrix r0(4, QRat());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r0.at(i, j) = QRat(rw.at(i, j).eval(QScalar(0)));
    QRatMatrix lhs = embed_shifted(r0, 0, 1, 2, 0) * embed_shifted(r0, 0, 2, 1, 0) *
                     embed_shifted(r0, 1, 2, 0, 0);
    QRatMatrix rhs = embed_shifted(r0, 1, 2, 0, 0) * embed_shifted(r0, 0, 2, 1, 0) *
                     embed_shifted(r0, 0, 1, 2, 0);
    CheckReport r;
    r.name = "face_ybe_constant";
    r.params = Json::object();
    r.residual = static_cast<double>(nonzero_entries(lhs - rhs));
    r.tolerance = 0.0;
    return r;
}

// ---- numeric basic-hypergeometric checks ----

inline CheckReport check_connection(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 20240815));
    int points = p.value("points", 20);
    double tol = p.value("tolerance", 1e-10);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < points) {
        double q = detail::sample_uniform(rng, 0.2, 0.6);
        Cx a(detail::sample_uniform(rng, 0.2, 1.4), 0.0);
        Cx b(detail::sample_uniform(rng, 0.2, 1.4), 0.0);
        Cx c(detail::sample_uniform(rng, 0.3, 1.8), 0.0);
        Cx z = detail::sample_annulus(rng, 1.3, 3.0);
        if (std::abs((a - b).real()) < 0.05) continue;
        if (!(std::pow(q, (c - a - b + 1.0).real()) * std::abs(z) < 0.9)) continue;
        ++accepted;
        worst = std::max(worst, connection_value(a, b, c, q, z).residual);
    }
    CheckReport r;
    r.name = "connection";
    r.params = Json{{"seed", detail::seed_of(p, 20240815)}, {"points", points}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_connection_binomial(const Json& p) {
    double tol = p.value("tolerance", 1e-12);
    double q = p.value("q", 0.3);
    Cx z(0.4, 0.2);
    Cx upper(0.35, -0.1), other(0.6, 0.05);
    // a lower parameter equal to one upper parameter collapses the series to
    // a Pochhammer ratio in the other upper parameter
    Cx lhs1 = phi21(upper, other, other, q, z).value;
    Cx want1 = qpoch_inf(upper * z, q) / qpoch_inf(z, q);
    Cx lhs2 = phi21(upper, other, upper, q, z).value;
    Cx want2 = qpoch_inf(other * z, q) / qpoch_inf(z, q);
    CheckReport r;
    r.name = "connection_binomial";
    r.params = Json{{"q", q}};
    r.residual = std::max(std::abs(lhs1 - want1), std::abs(lhs2 - want2));
    r.tolerance = tol;
    return r;
}

// ---- numeric face-type checks ----

inline CheckReport check_f_vv_difference(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 20240501));
    int points = p.value("points", 20);
    int trunc = p.value("trunc", 0);  // 0 selects the adaptive depth
    double tol = p.value("tolerance", 1e-10);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < points) {
        double q = detail::sample_uniform(rng, 0.2, 0.6);
        double pp = detail::sample_uniform(rng, 0.05, 0.3);
        Cx w(detail::sample_uniform(rng, 0.3, 0.8), 0.0);
        Cx z = detail::sample_annulus(rng, 0.05, 0.8);
        if (std::abs(w) < 2.2 * pp) continue;              // keep the recursion contracting
        if (std::abs(pp / (q * q) * z) >= 0.85) continue;  // closed-form series domain
        ++accepted;
        FaceParams fp{q, pp, w};
        worst = std::max(worst,
                         max_abs_diff(f_vv_by_difference(z, fp, trunc), f_vv_closed(z, fp)));
    }
    CheckReport r;
    r.name = "f_vv_difference";
    r.params = Json{{"seed", detail::seed_of(p, 20240501)}, {"points", points}};
    r.truncation = trunc;
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_face_gauge(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 777));
    int points = p.value("points", 20);
    double tol = p.value("tolerance", 1e-8);
    bool drop = p.value("drop_prefactor", false);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < points) {
        double q = detail::sample_uniform(rng, 0.4, 0.65);
        double pp = detail::sample_uniform(rng, 0.05, 0.8 * q * q);
        Cx w(detail::sample_uniform(rng, 0.25, 0.7), 0.0);
        double lo = pp / (q * q);
        Cx z = detail::sample_annulus(rng, 1.15 * lo, 0.85 / lo);
        ++accepted;
        FaceParams fp{q, pp, w};
        worst = std::max(worst, gauge_residual(z, fp, drop));
    }
    CheckReport r;
    r.name = "face_gauge";
    r.params = Json{{"seed", detail::seed_of(p, 777)},
                    {"points", points},
                    {"drop_prefactor", drop}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_elliptic_dybe(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 888));
    int points = p.value("points", 10);
    double tol = p.value("tolerance", 1e-10);
    int shift_exp = p.value("shift_exp", 2);
    double worst = 0.0;
    for (int trial = 0; trial < points; ++trial) {
        FaceParams fp{detail::sample_uniform(rng, 0.3, 0.6),
                      detail::sample_uniform(rng, 0.05, 0.25),
                      Cx(detail::sample_uniform(rng, 0.25, 0.6), 0.0)};
        Cx z1 = detail::sample_annulus(rng, 0.6, 1.6);
        Cx z2 = detail::sample_annulus(rng, 0.6, 1.6);
        Cx z3 = detail::sample_annulus(rng, 0.6, 1.6);
        worst = std::max(worst, dybe_residual(z1, z2, z3, fp, shift_exp));
    }
    CheckReport r;
    r.name = "elliptic_dybe";
    r.params = Json{{"seed", detail::seed_of(p, 888)},
                    {"points", points},
                    {"shift_exp", shift_exp}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_trig_degeneration(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 123));
    int points = p.value("points", 10);
    double tol = p.value("tolerance", 1e-12);
    double worst = 0.0;
    for (int trial = 0; trial < points; ++trial) {
        double q = detail::sample_uniform(rng, 0.3, 0.6);
        Cx w(detail::sample_uniform(rng, 0.25, 0.6), 0.0);
        Cx z = detail::sample_annulus(rng, 0.4, 1.4);
        if (std::abs(1.0 - q * q * z) < 0.1 || std::abs(1.0 - z) < 0.1) continue;
        // prefactor and first diagonal channel lose their nome dependence
        worst = std::max(worst, std::abs(rho_ell(z, q, 0.0) - rho_trig(z, q)));
        FaceParams fw{q, 0.0, w};
        worst = std::max(worst,
                         std::abs(r_elliptic(z, fw).at(1, 1) - r_trig(z, q).at(1, 1)));
        // the full matrix becomes trigonometric once w vanishes too
        FaceParams f0{q, 0.0, Cx(0.0)};
        worst = std::max(worst, max_abs_diff(r_elliptic(z, f0), r_trig(z, q)));
    }
    CheckReport r;
    r.name = "trig_degeneration";
    r.params = Json{{"seed", detail::seed_of(p, 123)}, {"points", points}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_face_l_exchange(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 20240612));
    int points = p.value("points", 20);
    double tol = p.value("tolerance", 1e-8);
    bool identity_gauge = p.value("identity_gauge", false);
    double worst = 0.0;
    for (int trial = 0; trial < points; ++trial) {
        FaceParams fp{detail::sample_uniform(rng, 0.3, 0.6),
                      detail::sample_uniform(rng, 0.05, 0.25),
                      Cx(detail::sample_uniform(rng, 0.25, 0.65), 0.0)};
        Cx z = detail::sample_annulus(rng, 0.8, 2.0);
        worst = std::max(worst, l_exchange_residual(z, fp, identity_gauge));
    }
    CheckReport r;
    r.name = "face_l_exchange";
    r.params = Json{{"seed", detail::seed_of(p, 20240612)},
                    {"points", points},
                    {"identity_gauge", identity_gauge}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

// ---- numeric vertex-type checks ----

inline CheckReport check_vertex_product(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 20240720));
    int points = p.value("points", 20);
    int trunc = p.value("trunc", 60);
    double tol = p.value("tolerance", 1e-10);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < points) {
        VertexParams vp;
        vp.q = detail::sample_uniform(rng, 0.2, 0.6);
        vp.p = detail::sample_uniform(rng, 0.05, 0.3);
        Cx zeta = detail::sample_annulus(rng, 0.4, 0.9);
        if (std::abs(1.0 - vp.sqrt_p() / vp.q * zeta) < 0.1) continue;
        if (std::abs(1.0 + vp.sqrt_p() / vp.q * zeta) < 0.1) continue;
        ++accepted;
        worst = std::max(worst,
                         max_abs_diff(e_vv_product(zeta, vp, trunc), e_vv_closed(zeta, vp)));
    }
    CheckReport r;
    r.name = "vertex_product";
    r.params = Json{{"seed", detail::seed_of(p, 20240720)}, {"points", points}};
    r.truncation = trunc;
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_vertex_decay(const Json& p) {
    double tol = p.value("tolerance", 1e-4);
    VertexParams vp;
    vp.q = p.value("q", 0.45);
    vp.p = p.value("p", 0.3);
    Cx zeta(0.6, 0.15);
    CxMatrix closed = e_vv_closed(zeta, vp);
    double e20 = max_abs_diff(e_vv_product(zeta, vp, 20), closed);
    double e40 = max_abs_diff(e_vv_product(zeta, vp, 40), closed);
    CheckReport r;
    r.name = "vertex_decay";
    r.params = Json{{"q", vp.q}, {"p", vp.p}};
    // twenty extra factors must shrink the truncation error by about p^10
    r.residual = e40 / e20;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_vertex_ybe(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 20240808));
    int points = p.value("points", 20);
    double tol = p.value("tolerance", 1e-10);
    bool drop = p.value("drop_corners", false);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < points) {
        VertexParams vp;
        vp.q = detail::sample_uniform(rng, 0.2, 0.6);
        vp.p = detail::sample_uniform(rng, 0.05, 0.2);
        Cx z1 = detail::sample_annulus(rng, 0.8, 1.2);
        Cx z2 = detail::sample_annulus(rng, 0.8, 1.2);
        Cx z3 = detail::sample_annulus(rng, 0.8, 1.2);
        bool ok = true;
        for (Cx rat : {z1 / z2, z1 / z3, z2 / z3}) {
            if (std::abs(rat * rat - 1.0) < 0.1) ok = false;
            if (std::abs(1.0 - vp.q * rat) < 0.1) ok = false;
            if (std::abs(1.0 + vp.q * rat) < 0.1) ok = false;
            if (std::abs(rat * rat * vp.p - 1.0) < 0.1) ok = false;
        }
        if (!ok) continue;
        ++accepted;
        worst = std::max(worst, ybe_vertex_residual(z1, z2, z3, vp, drop));
    }
    CheckReport r;
    r.name = "vertex_ybe";
    r.params = Json{{"seed", detail::seed_of(p, 20240808)},
                    {"points", points},
                    {"drop_corners", drop}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_vertex_gauge(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 20240811));
    int points = p.value("points", 20);
    double tol = p.value("tolerance", 1e-10);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < points) {
        VertexParams vp;
        vp.q = detail::sample_uniform(rng, 0.4, 0.6);
        vp.p = detail::sample_uniform(rng, 0.05, 0.4 * vp.q * vp.q);
        Cx zeta = detail::sample_annulus(rng, 0.75, 1.33);
        if (std::abs(zeta * zeta - 1.0) < 0.1) continue;
        ++accepted;
        worst = std::max(worst, vertex_gauge_residual(zeta, vp));
    }
    CheckReport r;
    r.name = "vertex_gauge";
    r.params = Json{{"seed", detail::seed_of(p, 20240811)}, {"points", points}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

inline CheckReport check_vertex_l_exchange(const Json& p) {
    std::mt19937_64 rng(detail::seed_of(p, 20240812));
    int points = p.value("points", 20);
    double tol = p.value("tolerance", 1e-8);
    bool identity_twist = p.value("identity_twist", false);
    bool sqrt_negative = p.value("sqrt_negative", false);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < points) {
        VertexParams vp;
        vp.q = detail::sample_uniform(rng, 0.4, 0.6);
        vp.p = detail::sample_uniform(rng, 0.05, 0.4 * vp.q * vp.q);
        vp.sqrt_p_negative = sqrt_negative;
        Cx zeta = detail::sample_annulus(rng, 0.75, 1.33);
        if (std::abs(zeta * zeta - 1.0) < 0.1) continue;
        ++accepted;
        worst = std::max(worst, vertex_l_exchange_residual(zeta, vp, identity_twist));
    }
    CheckReport r;
    r.name = "vertex_l_exchange";
    r.params = Json{{"seed", detail::seed_of(p, 20240812)},
                    {"points", points},
                    {"identity_twist", identity_twist},
                    {"sqrt_negative", sqrt_negative}};
    r.residual = worst;
    r.tolerance = tol;
    return r;
}

// ---- registry ----

struct CheckSpec {
    const char* name;
    const char* summary;
    CheckReport (*fn)(const Json&);
};

inline const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> reg = {
        {"face_product_vs_closed",
         "ordered product of the face twist equals its closed form (exact)",
         &check_face_product_vs_closed},
        {"face_cocycle", "shifted cocycle identity for the face twist (exact)",
         &check_face_cocycle},
        {"face_counit", "counit in either slot of the face twist is trivial (exact)",
         &check_face_counit},
        {"face_rep_image", "two-fold module image of the twist matches its rational form (exact)",
         &check_face_rep_image},
        {"face_dybe_exact", "dynamical Yang-Baxter identity for the twisted R image (exact)",
         &check_face_dybe_exact},
        {"face_ybe_constant", "constant R at w = 0 satisfies the plain Yang-Baxter identity (exact)",
         &check_face_ybe_constant},
        {"connection", "three-term connection identity for the basic hypergeometric series",
         &check_connection},
        {"connection_binomial", "lower parameter equal to an upper one collapses the series",
         &check_connection_binomial},
        {"f_vv_difference", "difference-equation iterate of the spectral twistor vs closed form",
         &check_f_vv_difference},
        {"face_gauge", "spectral twistor carries the trigonometric R to the elliptic one",
         &check_face_gauge},
        {"elliptic_dybe", "dynamical Yang-Baxter equation for the elliptic face R matrix",
         &check_elliptic_dybe},
        {"trig_degeneration", "nome-zero limits reduce elliptic weights to trigonometric ones",
         &check_trig_degeneration},
        {"face_l_exchange", "chiral L operators of the face type exchange through a diagonal gauge",
         &check_face_l_exchange},
        {"vertex_product", "vertex twistor product matches its closed form",
         &check_vertex_product},
        {"vertex_decay", "vertex product truncation error decays geometrically",
         &check_vertex_decay},
        {"vertex_ybe", "eight-vertex R matrix satisfies the Yang-Baxter equation",
         &check_vertex_ybe},
        {"vertex_gauge", "vertex twistor carries the trigonometric R to the eight-vertex one",
         &check_vertex_gauge},
        {"vertex_l_exchange", "chiral L operators of the vertex type exchange through a spin flip",
         &check_vertex_l_exchange},
    };
    return reg;
}

inline CheckReport run_check(const std::string& name, const Json& params = Json::object()) {
    for (const auto& spec : check_registry()) {
        if (name != spec.name) continue;
        auto t0 = std::chrono::steady_clock::now();
        CheckReport r = spec.fn(params);
        auto t1 = std::chrono::steady_clock::now();
        r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return r;
    }
    throw UnknownCheck("run_check: no check named '" + name + "'");
}

// config shape: {"schema_version": 1, "seed": ..., "checks": [{"name": ...,
// "params": {...}}, ...]}; a missing check list runs the whole registry with
// defaults, a top-level seed applies to every check that does not set its own
inline std::vector<CheckReport> run_suite_checks(const Json& config = Json::object()) {
    if (!config.is_object()) throw ConfigParseError("config root must be an object");
    if (config.contains("schema_version") &&
        config["schema_version"] != kReportSchemaVersion)
        throw ConfigParseError("unsupported config schema version");
    std::vector<CheckReport> out;
    if (!config.contains("checks")) {
        for (const auto& spec : check_registry()) {
            Json params = Json::object();
            if (config.contains("seed")) params["seed"] = config["seed"];
            out.push_back(run_check(spec.name, params));
        }
        return out;
    }
    if (!config["checks"].is_array()) throw ConfigParseError("'checks' must be an array");
    for (const auto& entry : config["checks"]) {
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string())
            throw ConfigParseError("each check entry needs a string 'name'");
        Json params = entry.value("params", Json::object());
        if (!params.is_object()) throw ConfigParseError("check 'params' must be an object");
        if (config.contains("seed") && !params.contains("seed"))
            params["seed"] = config["seed"];
        out.push_back(run_check(entry["name"].get<std::string>(), params));
    }
    return out;
}

}  // namespace qtwist
