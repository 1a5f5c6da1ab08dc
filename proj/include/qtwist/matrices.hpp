#pragma once

// Named catalog of the displayed matrices: the symbolic twist image on the
// two-fold module and the numeric R-matrix and twistor families.  Entries
// serialize to JSON, complex numbers as [re, im] pairs, rational functions of
// the dynamical variable as text.

#include <string>

#include "qtwist/checks.hpp"

namespace qtwist {

namespace detail {

inline std::string poly_w_text(const Poly<QScalar>& poly) {
    if (poly.is_zero()) return "0";
    std::string s;
    for (int k = poly.degree(); k >= 0; --k) {
        QScalar c = poly.coeff(k);
        if (ring_is_zero(c)) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c.to_string();
        if (k == 0) {
            s += cs;
            continue;
        }
        std::string ws = k == 1 ? "w" : "w^" + std::to_string(k);
        s += cs == "1" ? ws : "(" + cs + ") " + ws;
    }
    return s;
}

inline std::string ratfun_text(const QRat& r) {
    std::string n = poly_w_text(r.num());
    if (r.den().degree() == 0) return n;
    return "(" + n + ") / (" + poly_w_text(r.den()) + ")";
}

inline Json cx_json(Cx v) { return Json::array({v.real(), v.imag()}); }

inline Json matrix_json_numeric(const CxMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(cx_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Json matrix_json_symbolic(const QRatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(ratfun_text(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Cx cx_param(const Json& p, const char* key, Cx fallback) {
    if (!p.contains(key)) return fallback;
    const Json& v = p[key];
    if (v.is_number()) return Cx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Cx(v[0].get<double>(), v[1].get<double>());
    throw InvalidParams(std::string("parameter '") + key + "' must be a number or [re, im]");
}

}  // namespace detail

// matrix names understood by the catalog, in display order
inline const std::vector<std::pair<std::string, std::string>>& matrix_catalog() {
    static const std::vector<std::pair<std::string, std::string>> names = {
        {"f_sl2", "two-fold module image of the face twist, rational in w (symbolic)"},
        {"r_trig", "trigonometric six-vertex R matrix; params q, z"},
        {"f_vv", "spectral face twistor in closed form; params q, p, w, z"},
        {"r_elliptic", "elliptic dynamical R matrix of face type; params q, p, w, z"},
        {"e_vv", "vertex twistor in closed form; params q, p, zeta, sqrt_negative"},
        {"r_8v", "elliptic eight-vertex R matrix; params q, p, zeta, sqrt_negative"},
    };
    return names;
}

inline Json matrix_json(const std::string& name, const Json& p) {
    Json out;
    out["name"] = name;
    out["basis_order"] = basis_order_label(BasisOrder::LastIndexFastest, 4);
    double q = p.value("q", 0.45);
    if (name == "f_sl2") {
        out["variables"] = "entries are rational functions of w with q-coefficients";
        out["entries"] = detail::matrix_json_symbolic(face_f_rep());
        return out;
    }
    if (name == "r_trig") {
        Cx z = detail::cx_param(p, "z", Cx(0.5, 0.0));
        out["params"] = Json{{"q", q}, {"z", detail::cx_json(z)}};
        out["entries"] = detail::matrix_json_numeric(r_trig(z, q));
        return out;
    }
    if (name == "f_vv" || name == "r_elliptic") {
        FaceParams fp;
        fp.q = q;
        fp.p = p.value("p", 0.1);
        fp.w = detail::cx_param(p, "w", Cx(0.35, 0.0));
        Cx z = detail::cx_param(p, "z", Cx(0.5, 0.0));
        out["params"] = Json{{"q", fp.q}, {"p", fp.p}, {"w", detail::cx_json(fp.w)},
                             {"z", detail::cx_json(z)}};
        out["entries"] = detail::matrix_json_numeric(
            name == "f_vv" ? f_vv_closed(z, fp) : r_elliptic(z, fp));
        return out;
    }
    if (name == "e_vv" || name == "r_8v") {
        VertexParams vp;
        vp.q = q;
        vp.p = p.value("p", 0.1);
        vp.sqrt_p_negative = p.value("sqrt_negative", false);
        Cx zeta = detail::cx_param(p, "zeta", Cx(0.7, 0.0));
        out["params"] = Json{{"q", vp.q}, {"p", vp.p}, {"zeta", detail::cx_json(zeta)},
                             {"sqrt_negative", vp.sqrt_p_negative}};
        out["entries"] = detail::matrix_json_numeric(
            name == "e_vv" ? e_vv_closed(zeta, vp) : r_eight_vertex(zeta, vp));
        return out;
    }
    throw UnknownMatrix("matrix_json: no matrix named '" + name + "'");
}

}  // namespace qtwist
