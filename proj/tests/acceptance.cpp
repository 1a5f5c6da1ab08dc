// Acceptance gate: every criterion below must hold at its stated scale,
// tolerance, and runtime budget.  One line per criterion; the exit status is
// the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "qtwist/checks.hpp"

using namespace qtwist;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, bool ok) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, label.c_str());
    if (!ok) ++failures;
}

double seconds(const CheckReport& r) { return r.runtime_ms / 1000.0; }

}  // namespace

int main() {
    // 1: ordered product vs closed form, exact, caps 6/6, under 10 s
    auto c1 = run_check("face_product_vs_closed", Json{{"wcap", 6}, {"dcap", 6}});
    criterion(1, "face twist product equals closed form at caps 6/6 (exact, < 10 s)",
              c1.pass() && seconds(c1) < 10.0);

    // 2: shifted cocycle identity, exact, caps 4/4, under 60 s
    auto c2 = run_check("face_cocycle", Json{{"wcap", 4}, {"dcap", 4}});
    criterion(2, "shifted cocycle identity at caps 4/4 (exact, < 60 s)",
              c2.pass() && seconds(c2) < 60.0);

    // 3: counit triviality and the two-fold module image
    auto c3a = run_check("face_counit", Json{{"wcap", 4}, {"dcap", 4}});
    auto c3b = run_check("face_rep_image", Json{{"wcap", 6}, {"dcap", 6}});
    criterion(3, "counit is trivial and the module image matches the rational form (exact)",
              c3a.pass() && c3b.pass());

    // 4: exact dynamical Yang-Baxter identity with weight shift 2; wrong
    //    shifts must fail; the w -> 0 matrix satisfies the plain identity
    auto c4 = run_check("face_dybe_exact");
    auto c4y = run_check("face_ybe_constant");
    bool neg4 = !run_check("face_dybe_exact", Json{{"shift_exp", 4}}).pass() &&
                !run_check("face_dybe_exact", Json{{"shift_exp", -4}}).pass();
    criterion(4, "dynamical Yang-Baxter exact, w->0 Yang-Baxter, wrong shifts fail",
              c4.pass() && c4y.pass() && neg4);

    // 5: difference-equation route vs closed spectral twistor
    auto c5 = run_check("f_vv_difference");
    criterion(5, "difference-equation twistor matches closed form at 20 points (1e-10, < 5 s)",
              c5.pass() && c5.tolerance == 1e-10 && c5.params["points"] == 20 &&
                  seconds(c5) < 5.0);

    // 6: gauge relation from trigonometric to elliptic R
    auto c6 = run_check("face_gauge");
    criterion(6, "twistor gauges trigonometric R to elliptic R at 20 points (1e-8)",
              c6.pass() && c6.tolerance == 1e-8 && c6.params["points"] == 20);

    // 7: connection identity and its binomial special case
    auto c7 = run_check("connection");
    auto c7b = run_check("connection_binomial");
    criterion(7, "series connection identity at 20 points (1e-10), binomial case (1e-12)",
              c7.pass() && c7.tolerance == 1e-10 && c7.params["points"] == 20 &&
                  c7b.pass() && c7b.tolerance == 1e-12);

    // 8: elliptic dynamical Yang-Baxter equation; wrong shift decisively off
    auto c8 = run_check("elliptic_dybe");
    FaceParams fpn{0.45, 0.15, Cx(0.35, 0.0)};
    double neg8 = dybe_residual(Cx(1.1, 0.2), Cx(0.8, -0.3), Cx(0.6, 0.1), fpn, 4);
    criterion(8, "elliptic dynamical Yang-Baxter at sampled points (1e-10), wrong shift > 1e-2",
              c8.pass() && c8.tolerance == 1e-10 && neg8 > 1e-2);

    // 9: nome-zero degeneration to the trigonometric weights
    auto c9 = run_check("trig_degeneration");
    criterion(9, "nome-zero limits reduce to trigonometric weights (1e-12)",
              c9.pass() && c9.tolerance == 1e-12);

    // 10: vertex twistor product vs closed form at depth 60, geometric decay
    auto c10 = run_check("vertex_product");
    auto c10d = run_check("vertex_decay");
    criterion(10, "vertex product matches closed form at depth 60 (1e-10), p^10-rate decay",
              c10.pass() && c10.tolerance == 1e-10 && c10.truncation == 60 && c10d.pass());

    // 11: eight-vertex Yang-Baxter; corner entries are indispensable
    auto c11 = run_check("vertex_ybe");
    VertexParams vn;
    vn.q = 0.45;
    vn.p = 0.3;
    double neg11 = ybe_vertex_residual(Cx(0.8, 0.5), Cx(1.1, -0.3), Cx(0.65, 0.4), vn, true);
    criterion(11, "eight-vertex Yang-Baxter at 20 points (1e-10), dropped corners > 1e-2",
              c11.pass() && c11.tolerance == 1e-10 && c11.params["points"] == 20 &&
                  neg11 > 1e-2);

    // 12: both L-operator exchange relations, both square-root branches,
    //     identity-twist controls decisively off
    auto c12f = run_check("face_l_exchange");
    auto c12v = run_check("vertex_l_exchange");
    auto c12n = run_check("vertex_l_exchange", Json{{"sqrt_negative", true}});
    FaceParams fpl{0.45, 0.15, Cx(0.35, 0.0)};
    double negf = l_exchange_residual(Cx(1.3, 0.4), fpl, true);
    VertexParams vlt;
    vlt.q = 0.45;
    vlt.p = 0.06;
    double negv = vertex_l_exchange_residual(Cx(0.9, 0.3), vlt, true);
    criterion(12, "face and vertex L exchanges at 20 points each (1e-8), controls > 1e-2",
              c12f.pass() && c12v.pass() && c12n.pass() && c12f.tolerance == 1e-8 &&
                  c12v.tolerance == 1e-8 && negf > 1e-2 && negv > 1e-2);

    // 13: full-suite report is byte-identical across two runs, well-formed,
    //     and completes inside the runtime budget
    auto t0 = std::chrono::steady_clock::now();
    auto first = run_suite_checks();
    auto second = run_suite_checks();
    auto t1 = std::chrono::steady_clock::now();
    double dur = std::chrono::duration<double>(t1 - t0).count();
    Json ja = suite_report(first);
    Json jb = suite_report(second);
    bool schema_ok = ja["schema_version"] == kReportSchemaVersion && ja.contains("convention") &&
                     ja["convention"].contains("basis_order") && ja["checks"].is_array() &&
                     ja["checks"].size() == check_registry().size() && ja["all_pass"] == true;
    for (const auto& c : ja["checks"])
        schema_ok = schema_ok && c.contains("name") && c.contains("params") &&
                    c.contains("residual") && c.contains("tolerance") && c.contains("pass") &&
                    !c.contains("runtime_ms");
    criterion(13, "suite report byte-identical across runs, schema-complete, both runs < 180 s",
              ja.dump() == jb.dump() && schema_ok && dur < 180.0);

    std::printf("%d/13 criteria passed\n", 13 - failures);
    return failures;
}
