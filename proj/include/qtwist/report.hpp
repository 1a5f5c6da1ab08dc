#pragma once

// Structured results for the identity checks.  A single check yields its
// name, the resolved parameters, a residual measured against a pinned
// tolerance, and the pass flag; a suite bundles check reports under a fixed
// schema version and a conventions block.  Default serialization contains no
// wall-clock data, so two runs of the same build and configuration produce
// byte-identical output.

#include <json.hpp>
#include <string>
#include <vector>

#include "qtwist/matrix.hpp"

namespace qtwist {

using Json = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;

struct CheckReport {
    std::string name;
    Json params = Json::object();
    double residual = 0.0;
    double tolerance = 0.0;
    int truncation = 0;       // product depth or series cap where one applies
    double runtime_ms = 0.0;  // filled by the runner, emitted only on request

    bool pass() const { return residual <= tolerance; }

    Json to_json(bool with_timings = false) const {
        Json j;
        j["name"] = name;
        j["params"] = params;
        if (truncation > 0) j["truncation"] = truncation;
        j["residual"] = residual;
        j["tolerance"] = tolerance;
        j["pass"] = pass();
        if (with_timings) j["runtime_ms"] = runtime_ms;
        return j;
    }
};

// fixed conventions every report is stated in
inline Json convention_block() {
    return Json{{"basis_order", basis_order_label(BasisOrder::LastIndexFastest, 4)},
                {"pbw_order", "f,t,e"},
                {"sqrt_nome_branch_default", "+"}};
}

inline Json suite_report(const std::vector<CheckReport>& checks, bool with_timings = false) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["convention"] = convention_block();
    bool all = true;
    Json arr = Json::array();
    for (const auto& c : checks) {
        all = all && c.pass();
        arr.push_back(c.to_json(with_timings));
    }
    j["all_pass"] = all;
    j["checks"] = arr;
    return j;
}

}  // namespace qtwist
