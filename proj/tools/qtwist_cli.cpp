// Command-line front end: run identity-check suites against their pinned
// tolerances, evaluate single checks with parameter overrides, and print the
// named matrix families.  JSON reports carry no wall-clock data unless
// requested, so a repeated run of the same configuration is byte-identical.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qtwist/checks.hpp"
#include "qtwist/matrices.hpp"

namespace {

qtwist::Json parse_param_list(const std::vector<std::string>& kvs) {
    qtwist::Json out = qtwist::Json::object();
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw qtwist::InvalidParams("--param expects key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        std::string val = kv.substr(eq + 1);
        qtwist::Json parsed = qtwist::Json::parse(val, nullptr, false);
        out[key] = parsed.is_discarded() ? qtwist::Json(val) : parsed;
    }
    return out;
}

std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path path(out);
    if (path.is_relative())
        if (const char* dir = std::getenv("QTWIST_OUT_DIR"))
            path = std::filesystem::path(dir) / path;
    return path;
}

void emit(const qtwist::Json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    auto path = resolve_out(out);
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path.string());
    f << text;
}

void print_line(const qtwist::CheckReport& r) {
    std::printf("%s  %-24s residual=%.3e tolerance=%.3e (%.1f ms)\n",
                r.pass() ? "PASS" : "FAIL", r.name.c_str(), r.residual, r.tolerance,
                r.runtime_ms);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric identity checks for face- and vertex-type twistors"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list available checks and matrices");

    std::string check_name;
    std::vector<std::string> check_params;
    bool check_json = false;
    auto* check_cmd = app.add_subcommand("check", "run a single check");
    check_cmd->add_option("name", check_name, "check name, see 'list'")->required();
    check_cmd->add_option("--param", check_params,
                          "parameter override key=value, value parsed as JSON");
    check_cmd->add_flag("--json", check_json, "also print the JSON report");

    std::string config_path, out_path;
    bool timings = false;
    auto* run_cmd = app.add_subcommand("run", "run a check suite");
    run_cmd->add_option("--config", config_path, "suite configuration file");
    run_cmd->add_option("--out", out_path,
                        "write the JSON report here (relative paths resolve "
                        "under QTWIST_OUT_DIR when set)");
    run_cmd->add_flag("--timings", timings, "include wall-clock times in the report");

    std::string matrix_name, matrix_out;
    std::vector<std::string> matrix_params;
    auto* matrix_cmd = app.add_subcommand("matrix", "evaluate a named matrix as JSON");
    matrix_cmd->add_option("name", matrix_name, "matrix name, see 'list'")->required();
    matrix_cmd->add_option("--param", matrix_params,
                           "parameter override key=value, value parsed as JSON");
    matrix_cmd->add_option("--out", matrix_out, "write the matrix JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) {
            std::printf("checks:\n");
            for (const auto& spec : qtwist::check_registry())
                std::printf("  %-24s %s\n", spec.name, spec.summary);
            std::printf("matrices:\n");
            for (const auto& [name, summary] : qtwist::matrix_catalog())
                std::printf("  %-24s %s\n", name.c_str(), summary.c_str());
            return 0;
        }
        if (check_cmd->parsed()) {
            auto r = qtwist::run_check(check_name, parse_param_list(check_params));
            print_line(r);
            if (check_json) std::cout << r.to_json(true).dump(2) << "\n";
            return r.pass() ? 0 : 1;
        }
        if (run_cmd->parsed()) {
            qtwist::Json config = qtwist::Json::object();
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw qtwist::ConfigParseError("cannot open config " + config_path);
                try {
                    config = qtwist::Json::parse(f);
                } catch (const std::exception& e) {
                    throw qtwist::ConfigParseError(e.what());
                }
            }
            auto checks = qtwist::run_suite_checks(config);
            for (const auto& r : checks) print_line(r);
            auto passed = std::count_if(checks.begin(), checks.end(),
                                        [](const auto& r) { return r.pass(); });
            std::printf("%zd/%zu checks passed\n", passed, checks.size());
            if (!out_path.empty()) emit(qtwist::suite_report(checks, timings), out_path);
            return passed == static_cast<std::ptrdiff_t>(checks.size()) ? 0 : 1;
        }
        if (matrix_cmd->parsed()) {
            emit(qtwist::matrix_json(matrix_name, parse_param_list(matrix_params)),
                 matrix_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
