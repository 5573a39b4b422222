// Command-line front end; talks to the shared library through the C API only.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3maps/k3maps.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string join(const json& arr, const std::string& sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : arr) {
        if (!first) os << sep;
        first = false;
        os << v;
    }
    return os.str();
}

std::string opt_str(const json& v) { return v.is_null() ? "-" : join(v, ","); }

int report_status(k3m_status s) {
    std::cerr << "error: " << k3m_status_name(s) << ": " << k3m_last_error() << "\n";
    return kExitUsage;
}

void render_verdict(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "g,deg,l,profile,admissible,reason,lambda,N,witness_partition,witness_shape\n"
                  << j["g"] << "," << j["deg"] << "," << j["l"] << "," << j["profile"].get<std::string>()
                  << "," << (j["admissible"].get<bool>() ? "true" : "false") << ","
                  << (j["reason"].is_null() ? "" : j["reason"].get<std::string>()) << ","
                  << join(j["lambda"], " ") << ","
                  << (j["N"].is_null() ? "" : j["N"].dump()) << ","
                  << (j["witness_partition"].is_null() ? "" : join(j["witness_partition"], " ")) << ","
                  << (j["witness_shape"].is_null() ? "" : j["witness_shape"].get<std::string>())
                  << "\n";
        return;
    }
    if (format == "markdown") {
        std::cout << "| field | value |\n|---|---|\n";
        for (const char* k : {"g", "deg", "l", "profile", "admissible", "reason", "lambda",
                              "N", "witness_partition", "witness_shape"})
            std::cout << "| " << k << " | " << j[k].dump() << " |\n";
        return;
    }
    std::cout << "g=" << j["g"] << " deg=" << j["deg"] << " l=" << j["l"]
              << " profile=" << j["profile"].get<std::string>() << "\n";
    if (j["admissible"].get<bool>()) {
        std::cout << "admissible\n";
        std::cout << "lambda: " << join(j["lambda"], ", ") << "\n";
        if (!j["N"].is_null()) std::cout << "N: " << j["N"] << "\n";
        if (!j["witness_partition"].is_null())
            std::cout << "witness partition: " << join(j["witness_partition"], ",") << "\n";
        if (!j["witness_shape"].is_null())
            std::cout << "witness shape: " << j["witness_shape"].get<std::string>() << "\n";
    } else {
        std::cout << "inadmissible (" << j["reason"].get<std::string>() << ")\n";
    }
}

void render_table(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "l,admissible,reason,N,witness_partition\n";
        for (const auto& v : j["verdicts"])
            std::cout << v["l"] << "," << (v["admissible"].get<bool>() ? "true" : "false") << ","
                      << (v["reason"].is_null() ? "" : v["reason"].get<std::string>()) << ","
                      << (v["N"].is_null() ? "" : v["N"].dump()) << ","
                      << (v["witness_partition"].is_null() ? "" : join(v["witness_partition"], " "))
                      << "\n";
        return;
    }
    if (format == "markdown") {
        std::cout << "| l | admissible | reason | N | witness |\n|---|---|---|---|---|\n";
        for (const auto& v : j["verdicts"])
            std::cout << "| " << v["l"] << " | " << (v["admissible"].get<bool>() ? "yes" : "no")
                      << " | " << (v["reason"].is_null() ? "" : v["reason"].get<std::string>())
                      << " | " << (v["N"].is_null() ? "" : v["N"].dump()) << " | "
                      << (v["witness_partition"].is_null() ? "" : join(v["witness_partition"], ","))
                      << " |\n";
        return;
    }
    std::cout << "g=" << j["g"] << " deg=" << j["deg"] << " l_max=" << j["l_max"]
              << " profile=" << j["profile"].get<std::string>() << "\n"
              << "admissible l: " << join(j["admissible_l"], ", ") << "\n";
}

void render_report(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "deg,g,profile,computed,match,designated\n";
        for (const auto& row : j["rows"])
            for (const auto& pr : row["profiles"])
                std::cout << row["deg"] << "," << row["g"] << ","
                          << pr["profile"].get<std::string>() << "," << join(pr["computed"], " ")
                          << "," << (pr["match"].get<bool>() ? "true" : "false") << ","
                          << (pr["profile"] == row["designated_profile"] ? "true" : "false")
                          << "\n";
        return;
    }
    if (format == "markdown") {
        std::cout << "| deg | g | paper | profile | computed | status |\n"
                  << "|---|---|---|---|---|---|\n";
        for (const auto& row : j["rows"])
            for (const auto& pr : row["profiles"])
                std::cout << "| " << row["deg"] << " | " << row["g"] << " | "
                          << join(row["paper_l"], ",") << " | " << pr["profile"].get<std::string>()
                          << " | " << join(pr["computed"], ",") << " | "
                          << (pr["match"].get<bool>() ? "MATCH" : "MISMATCH") << " |\n";
        return;
    }
    for (const auto& row : j["rows"]) {
        std::cout << "deg=" << row["deg"] << " g=" << row["g"]
                  << " paper: " << join(row["paper_l"], ",") << "  ["
                  << row["designated_profile"].get<std::string>() << "] "
                  << row["status"].get<std::string>() << "\n";
        for (const auto& pr : row["profiles"])
            std::cout << "    " << pr["profile"].get<std::string>() << ": "
                      << join(pr["computed"], ",") << " "
                      << (pr["match"].get<bool>() ? "MATCH" : "MISMATCH") << "\n";
    }
    std::cout << j["match_count"] << " rows match, " << j["mismatch_count"]
              << " flagged\n";
}

void render_partitions(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    if (format == "csv" || format == "text") {
        for (const auto& p : j["partitions"]) std::cout << join(p, ",") << "\n";
        return;
    }
    std::cout << "| partition |\n|---|\n";
    for (const auto& p : j["partitions"]) std::cout << "| " << join(p, ",") << " |\n";
}

void render_tree_report(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "nodes,tree_depth,depth_ok,width_ok,leaf_pair_ok,minimal,pass\n"
                  << j["nodes"] << "," << j["tree_depth"] << ","
                  << j["depth_ok"].dump() << "," << j["width_ok"].dump() << ","
                  << j["leaf_pair_ok"].dump() << "," << j["minimal"].dump() << ","
                  << j["pass"].dump() << "\n";
        return;
    }
    std::cout << "depths: " << join(j["depths"], ",") << "\n"
              << "tree depth: " << j["tree_depth"] << "\n";
    if (!j["betas"].is_null()) std::cout << "betas: " << join(j["betas"], ",") << "\n";
    if (!j["minimal"].is_null())
        std::cout << "minimal: " << (j["minimal"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "depth check (deg=" << j["deg"] << "): " << (j["depth_ok"].get<bool>() ? "pass" : "fail") << "\n"
              << "leaf-pair check: " << (j["leaf_pair_ok"].get<bool>() ? "pass" : "fail") << "\n"
              << "width check: " << (j["width_ok"].get<bool>() ? "pass" : "fail") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical admissibility of self-rational maps on generic K3 surfaces"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string profile = "basic";
    long long g = 2, deg = 4, l = 2, l_max = 10, terms = 3, n = 1, p_cap = -1;
    std::string tree_path;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
    };

    CLI::App* c_check = app.add_subcommand("check", "Decide admissibility of (g, deg, l)");
    c_check->add_option("--g", g, "Genus (>= 2)")->required();
    c_check->add_option("--deg", deg, "Topological degree")->required();
    c_check->add_option("--l", l, "Algebraic degree")->required();
    c_check->add_option("--profile", profile, "Constraint profile")
        ->check(CLI::IsMember({"basic", "amerik", "full"}));
    add_format(c_check);

    CLI::App* c_table = app.add_subcommand("table", "Admissible l values up to l-max");
    c_table->add_option("--g", g, "Genus (>= 2)")->required();
    c_table->add_option("--deg", deg, "Topological degree")->required();
    c_table->add_option("--l-max", l_max, "Largest l to test")->required();
    c_table->add_option("--profile", profile, "Constraint profile")
        ->check(CLI::IsMember({"basic", "amerik", "full"}));
    add_format(c_table);

    CLI::App* c_report = app.add_subcommand("paper-report",
                                            "Recompute the published admissibility tables");
    c_report->add_option("--terms", terms, "Leading terms per row (>= 3)");
    add_format(c_report);

    CLI::App* c_parts = app.add_subcommand("partitions",
                                           "Even-sum partitions into squares summing to n");
    c_parts->add_option("--n", n, "Target sum of squares")->required();
    c_parts->add_option("--p-cap", p_cap, "Max number of parts");
    add_format(c_parts);

    CLI::App* c_tree = app.add_subcommand("tree-verify",
                                          "Check an exceptional-tree file for a given degree");
    c_tree->add_option("file", tree_path, "Tree JSON document")->required();
    c_tree->add_option("--deg", deg, "Topological degree")->required();
    add_format(c_tree);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    k3m_result* res = nullptr;
    if (*c_check) {
        k3m_status s = k3m_check(g, deg, l, profile.c_str(), &res);
        if (s != K3M_OK) return report_status(s);
        json j = json::parse(k3m_result_json(res));
        render_verdict(j, format);
        int rc = k3m_result_ok(res) ? kExitPass : kExitFail;
        k3m_result_free(res);
        return rc;
    }
    if (*c_table) {
        k3m_status s = k3m_table(g, deg, l_max, profile.c_str(), &res);
        if (s != K3M_OK) return report_status(s);
        render_table(json::parse(k3m_result_json(res)), format);
        k3m_result_free(res);
        return kExitPass;
    }
    if (*c_report) {
        k3m_status s = k3m_paper_report(terms, &res);
        if (s != K3M_OK) return report_status(s);
        render_report(json::parse(k3m_result_json(res)), format);
        k3m_result_free(res);
        return kExitPass; // mismatches are findings, not failures
    }
    if (*c_parts) {
        k3m_status s = k3m_partitions(n, p_cap, &res);
        if (s != K3M_OK) return report_status(s);
        render_partitions(json::parse(k3m_result_json(res)), format);
        k3m_result_free(res);
        return kExitPass;
    }
    if (*c_tree) {
        std::ifstream in(tree_path);
        if (!in) {
            std::cerr << "error: cannot open " << tree_path << "\n";
            return kExitUsage;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        k3m_status s = k3m_tree_verify(buf.str().c_str(), deg, &res);
        if (s != K3M_OK) return report_status(s);
        render_tree_report(json::parse(k3m_result_json(res)), format);
        int rc = k3m_result_ok(res) ? kExitPass : kExitFail;
        k3m_result_free(res);
        return rc;
    }
    return kExitUsage;
}
