#include "dendro/dendrimer.hpp"
#include "dendro/exact.hpp"
#include "dendro/indices.hpp"
#include "dendro/path_counts.hpp"
#include "dendro/report.hpp"
#include "dendro/tree_graph.hpp"
#include "dendro/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

long long vertex_cap_from_env() {
    const char* text = std::getenv("DENDRO_MAX_VERTICES");
    if (text == nullptr)
        return dendro::kDefaultVertexCap;
    std::string value(text);
    try {
        std::size_t used = 0;
        long long cap = std::stoll(value, &used);
        if (used != value.size() || cap < 1)
            throw std::invalid_argument("not a positive integer");
        return cap;
    } catch (...) {
        throw std::domain_error("DENDRO_MAX_VERTICES must be a positive integer, got \"" +
                                value + "\"");
    }
}

int parse_sigma(const std::string& text) {
    try {
        std::size_t used = 0;
        int sigma = std::stoi(text, &used);
        if (used != text.size())
            throw std::invalid_argument("trailing characters");
        return sigma;
    } catch (...) {
        throw std::domain_error("--sigma must be an integer or \"all\", got \"" + text + "\"");
    }
}

// Payload goes to --output (or standard output); diagnostics stay on the
// error stream.
void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file " + output_path);
    file << payload;
    file.flush();
    if (!file)
        throw std::runtime_error("cannot write output file " + output_path);
}

int cmd_table(const dendro::DendrimerParams& p, std::optional<int> only_length,
              const std::string& format, const std::string& output_path) {
    dendro::PathLengthTable table{p, {}};
    if (only_length)
        table.counts[*only_length] = dendro::path_count_closed(p, *only_length);
    else
        table = dendro::path_count_table(p);
    std::string payload;
    if (format == "csv") {
        payload = dendro::to_csv(table);
    } else if (format == "json") {
        payload = dendro::to_json(table);
    } else {
        for (const auto& [length, count] : table.counts)
            payload += std::to_string(length) + " " + count.str() + "\n";
    }
    emit(payload, output_path);
    return 0;
}

int cmd_indices(const dendro::DendrimerParams& p, const std::string& format,
                const std::string& output_path) {
    dendro::IndexReport report = dendro::build_index_report(p, {});
    // two independent index computations must agree before anything is
    // emitted; a mismatch is an internal inconsistency, not a usage error
    if (p.degree() >= 3) {
        dendro::ExactInt closed = dendro::wiener_closed(p);
        if (closed != report.wiener) {
            std::cerr << "error: wiener mismatch: closed form " << closed.str()
                      << " vs length sum " << report.wiener.str() << "\n";
            return 2;
        }
    }
    std::string payload;
    if (format == "json") {
        payload = dendro::to_json(report);
    } else {
        payload += "n: " + std::to_string(p.radius()) + "\n";
        payload += "k: " + std::to_string(p.degree()) + "\n";
        payload += "vertices: " + report.vertices.str() + "\n";
        payload += "edges: " + report.edges.str() + "\n";
        payload += "leaves: " + report.leaves.str() + "\n";
        for (const auto& [length, count] : report.table.counts)
            payload += "paths of length " + std::to_string(length) + ": " + count.str() + "\n";
        if (p.degree() >= 3)
            payload += "wiener (closed form): " + dendro::wiener_closed(p).str() + "\n";
        payload += "wiener (length sum): " + report.wiener.str() + "\n";
        payload += "average distance: " + report.average_distance.str() + "\n";
    }
    emit(payload, output_path);
    return 0;
}

int cmd_meddom(const dendro::DendrimerParams& p, const std::string& sigma_text,
               const std::string& format, const std::string& output_path) {
    std::vector<int> sigmas;
    if (sigma_text == "all")
        for (int sigma = 2; sigma <= dendro::diameter(p); ++sigma)
            sigmas.push_back(sigma);
    else
        sigmas.push_back(parse_sigma(sigma_text));
    std::vector<std::pair<int, dendro::ExactRatio>> rows;
    for (int sigma : sigmas)
        rows.emplace_back(sigma, dendro::medium_domination(p, sigma));
    std::string payload;
    if (format == "json") {
        payload = dendro::to_json(dendro::build_index_report(p, sigmas));
    } else if (format == "csv") {
        payload = "sigma,num,den\n";
        for (const auto& [sigma, value] : rows)
            payload += std::to_string(sigma) + "," + value.num().str() + "," +
                       value.den().str() + "\n";
    } else {
        for (const auto& [sigma, value] : rows)
            payload += std::to_string(sigma) + " " + value.str() + "\n";
    }
    emit(payload, output_path);
    return 0;
}

int cmd_verify(const dendro::VerifyOptions& options) {
    std::vector<dendro::CheckResult> results = dendro::run_verification(options);
    std::string first_failure;
    for (const dendro::CheckResult& result : results) {
        if (result.passed) {
            std::cout << "PASS " << result.name << " (" << result.instances << " instances)\n";
        } else {
            std::cout << "FAIL " << result.name << " (" << result.instances
                      << " instances): " << result.counterexample << "\n";
            if (first_failure.empty())
                first_failure = result.counterexample;
        }
    }
    if (!first_failure.empty()) {
        std::cerr << "error: verification failed: " << first_failure << "\n";
        return 2;
    }
    return 0;
}

int cmd_export(const dendro::DendrimerParams& p, const std::string& format,
               const std::string& output_path, long long vertex_cap) {
    dendro::TreeGraph g = dendro::build_dendrimer(p, vertex_cap);
    emit(format == "dot" ? dendro::export_dot(g) : dendro::export_edge_list(g), output_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path counts, Wiener index, and medium domination for dendrimer trees T(n,k)\n"
                 "(set DENDRO_MAX_VERTICES to override the explicit-graph safety cap)"};
    app.require_subcommand(1);

    int n = 1;
    int k = 3;
    int only_length = 0;
    std::string sigma_text = "all";
    std::string table_format = "text";
    std::string indices_format = "text";
    std::string meddom_format = "text";
    std::string export_format = "edgelist";
    std::string output_path;
    int max_n = 4;
    int max_k = 4;
    int random_trees = 200;
    std::uint64_t seed = 1;
    bool inject_fault = false;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "tree radius (number of levels), >= 1")->required();
        cmd->add_option("--k", k, "degree of every non-leaf vertex, >= 2")->required();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output,-o", output_path,
                        "write the payload to this file instead of standard output");
    };

    CLI::App* table_cmd = app.add_subcommand("table", "path counts for every length 1..2n");
    add_params(table_cmd);
    table_cmd->add_option("--ell", only_length, "emit only this length");
    table_cmd->add_option("--format", table_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    add_output(table_cmd);

    CLI::App* indices_cmd = app.add_subcommand(
        "indices", "census, path counts, Wiener index, and average distance");
    add_params(indices_cmd);
    indices_cmd->add_option("--format", indices_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    add_output(indices_cmd);

    CLI::App* meddom_cmd = app.add_subcommand("meddom", "medium domination ratios");
    add_params(meddom_cmd);
    meddom_cmd->add_option("--sigma", sigma_text, "length bound in [2, 2n], or \"all\"");
    meddom_cmd->add_option("--format", meddom_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    add_output(meddom_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "cross-check every formula against the brute-force oracle");
    verify_cmd->add_option("--max-n", max_n, "largest radius in the sweep");
    verify_cmd->add_option("--max-k", max_k, "largest degree in the sweep");
    verify_cmd->add_option("--trees", random_trees, "number of seeded random trees");
    verify_cmd->add_option("--seed", seed, "seed for the random trees");
    verify_cmd->add_flag("--inject-fault", inject_fault,
                         "perturb one internal value to demonstrate the failure contract");

    CLI::App* export_cmd =
        app.add_subcommand("export", "write the explicit tree as an edge list or DOT");
    add_params(export_cmd);
    export_cmd->add_option("--format", export_format, "edgelist|dot")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    add_output(export_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        long long vertex_cap = vertex_cap_from_env();
        if (table_cmd->parsed()) {
            dendro::DendrimerParams p(n, k);
            std::optional<int> ell;
            if (table_cmd->count("--ell") > 0)
                ell = only_length;
            return cmd_table(p, ell, table_format, output_path);
        }
        if (indices_cmd->parsed())
            return cmd_indices(dendro::DendrimerParams(n, k), indices_format, output_path);
        if (meddom_cmd->parsed())
            return cmd_meddom(dendro::DendrimerParams(n, k), sigma_text, meddom_format,
                              output_path);
        if (verify_cmd->parsed()) {
            dendro::VerifyOptions options;
            options.max_n = max_n;
            options.max_k = max_k;
            options.random_trees = random_trees;
            options.seed = seed;
            options.vertex_cap = vertex_cap;
            options.inject_fault = inject_fault;
            return cmd_verify(options);
        }
        if (export_cmd->parsed())
            return cmd_export(dendro::DendrimerParams(n, k), export_format, output_path,
                              vertex_cap);
        std::cerr << "error: no command selected\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
