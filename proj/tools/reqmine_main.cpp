#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "reqmine/errors.hpp"
#include "reqmine/kernels.hpp"
#include "reqmine/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInternalError = 2;

bool color_enabled(const reqmine::PipelineConfig& config) {
    if (std::getenv("REQMINE_NO_COLOR") != nullptr) return false;
    if (!config.out_path.empty()) return false;
    return isatty(fileno(stdout)) != 0;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw reqmine::Error("cannot open output file: " + path);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw reqmine::Error("failed writing output file: " + path);
}

int run_analyze(const reqmine::PipelineConfig& config) {
    const reqmine::PriorityReport report = reqmine::run_pipeline(config);

    for (const std::string& warning : report.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }

    if (config.format == "json") {
        write_output(config.out_path, reqmine::export_json(report));
    } else {
        write_output(config.out_path, reqmine::export_text(report, color_enabled(config)));
    }

    if (!config.dot_path.empty()) {
        write_output(config.dot_path,
                     reqmine::export_dot(report.correlation, report.forest,
                                         report.requirement_names));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reqmine - mines binary survey responses into a prioritized feature order"};
    app.set_version_flag("--version", "reqmine 1.0.0");
    app.require_subcommand(1);

    reqmine::PipelineConfig config;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Run the full analysis on a binary survey CSV file");
    analyze->add_option("--input", config.input_path, "Survey CSV (header + 0/1 rows)")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_option("--min-support", config.apriori.min_support,
                        "Minimum itemset support")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    analyze->add_option("--min-confidence", config.apriori.min_confidence,
                        "Minimum rule confidence")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    analyze->add_option("--max-rule-len", config.apriori.max_rule_length,
                        "Maximum itemset/rule length")
        ->capture_default_str()
        ->check(CLI::Range(2u, 64u));
    analyze->add_option("--min-lift", config.apriori.min_lift, "Minimum rule lift")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--top-threshold", config.top_threshold,
                        "Frequency cut for top requirements (default: --min-support)")
        ->check(CLI::NonNegativeNumber);
    analyze->add_flag("--complete-graph", config.complete_graph,
                      "Correlate every requirement pair, not only rule adjacencies");
    analyze->add_flag("--all-attributes", config.all_attributes,
                      "Treat every attribute as a requirement regardless of frequency");
    analyze->add_option("--format", config.format, "Report format")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--out", config.out_path, "Write the report to a file instead of stdout");
    analyze->add_option("--dot", config.dot_path, "Also write a Graphviz rendering to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        return run_analyze(config);
    } catch (const reqmine::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const reqmine::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
