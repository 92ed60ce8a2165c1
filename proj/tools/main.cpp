#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "deltaconf/commands.hpp"

namespace {

int exit_code_for(deltaconf::ErrorCategory c) {
    using deltaconf::ErrorCategory;
    switch (c) {
        case ErrorCategory::Usage: return 2;
        case ErrorCategory::Io: return 3;
        case ErrorCategory::Parse: return 4;
        case ErrorCategory::Domain: return 5;
        case ErrorCategory::Limit: return 6;
    }
    return 1;
}

void add_common_options(CLI::App* cmd, deltaconf::RunConfig& cfg, std::string& path_type,
                        std::string& edge_format, std::string& attribute_mode) {
    cmd->add_option("--input", cfg.input, "edge-list file")->required();
    cmd->add_option("--attributes", cfg.attributes, "node attribute file");
    cmd->add_option("--attribute", cfg.attribute, "attribute column name");
    cmd->add_option("--delta", cfg.delta, "window length (instants)");
    cmd->add_option("--alpha", cfg.alpha, "distance decay exponent");
    cmd->add_option("--stride", cfg.stride, "anchor step (instants)");
    cmd->add_option("--path-type", path_type, "shortest|fastest|foremost");
    cmd->add_option("--bucket", cfg.bucket, "raw time units per instant");
    cmd->add_option("--null-samples", cfg.null_samples, "rewired samples per window");
    cmd->add_option("--seed", cfg.seed, "RNG seed")->envname("DELTACONF_SEED");
    cmd->add_option("--output", cfg.output, "output file (default stdout)");
    cmd->add_option("--format", cfg.format, "csv|json");
    cmd->add_option("--edge-format", edge_format, "generic|sociopatterns");
    cmd->add_option("--attribute-mode", attribute_mode, "static|temporal");
    cmd->add_option("--delimiter", cfg.delimiter, "field delimiter override");
    cmd->add_option("--workers", cfg.workers, "worker thread count")
        ->envname("DELTACONF_WORKERS");
}

void resolve_enums(deltaconf::RunConfig& cfg, const std::string& path_type,
                   const std::string& edge_format, const std::string& attribute_mode) {
    cfg.path_type = deltaconf::path_type_from_string(path_type);
    if (edge_format == "generic")
        cfg.edge_format = deltaconf::IngestConfig::EdgeFormat::Generic;
    else if (edge_format == "sociopatterns")
        cfg.edge_format = deltaconf::IngestConfig::EdgeFormat::Sociopatterns;
    else
        throw deltaconf::Error(deltaconf::ErrorCategory::Usage,
                               "unknown edge format: " + edge_format);
    if (attribute_mode == "static")
        cfg.attribute_mode = deltaconf::IngestConfig::AttributeMode::Static;
    else if (attribute_mode == "temporal")
        cfg.attribute_mode = deltaconf::IngestConfig::AttributeMode::Temporal;
    else
        throw deltaconf::Error(deltaconf::ErrorCategory::Usage,
                               "unknown attribute mode: " + attribute_mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delta-conformity: multi-scale homophily trends over stream graphs"};
    app.require_subcommand(1);

    deltaconf::RunConfig cfg;
    std::string path_type = "shortest";
    std::string edge_format = "generic";
    std::string attribute_mode = "static";

    CLI::App* info = app.add_subcommand("info", "summarize an ingested stream");
    CLI::App* trends = app.add_subcommand("trends", "sliding-window score trends");
    CLI::App* zscore = app.add_subcommand("zscore", "group significance vs rewired nulls");
    for (CLI::App* cmd : {info, trends, zscore})
        add_common_options(cmd, cfg, path_type, edge_format, attribute_mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        resolve_enums(cfg, path_type, edge_format, attribute_mode);
        cfg.validate();
        if (info->parsed()) {
            std::cout << deltaconf::run_info(cfg);
        } else if (trends->parsed()) {
            deltaconf::emit(deltaconf::run_trends(cfg), cfg);
        } else if (zscore->parsed()) {
            deltaconf::emit(deltaconf::run_zscore(cfg), cfg);
        }
    } catch (const deltaconf::Error& e) {
        std::cerr << "error [" << deltaconf::to_string(e.category()) << "] " << e.what() << '\n';
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error [internal] " << e.what() << '\n';
        return 1;
    }
    return 0;
}
