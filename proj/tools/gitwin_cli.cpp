#include "gitwin/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"gitwin: window exceptional-collection certificates for rank-two linear GIT "
                 "quotients"};

    std::string config_path;
    std::string command;
    std::string out_dir;
    long long degree_budget = -1;
    std::string seed_box;
    bool emit_csv = false;

    app.add_option("--config", config_path, "job config file")->required();
    app.add_option("--command", command,
                   "one of: analyze, collection, verify, reduce, compose, toric")
        ->required();
    app.add_option("--out", out_dir, "directory for artifact files");
    app.add_option("--degree-budget", degree_budget, "override the Hom oracle degree budget");
    app.add_option("--seed-box", seed_box, "half-width multiplier for seed enumeration (rational)");
    app.add_flag("--emit-csv", emit_csv, "emit the lattice classification CSV");

    CLI11_PARSE(app, argc, argv);

    gitwin::JobConfig cfg;
    try {
        cfg = gitwin::JobConfig::parse_file(config_path);
        if (degree_budget >= 0) cfg.degree_budget = degree_budget;
        if (!seed_box.empty()) cfg.seed_box = gitwin::Rat::parse(seed_box);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    gitwin::CommandResult res = gitwin::run_command(command, cfg, emit_csv);
    std::cout << res.report;
    if (!out_dir.empty() && !res.artifacts.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        for (const auto& [name, content] : res.artifacts) {
            std::ofstream f(std::filesystem::path(out_dir) / name);
            f << content;
        }
    } else {
        for (const auto& [name, content] : res.artifacts)
            std::cout << "--- artifact: " << name << " ---\n" << content;
    }
    return res.exit_code;
}
