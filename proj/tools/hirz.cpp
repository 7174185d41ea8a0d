#include "hirz/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <utility>

int main(int argc, char** argv) {
    CLI::App app{"Exceptional-set bounds for three-component curves on Hirzebruch surfaces"};
    app.require_subcommand(1);

    hirz::cli::RunConfig cfg;
    std::string gamma;
    const std::pair<const char*, const char*> commands[] = {
        {"lattice", "divisor class invariants on F_e"},
        {"germ", "plane curve germ invariants"},
        {"bound", "exceptional-set bound for a configuration"},
        {"verify", "search hyper-bitangent curves of an explicit configuration"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input", cfg.input_path, "JSON input file")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        if (std::string(name) == "bound") sub->add_option("--gamma", gamma, "positive integer gamma(B)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : hirz::cli::Validation;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (!gamma.empty()) {
        hirz::Integer g;
        if (g.set_str(gamma, 10) != 0 || g <= 0) {
            std::cerr << "error: --gamma must be a positive integer\n";
            return hirz::cli::Validation;
        }
        cfg.gamma = g;
    }

    const auto r = hirz::cli::run(cfg);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
