#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pinlef/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Decide, count and enumerate Pin- and Pin+ structures"};
    app.require_subcommand(1);

    std::string file;
    std::string kind = "both";
    std::string format = "text";
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"decide", "Decide existence and print certificates"},
        {"enumerate", "List every structure by its generator values"},
        {"oracle", "Cross-check the decider against exhaustive search"},
        {"surface-info", "Print the surface's homology presentation"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Input document")->required()->check(CLI::ExistingFile);
        sub->add_option("--kind", kind, "minus, plus or both")->check(CLI::IsMember({"minus", "plus", "both"}));
        sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read " << file << "\n";
        return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();

    const auto command = pinlef::parse_command(app.get_subcommands().front()->get_name());
    const auto result = pinlef::run_text(*command, text.str(), *pinlef::parse_kind(kind), *pinlef::parse_format(format));
    (result.exit_code == 2 ? std::cerr : std::cout) << result.output;
    return result.exit_code;
}
