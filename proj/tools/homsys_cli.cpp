#include <iostream>

#include <CLI11.hpp>

#include "homsys/io.hpp"
#include "homsys/selftest.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for module filtrations over bound quiver algebras on GF(p)"};
    std::string command;
    std::vector<std::string> args;
    std::string input;
    std::string format = "human";
    std::uint64_t seed = 0;
    app.add_option("command", command,
                   "check | height | hom | ext | verify | normalize | hfilt | decompose | selftest")
        ->required();
    app.add_option("args", args, "command arguments");
    app.add_option("-i,--input", input, "description file");
    app.add_option("-s,--seed", seed, "seed for randomized searches");
    app.add_option("-f,--format", format, "human | structured")
        ->check(CLI::IsMember({"human", "structured"}));
    CLI11_PARSE(app, argc, argv);

    if (command == "selftest") return homsys::run_selftest(std::cout);

    nlohmann::json report;
    int code = 0;
    if (input.empty()) {
        report["command"] = command;
        report["seed"] = seed;
        report["verdict"] = "error";
        report["exit"] = 2;
        report["details"] = {{"message", "--input is required"}};
        code = 2;
    } else {
        try {
            homsys::io::InputFile in = homsys::io::parse_file(input);
            homsys::io::CommandResult res =
                homsys::io::run_command(in, command, args, seed, homsys::SearchOptions{});
            report = std::move(res.report);
            code = res.exit_code;
        } catch (const std::exception& e) {
            report["command"] = command;
            report["seed"] = seed;
            report["verdict"] = "error";
            report["exit"] = 2;
            report["details"] = {{"message", e.what()}};
            code = 2;
        }
    }
    report["input"] = input;
    if (format == "structured")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << homsys::io::render_human(report);
    return code;
}
