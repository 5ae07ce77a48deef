/**
 * @file gdl_main.cpp
 * @brief `gdl` command-line entry point.
 *
 * Usage: gdl <command> --in problem.json [--out result.json] [--seed N]
 *        [--tolerance X]
 *
 * The result document is printed to standard output (and copied to --out
 * when given); diagnostics go to standard error only. Exit codes: 0 the
 * command computed a result (even when a check's verdict is "fail"), 2 the
 * input was invalid (malformed JSON, schema violation, unknown command),
 * 3 an internal numeric failure (e.g. the canonical dual of a non-frame).
 * The environment variable GDL_THREADS caps internal linear-algebra
 * parallelism; dispatch itself is single-threaded.
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include "gdl/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Gabor frame and Heisenberg-module duality over finite abelian groups"};
    app.name("gdl");
    std::string command;
    std::string in_path;
    std::string out_path;
    gdl::io::RunOptions options;
    app.add_option("command", command,
                   "adjoint | covolume | bounds | riesz-bounds | dual | tight | check-figa | "
                   "check-wexler-raz | check-duality | check-associativity | check-weil | "
                   "construct | module-norm | spectrogram")
        ->required();
    app.add_option("--in", in_path, "Problem document (JSON)")->required();
    app.add_option("--out", out_path, "Also write the result document to this file");
    app.add_option("--seed", options.seed, "Seed for deterministic default signals");
    app.add_option("--tolerance", options.tolerance,
                   "Override the command's default pass tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    if (const char* threads = std::getenv("GDL_THREADS")) {
        const int count = std::atoi(threads);
        if (count > 0) Eigen::setNbThreads(count);
    }

    try {
        std::ifstream in(in_path);
        if (!in) {
            std::cerr << "gdl: cannot open \"" << in_path << "\"\n";
            return 2;
        }
        const nlohmann::json doc = nlohmann::json::parse(in);
        const gdl::io::ProblemDocument problem = gdl::io::parse_problem(doc);
        const nlohmann::json result = gdl::io::run(command, problem, options);
        const std::string text = result.dump(2);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "gdl: cannot open \"" << out_path << "\" for writing\n";
                return 2;
            }
            out << text << "\n";
        }
        std::cout << text << std::endl;
        return 0;
    } catch (const nlohmann::json::parse_error& error) {
        std::cerr << "gdl: invalid input: " << error.what() << "\n";
        return 2;
    } catch (const gdl::InvalidInputError& error) {
        std::cerr << "gdl: invalid input: " << error.what() << "\n";
        return 2;
    } catch (const gdl::NumericError& error) {
        std::cerr << "gdl: numeric failure: " << error.what() << "\n";
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "gdl: numeric failure: " << error.what() << "\n";
        return 3;
    }
}
