#include "otkit/pipelines.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"otcert - certified symbolic-numeric checks for Oeljeklaus-Toma manifold data"};
    app.require_subcommand(1);
    app.fallthrough();

    otkit::RunOptions opt;
    std::string out_path;
    app.add_option("--seed", opt.seed, "random seed recorded in the certificate (default 0)");
    app.add_option("--bits", opt.bits, "working precision in bits (default 128)");
    app.add_option("--trials", opt.trials, "randomized trials per check (default 1000)");
    app.add_option("--bound", opt.bound, "unit-search coefficient box (default 5)");
    app.add_option("--out", out_path, "write the certificate to this path instead of stdout");

    static const std::map<std::string, std::string> kHelp = {
        {"signature", "certify the signature (s, t) and embeddings of a number field"},
        {"units", "bounded unit search with log-map and Dirichlet-rank checks"},
        {"admissible", "admissibility certificate for a unit system"},
        {"build-ot", "assemble OT manifold data and run the full validation bundle"},
        {"check-form", "semipositive (1,1)-form suite: dd^c, invariance, kernel"},
        {"inoue", "Inoue S^0 surface from a matrix or a cubic field with a unit"},
        {"embed", "embed the Inoue surface of a subfield into the OT manifold"},
        {"probe", "report subfield signatures for candidate generators"},
    };
    std::map<std::string, std::string> spec_paths;
    for (const std::string& name : otkit::command_names()) {
        CLI::App* sub = app.add_subcommand(name, kHelp.at(name));
        sub->add_option("spec", spec_paths[name], "spec file (JSON)")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        std::string text = otkit::read_text_file(spec_paths[command]);
        otkit::Certificate cert = otkit::run_command(command, text, opt);
        std::string body = cert.to_text();
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path);
            if (!out.good()) {
                std::cerr << "cannot write '" << out_path << "'\n";
                return 3;
            }
            out << body;
        }
        return cert.exit_code();
    } catch (const otkit::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const otkit::precision_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
