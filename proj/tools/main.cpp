#include "semicm/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<int> parse_basis_flag(const std::string& csv) {
    std::vector<int> indices;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) indices.push_back(std::stoi(item));
    return indices;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompose simplicial affine semigroup rings into shifted monomial "
                 "ideals, decide the Cohen-Macaulay property, and compute the minimal "
                 "Cohen-Macaulay closure and the saturation."};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string format = "text";
    std::string basis_csv;
    long bound = 0;
    long samples = 100;
    unsigned long seed = 12345;
    bool verify = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "input document (JSON file, or - for stdin)");
        cmd->add_option("--format", format, "output format: text or machine")
            ->check(CLI::IsMember({"text", "machine"}));
        cmd->add_option("--bound", bound, "lambda box cap for verification / probing");
        cmd->add_option("--basis", basis_csv,
                        "comma separated generator indices to use as the basis");
    };

    auto* decompose = app.add_subcommand("decompose", "compute the Apery classes and summands");
    decompose->add_flag("--verify", verify, "also run the exhaustive decomposition check");
    auto* cm_check = app.add_subcommand("cm-check", "decide the Cohen-Macaulay property");
    auto* cm_closure = app.add_subcommand("cm-closure", "compute the minimal Cohen-Macaulay closure");
    auto* saturate = app.add_subcommand("saturate", "compute the saturation");
    auto* verify_cmd = app.add_subcommand("verify", "run both exhaustive verifiers");
    auto* probe = app.add_subcommand("probe-minimality", "randomly probe the minimality theorem");
    probe->add_option("--samples", samples, "number of random extra-point sets");
    probe->add_option("--seed", seed, "random seed");
    for (CLI::App* cmd : {decompose, cm_check, cm_closure, saturate, verify_cmd, probe})
        add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    semicm::Options options;
    if (decompose->parsed()) options.command = semicm::Command::Decompose;
    if (cm_check->parsed()) options.command = semicm::Command::CmCheck;
    if (cm_closure->parsed()) options.command = semicm::Command::CmClosure;
    if (saturate->parsed()) options.command = semicm::Command::Saturate;
    if (verify_cmd->parsed()) options.command = semicm::Command::Verify;
    if (probe->parsed()) options.command = semicm::Command::ProbeMinimality;
    options.format =
        format == "machine" ? semicm::OutputFormat::Machine : semicm::OutputFormat::Text;
    if (bound > 0) options.bound = bound;
    if (!basis_csv.empty()) options.basis_override = parse_basis_flag(basis_csv);
    options.verify = verify;
    options.samples = samples;
    options.seed = seed;

    try {
        auto [output, code] = semicm::run_text(read_input(input_path), options);
        // Verification failures (code 3) still carry a full report.
        (code == 1 || code == 2 ? std::cerr : std::cout) << output;
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
