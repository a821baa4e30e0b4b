/*
   Copyright 2026 the gqc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>

#include <CLI11.hpp>

#include "gqc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Gröbner-basis toolkit for generalized quasi-cyclic codes"};
    app.require_subcommand(1);

    gqc::cli::BasisOptions basis_opt;
    auto* basis = app.add_subcommand("basis", "Compute a Gröbner basis from a parity-check matrix");
    basis->add_option("-i,--input", basis_opt.input, "parity-check matrix file")->required();
    basis->add_option("-a,--algorithm", basis_opt.algorithm, "echelon | transpose")
        ->check(CLI::IsMember({"echelon", "transpose"}));
    basis->add_flag("--no-reduce", basis_opt.no_reduce, "emit the basis before inter-reduction");
    basis->add_option("-o,--output", basis_opt.output, "basis file to write (default: stdout)");

    gqc::cli::EncodeOptions encode_opt;
    auto* encode = app.add_subcommand("encode", "Systematically encode a message");
    encode->add_option("-b,--basis", encode_opt.basis, "basis file")->required();
    encode->add_option("-m,--message", encode_opt.message, "message symbols, e.g. \"1 0 1\"");
    encode->add_option("--message-file", encode_opt.message_file, "read the message from a file");
    encode->add_option("-o,--output", encode_opt.output, "codeword file to write (default: stdout)");

    gqc::cli::VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Check a basis against a parity-check matrix");
    verify->add_option("-i,--input", verify_opt.input, "parity-check matrix file")->required();
    verify->add_option("-b,--basis", verify_opt.basis, "basis file")->required();

    gqc::cli::MetricsOptions metrics_opt;
    auto* metrics = app.add_subcommand("metrics", "Measure field operations against the estimates");
    metrics->add_option("-i,--input", metrics_opt.input, "parity-check matrix file")->required();
    metrics->add_option("-o,--output", metrics_opt.output, "CSV file to write (default: stdout)");

    gqc::cli::CircuitOptions circuit_opt;
    auto* circuit = app.add_subcommand("circuit", "Report encoder circuit-size bounds");
    circuit->add_option("-b,--basis", circuit_opt.basis, "basis file")->required();
    circuit->add_option("--selfcheck", circuit_opt.selfcheck,
                        "run N random messages through the serial encoder");

    gqc::cli::CheckOptions check_opt;
    auto* check = app.add_subcommand("check-gqc", "Test whether a matrix defines a GQC code");
    check->add_option("-i,--input", check_opt.input, "parity-check matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? gqc::cli::kValidationFailure : gqc::cli::kOk;
    }

    if (basis->parsed()) return gqc::cli::run_basis(basis_opt, std::cout, std::cerr);
    if (encode->parsed()) return gqc::cli::run_encode(encode_opt, std::cout, std::cerr);
    if (verify->parsed()) return gqc::cli::run_verify(verify_opt, std::cout, std::cerr);
    if (metrics->parsed()) return gqc::cli::run_metrics(metrics_opt, std::cout, std::cerr);
    if (circuit->parsed()) return gqc::cli::run_circuit(circuit_opt, std::cout, std::cerr);
    if (check->parsed()) return gqc::cli::run_check(check_opt, std::cout, std::cerr);
    return gqc::cli::kValidationFailure;
}
