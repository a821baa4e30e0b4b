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

#ifndef GQC_CLI_HPP
#define GQC_CLI_HPP

#include <iosfwd>
#include <string>

namespace gqc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kIoError = 2;
inline constexpr int kInternalError = 3;

struct BasisOptions {
    std::string input;             // parity-check matrix file
    std::string algorithm = "echelon";  // "echelon" | "transpose"
    bool no_reduce = false;
    std::string output;            // empty -> stdout
};

struct EncodeOptions {
    std::string basis;
    std::string message;       // inline symbols, e.g. "1 0 1"
    std::string message_file;  // alternative to `message`
    std::string output;        // empty -> stdout
};

struct VerifyOptions {
    std::string input;  // parity-check matrix file
    std::string basis;
};

struct MetricsOptions {
    std::string input;
    std::string output;  // empty -> stdout
};

struct CircuitOptions {
    std::string basis;
    int selfcheck = 0;  // messages to run through the serial encoder
};

struct CheckOptions {
    std::string input;
};

int run_basis(const BasisOptions& opt, std::ostream& out, std::ostream& err);
int run_encode(const EncodeOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int run_metrics(const MetricsOptions& opt, std::ostream& out, std::ostream& err);
int run_circuit(const CircuitOptions& opt, std::ostream& out, std::ostream& err);
int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace gqc::cli

#endif
