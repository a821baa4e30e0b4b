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

#include "gqc/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gqc/echelon.hpp"
#include "gqc/encoder.hpp"
#include "gqc/io.hpp"
#include "gqc/metrics.hpp"
#include "gqc/transpose.hpp"

namespace gqc::cli {

namespace {

ParsedMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_matrix(in);
}

ParsedBasis load_basis(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_basis(in);
}

// Writes through `sink`, either to the given file or to `fallback`.
int with_output(const std::string& path, std::ostream& fallback, std::ostream& err,
                const std::function<void(std::ostream&)>& sink) {
    if (path.empty()) {
        sink(fallback);
        return kOk;
    }
    std::ofstream out(path);
    if (!out) {
        err << "error: cannot write '" << path << "'\n";
        return kIoError;
    }
    sink(out);
    return kOk;
}

int guard(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
}

std::vector<Fe> parse_message(const std::string& text, const Field& f) {
    std::istringstream is(text);
    std::vector<Fe> out;
    std::string tok;
    while (is >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("message symbol '" + tok + "' is not an integer");
        unsigned long v = std::stoul(tok);
        if (v >= f.order()) throw std::invalid_argument("message symbol '" + tok + "' is not below q");
        out.push_back(static_cast<Fe>(v));
    }
    return out;
}

}  // namespace

int run_basis(const BasisOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        if (opt.algorithm != "echelon" && opt.algorithm != "transpose") {
            err << "error: unknown algorithm '" << opt.algorithm << "'\n";
            return kValidationFailure;
        }
        ParsedMatrix pm = load_matrix(opt.input);
        if (!is_gqc(pm.matrix, pm.profile)) {
            err << "error: the row space of the matrix is not shift-invariant for this profile\n";
            return kValidationFailure;
        }
        GrobnerBasis basis = opt.algorithm == "echelon"
                                 ? grobner_via_echelon(pm.matrix, pm.profile, !opt.no_reduce)
                                 : grobner_via_transpose(pm.matrix, pm.profile, !opt.no_reduce);
        return with_output(opt.output, out, err, [&](std::ostream& o) { write_basis(o, basis); });
    });
}

int run_encode(const EncodeOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        ParsedBasis pb = load_basis(opt.basis);
        if (pb.basis.ordering != Ordering::POT) {
            err << "error: encoding requires a POT basis\n";
            return kValidationFailure;
        }
        CodeSpec spec = CodeSpec::from_basis(pb.basis);
        std::string text = opt.message;
        if (!opt.message_file.empty()) {
            std::ifstream in(opt.message_file);
            if (!in) throw ParseError(0, "cannot open '" + opt.message_file + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        std::vector<Fe> message = parse_message(text, spec.profile().field());
        std::vector<Fe> codeword = encode(message, spec);
        return with_output(opt.output, out, err, [&](std::ostream& o) {
            for (std::size_t i = 0; i < codeword.size(); ++i) o << (i ? " " : "") << codeword[i];
            o << '\n';
        });
    });
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        ParsedMatrix pm = load_matrix(opt.input);
        ParsedBasis pb = load_basis(opt.basis);
        if (pm.profile != pb.basis.profile) {
            err << "error: matrix and basis profiles differ\n";
            return kValidationFailure;
        }
        const OrbitProfile& profile = pm.profile;
        const int m = profile.orbit_count();

        GrobnerBasis dual = [&] {
            if (pm.matrix.rows() == 0) {
                std::vector<PolyVec> v;
                for (int i = 0; i < m; ++i) v.push_back(PolyVec::orbit_relation(profile, i));
                return GrobnerBasis{std::move(v), Ordering::RPOT, true, profile};
            }
            std::vector<PolyVec> rows;
            for (std::size_t r = 0; r < pm.matrix.rows(); ++r)
                rows.push_back(PolyVec::from_coords(pm.matrix.row(r), profile));
            return reduce_basis(buchberger(rows, profile, Ordering::RPOT));
        }();

        bool orthogonal = true;
        for (int i = 0; i < m && orthogonal; ++i)
            for (int j = 0; j < m && orthogonal; ++j) {
                ScalarProduct sp = scalar_product(pb.basis.vectors[static_cast<std::size_t>(i)],
                                                  dual.vectors[static_cast<std::size_t>(j)]);
                if (!sp.value.is_zero()) orthogonal = false;
            }
        out << "scalar-orthogonality: " << (orthogonal ? "ok" : "FAIL") << '\n';

        GrobnerBasis reduced = pb.basis.reduced ? pb.basis : reduce_basis(pb.basis);
        MatrixFq G = generator_matrix(reduced);
        bool annihilated = G.rows() == 0 || (G * pm.matrix.transposed()).is_zero();
        out << "generator-times-parity: " << (annihilated ? "ok" : "FAIL") << '\n';
        return orthogonal && annihilated ? kOk : kValidationFailure;
    });
}

int run_metrics(const MetricsOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        ParsedMatrix pm = load_matrix(opt.input);
        if (!is_gqc(pm.matrix, pm.profile)) {
            err << "error: the row space of the matrix is not shift-invariant for this profile\n";
            return kValidationFailure;
        }
        const int n = pm.profile.length();
        const int k = n - static_cast<int>(rank_of(pm.matrix));
        const int m = pm.profile.orbit_count();
        ComplexityEstimate est = estimate_complexity(n, k, m);
        OpCounter echelon = measure_ops(pm.matrix, pm.profile, BasisAlgorithm::Echelon);
        OpCounter transpose = measure_ops(pm.matrix, pm.profile, BasisAlgorithm::Transpose);
        return with_output(opt.output, out, err, [&](std::ostream& o) {
            o << "n,k,m,algorithm,adds,subs,muls,divs,total,estimate\n";
            o << n << ',' << k << ',' << m << ",echelon," << echelon.adds << ',' << echelon.subs << ','
              << echelon.muls << ',' << echelon.divs << ',' << echelon.total() << ',' << est.echelon << '\n';
            o << n << ',' << k << ',' << m << ",transpose," << transpose.adds << ',' << transpose.subs << ','
              << transpose.muls << ',' << transpose.divs << ',' << transpose.total() << ',' << est.transpose
              << '\n';
        });
    });
}

int run_circuit(const CircuitOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        ParsedBasis pb = load_basis(opt.basis);
        if (pb.basis.ordering != Ordering::POT) {
            err << "error: circuit bounds require a POT basis\n";
            return kValidationFailure;
        }
        GrobnerBasis reduced = pb.basis.reduced ? pb.basis : reduce_basis(pb.basis);
        CircuitReport rep = circuit_bounds(reduced);
        out << "fg-shape: " << (rep.fg_shape ? "true" : "false") << '\n';
        out << "adder-bound: " << rep.adder_bound << '\n';
        out << "memory-bound: " << rep.memory_bound << '\n';
        out << "adders-from-degrees: " << rep.adders_from_degrees << '\n';
        out << "memory-from-degrees: " << rep.memory_from_degrees << '\n';
        out << "orbit-dims:";
        for (int kd : rep.orbit_dims) out << ' ' << kd;
        out << "\ndeltas:";
        for (int d : rep.deltas) out << ' ' << d;
        out << '\n';

        if (opt.selfcheck > 0) {
            if (!rep.fg_shape) {
                err << "error: self-check requires unit diagonals outside the last orbit\n";
                return kValidationFailure;
            }
            CodeSpec spec = CodeSpec::from_basis(reduced);
            std::mt19937 rng(0x67636371u);
            const unsigned q = spec.profile().field().order();
            for (int t = 0; t < opt.selfcheck; ++t) {
                std::vector<Fe> msg(static_cast<std::size_t>(spec.dimension()));
                for (Fe& x : msg) x = static_cast<Fe>(rng() % q);
                if (simulate_serial_encoder(spec, msg) != encode(msg, spec)) {
                    out << "selfcheck: FAIL (message " << t << ")\n";
                    return kValidationFailure;
                }
            }
            out << "selfcheck: ok (" << opt.selfcheck << " messages)\n";
        }
        return kOk;
    });
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        ParsedMatrix pm = load_matrix(opt.input);
        bool ok = is_gqc(pm.matrix, pm.profile);
        out << "gqc: " << (ok ? "yes" : "no") << '\n';
        return ok ? kOk : kValidationFailure;
    });
}

}  // namespace gqc::cli
