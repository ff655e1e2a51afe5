// Copyright 2026 The qschmidt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qschmidt/cli.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qschmidt/error.h"
#include "qschmidt/json_io.h"
#include "qschmidt/ketparse.h"
#include "qschmidt/schmidt.h"
#include "qschmidt/teleport.h"
#include "qschmidt/witness.h"

namespace qschmidt {

namespace {

constexpr uint64_t kMaxShots = 10'000'000;
constexpr size_t kTextShotLines = 100;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string num_list(const std::vector<double> &xs) {
    std::string out;
    for (size_t k = 0; k < xs.size(); k++) {
        out += (k ? " " : "") + num(xs[k]);
    }
    return out;
}

Json vector_list(const std::vector<double> &xs) {
    Json out = Json::array();
    for (double x : xs) {
        out.push_back(x);
    }
    return out;
}

Json columns(const ComplexMatrix &m) {
    Json out = Json::array();
    for (size_t k = 0; k < m.cols(); k++) {
        out.push_back(complex_list(m.col(k)));
    }
    return out;
}

size_t qubits_for_side(size_t side, const std::string &what) {
    size_t n = 0;
    while ((size_t{1} << n) < side) {
        n++;
    }
    if ((size_t{1} << n) != side) {
        throw DimensionError(what + " has side " + std::to_string(side) + ", which is not a power of two");
    }
    return n;
}

// Where the report lands: stdout unless --output names a file.
class Sink {
   public:
    Sink(std::ostream &fallback, const std::string &path) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw InputError("cannot write to " + path);
            }
            out_ = &file_;
        }
    }
    std::ostream &stream() {
        return *out_;
    }

   private:
    std::ofstream file_;
    std::ostream *out_;
};

struct Common {
    std::string format = "text";
    std::string output;
    std::optional<double> threshold;
};

double resolve_threshold(const Common &c) {
    double t = kDefaultSchmidtThreshold;
    if (const char *env = std::getenv("SCHMIDT_THRESHOLD"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        t = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw InputError(std::string("SCHMIDT_THRESHOLD is not a number: ") + env);
        }
    }
    if (c.threshold) {
        t = *c.threshold;
    }
    if (!(t > 0) || !std::isfinite(t)) {
        throw InputError("threshold must be a positive finite number");
    }
    return t;
}

Json schmidt_json(const SchmidtResult &r, double residual) {
    Json out;
    out["method"] = to_string(r.method);
    out["coefficients"] = vector_list(r.coefficients);
    out["raw_coefficients"] = vector_list(r.raw_coefficients);
    out["schmidt_number"] = r.schmidt_number;
    out["verdict"] = to_string(r.verdict);
    out["residual"] = residual;
    out["basis_a"] = columns(r.basis_a);
    out["basis_b"] = columns(r.basis_b);
    if (r.reduced) {
        Json red;
        red["rho_a"] = matrix_to_json(r.reduced->rho_a);
        red["rho_b"] = matrix_to_json(r.reduced->rho_b);
        red["eigenvalues_a"] = vector_list(r.reduced->eigenvalues_a);
        red["eigenvalues_b"] = vector_list(r.reduced->eigenvalues_b);
        red["spectrum_gap"] = r.reduced->spectrum_gap;
        out["reduced"] = std::move(red);
    }
    return out;
}

void schmidt_text(std::ostream &o, const SchmidtResult &r, double residual) {
    o << "[" << to_string(r.method) << "]\n";
    o << "  coefficients:   " << num_list(r.coefficients) << "\n";
    o << "  schmidt number: " << r.schmidt_number << "\n";
    o << "  residual:       " << num(residual) << "\n";
    if (r.reduced) {
        o << "  rho_A eigenvalues: " << num_list(r.reduced->eigenvalues_a) << "\n";
        o << "  rho_B eigenvalues: " << num_list(r.reduced->eigenvalues_b) << "\n";
    }
}

std::string column_state_text(const ComplexMatrix &basis, size_t k) {
    auto v = basis.col(k);
    size_t n = qubits_for_side(v.size(), "factor");
    return format_state(StateVector::normalized(n, std::move(v)), 1e-10);
}

int cmd_analyze(const std::string &text, size_t k, const Common &c, std::ostream &out) {
    double threshold = resolve_threshold(c);
    Evaluation ev = parse_state(text);
    const StateVector &state = ev.state;
    Partition part(k, state.qubits());
    Analysis a = analyze(state, part, threshold);

    std::optional<std::pair<std::string, std::string>> factors;
    if (a.svd.schmidt_number == 1) {
        factors.emplace(column_state_text(a.svd.basis_a, 0), column_state_text(a.svd.basis_b, 0));
    }

    Sink sink(out, c.output);
    std::ostream &o = sink.stream();
    if (c.format == "json") {
        Json doc;
        doc["command"] = "analyze";
        doc["input"] = text;
        doc["canonical"] = format_state(state);
        doc["qubits"] = state.qubits();
        doc["partition"] = k;
        doc["dims"] = Json::array({part.dim_a(), part.dim_b()});
        doc["threshold"] = threshold;
        doc["raw_norm"] = ev.raw_norm;
        doc["renormalized"] = ev.renormalized;
        doc["methods"]["svd"] = schmidt_json(a.svd, a.residual_svd);
        doc["methods"]["partial_trace"] = schmidt_json(a.ptrace, a.residual_ptrace);
        doc["max_deviation"] = a.max_deviation;
        doc["schmidt_number"] = a.svd.schmidt_number;
        doc["verdict"] = to_string(a.svd.verdict);
        if (factors) {
            doc["factorization"] = {{"a", factors->first}, {"b", factors->second}};
        } else {
            doc["factorization"] = nullptr;
        }
        o << doc.dump(2) << "\n";
        return kExitOk;
    }

    o << "state:      " << text << "\n";
    o << "canonical:  " << format_state(state) << "\n";
    if (ev.renormalized) {
        o << "note:       input norm was " << num(ev.raw_norm) << "; state renormalized\n";
    }
    o << "partition:  k=" << k << " of " << state.qubits() << " qubits (N=" << part.dim_a() << ", M=" << part.dim_b()
      << ")\n";
    o << "threshold:  " << num(threshold) << "\n";
    schmidt_text(o, a.svd, a.residual_svd);
    schmidt_text(o, a.ptrace, a.residual_ptrace);
    o << "max deviation between methods: " << num(a.max_deviation) << "\n";
    o << "verdict: " << to_string(a.svd.verdict) << " (schmidt number " << a.svd.schmidt_number << ")\n";
    if (factors) {
        o << "factorization: (" << factors->first << ") (x) (" << factors->second << ")\n";
    }
    return kExitOk;
}

int cmd_teleport(const std::string &text, uint64_t seed, uint64_t shots, const Common &c, std::ostream &out) {
    if (shots < 1 || shots > kMaxShots) {
        throw InputError("--shots must be between 1 and " + std::to_string(kMaxShots));
    }
    StateVector psi = parse_state(text).state;
    if (psi.qubits() != 1) {
        throw DimensionError("teleport expected 1 qubit, got " + std::to_string(psi.qubits()));
    }

    MeasurementRng rng(seed);
    std::vector<TeleportTranscript> runs;
    runs.reserve(shots);
    std::array<uint64_t, 4> counts{};
    double min_fidelity = 1;
    for (uint64_t s = 0; s < shots; s++) {
        runs.push_back(teleport(psi, rng));
        counts[static_cast<size_t>(runs.back().outcome)]++;
        min_fidelity = std::min(min_fidelity, runs.back().fidelity);
    }
    double chi2 = chi_square_uniform(counts);

    Sink sink(out, c.output);
    std::ostream &o = sink.stream();
    if (c.format == "json") {
        Json doc;
        doc["command"] = "teleport";
        doc["input"] = text;
        doc["canonical"] = format_state(psi);
        doc["seed"] = seed;
        doc["shots"] = shots;
        doc["rng"] = kRngName;
        Json results = Json::array();
        for (size_t s = 0; s < runs.size(); s++) {
            const auto &t = runs[s];
            Json r;
            r["shot"] = s;
            r["outcome"] = to_string(t.outcome);
            r["bits"] = classical_bits(t.outcome);
            r["probabilities"] = Json::array(
                {t.outcome_probabilities[0], t.outcome_probabilities[1], t.outcome_probabilities[2], t.outcome_probabilities[3]});
            r["correction"] = to_string(t.correction);
            r["output_state"] = complex_list(t.output_state.amplitudes());
            r["fidelity"] = t.fidelity;
            results.push_back(std::move(r));
        }
        doc["results"] = std::move(results);
        doc["min_fidelity"] = min_fidelity;
        if (shots > 1) {
            Json hist;
            for (uint8_t b = 0; b < 4; b++) {
                hist[to_string(outcome_from_bits(b))] = counts[b];
            }
            doc["histogram"] = std::move(hist);
            doc["chi_square"] = chi2;
        }
        o << doc.dump(2) << "\n";
        return kExitOk;
    }

    o << "state:  " << format_state(psi) << "\n";
    o << "seed:   " << seed << " (" << kRngName << ")\n";
    o << "shots:  " << shots << "\n";
    if (runs.size() <= kTextShotLines) {
        for (size_t s = 0; s < runs.size(); s++) {
            const auto &t = runs[s];
            o << "shot " << s << ": outcome " << to_string(t.outcome) << " (bits " << classical_bits(t.outcome)
              << "), correction " << to_string(t.correction) << ", output " << format_state(t.output_state)
              << ", fidelity " << num(t.fidelity) << "\n";
        }
    } else {
        o << "(per-shot lines omitted for more than " << kTextShotLines << " shots; use --format json)\n";
    }
    o << "min fidelity: " << num(min_fidelity) << "\n";
    if (shots > 1) {
        o << "histogram:";
        for (uint8_t b = 0; b < 4; b++) {
            o << " " << to_string(outcome_from_bits(b)) << "=" << counts[b];
        }
        o << "\nchi-square (3 dof): " << num(chi2) << "\n";
    }
    return kExitOk;
}

struct Operand {
    ComplexMatrix matrix;
    size_t qubits;
};

// An existing file is read as matrix JSON; anything else is a ket
// expression whose projector is taken.
Operand load_operand(const std::string &value, const char *flag) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(value, ec)) {
        ComplexMatrix m = read_matrix_file(value);
        if (!m.is_square()) {
            throw DimensionError(std::string(flag) + " matrix must be square");
        }
        return {m, qubits_for_side(m.rows(), std::string(flag) + " matrix")};
    }
    StateVector s = parse_state(value).state;
    return {s.density(), s.qubits()};
}

int cmd_witness(const std::string &target_arg, const std::string &test_arg, size_t k, const Common &c, std::ostream &out) {
    double threshold = resolve_threshold(c);
    Operand target = load_operand(target_arg, "--target");
    Operand test = load_operand(test_arg, "--test");
    if (target.matrix.rows() != test.matrix.rows()) {
        throw DimensionError("--target acts on " + std::to_string(target.qubits) + " qubits but --test has " +
                             std::to_string(test.qubits));
    }
    Partition part(k, target.qubits);
    Witness w = build_witness(target.matrix, part.dim_a(), part.dim_b(), threshold);
    WitnessReport report = evaluate_witness(w, test.matrix);

    Sink sink(out, c.output);
    std::ostream &o = sink.stream();
    if (c.format == "json") {
        Json doc;
        doc["command"] = "witness";
        doc["target"] = target_arg;
        doc["test"] = test_arg;
        doc["partition"] = k;
        doc["dims"] = Json::array({part.dim_a(), part.dim_b()});
        doc["threshold"] = threshold;
        doc["mu1"] = report.mu1;
        doc["expectation"] = report.expectation;
        doc["imaginary_residue"] = report.imaginary_residue;
        doc["verdict"] = to_string(report.verdict);
        doc["coefficients"] = vector_list(report.coefficients);
        doc["witness"] = matrix_to_json(report.witness);
        o << doc.dump(2) << "\n";
        return kExitOk;
    }
    o << "target:       " << target_arg << "\n";
    o << "test:         " << test_arg << "\n";
    o << "partition:    k=" << k << " (N=" << part.dim_a() << ", M=" << part.dim_b() << ")\n";
    o << "coefficients: " << num_list(report.coefficients) << "\n";
    o << "mu1:          " << num(report.mu1) << "\n";
    o << "tr[W rho]:    " << num(report.expectation) << "\n";
    o << "verdict:      " << to_string(report.verdict) << "\n";
    return kExitOk;
}

// Caret under the failing character; counts code points, not bytes.
void show_position(std::ostream &err, const std::string &text, size_t byte_pos) {
    size_t column = 0;
    for (size_t b = 0; b < byte_pos && b < text.size(); b++) {
        if ((static_cast<unsigned char>(text[b]) & 0xC0) != 0x80) {
            column++;
        }
    }
    err << "  " << text << "\n  " << std::string(column, ' ') << "^\n";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Schmidt decomposition, teleportation and entanglement witness tool", "qschmidt"};
    app.require_subcommand(1);

    Common common;
    std::string state;
    size_t partition = 1;
    uint64_t seed = 0;
    uint64_t shots = 1;
    std::string target;
    std::string test;

    auto add_common = [&](CLI::App *sub, bool threshold) {
        sub->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", common.output, "Write the report to this file instead of stdout");
        if (threshold) {
            sub->add_option("--threshold", common.threshold, "Smallest coefficient treated as nonzero");
        }
    };

    auto *analyze_cmd = app.add_subcommand("analyze", "Schmidt decomposition of a pure state by both methods");
    analyze_cmd->add_option("--state", state, "Ket expression, e.g. \"1/sqrt(2)(|00>+|11>)\"")->required();
    analyze_cmd->add_option("--partition", partition, "Number of leading qubits in subsystem A");
    add_common(analyze_cmd, true);

    auto *teleport_cmd = app.add_subcommand("teleport", "Teleport a single-qubit state through a Bell pair");
    teleport_cmd->add_option("--state", state, "1-qubit ket expression")->required();
    teleport_cmd->add_option("--seed", seed, "Seed of the measurement rng");
    teleport_cmd->add_option("--shots", shots, "Number of independent runs");
    add_common(teleport_cmd, false);

    auto *witness_cmd = app.add_subcommand("witness", "Build W = mu1 I - X and evaluate it on a test state");
    witness_cmd->add_option("--target", target, "X: ket expression (projector taken) or matrix JSON file")->required();
    witness_cmd->add_option("--test", test, "rho: ket expression or matrix JSON file")->required();
    witness_cmd->add_option("--partition", partition, "Number of leading qubits in subsystem A");
    add_common(witness_cmd, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (analyze_cmd->parsed()) {
            return cmd_analyze(state, partition, common, out);
        }
        if (teleport_cmd->parsed()) {
            return cmd_teleport(state, seed, shots, common, out);
        }
        return cmd_witness(target, test, partition, common, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        std::string source = analyze_cmd->parsed() || teleport_cmd->parsed() ? state : "";
        if (witness_cmd->parsed()) {
            // Whichever operand failed; both are ket text or files.
            source = target;
            try {
                parse(target);
                source = test;
            } catch (const ParseError &) {
            }
        }
        show_position(err, source, e.position());
        return kExitInputError;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InconsistencyError &e) {
        err << "inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInconsistent;
    }
}

}  // namespace qschmidt
