// Copyright 2026 The qadvice Authors
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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qadvice/amplitude_advice.h"
#include "qadvice/circuit.h"
#include "qadvice/config.h"
#include "qadvice/fingerprint.h"
#include "qadvice/linalg.h"
#include "qadvice/qrac.h"
#include "qadvice/separations.h"
#include "qadvice/synthesis.h"

namespace qadvice {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    uint64_t seed = 0;
    std::string output;
    std::string format = "json";
    bool pretty = false;
    bool no_timestamp = false;
    std::vector<std::string> tolerance_overrides;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    void check(const std::string &name, bool ok) {
        checks.emplace_back(name, ok);
    }
    bool passed() const {
        for (const auto &c : checks) {
            if (!c.second) {
                return false;
            }
        }
        return true;
    }
};

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

json rational_json(const Rational &r) {
    return {{"exact", to_string(r)}, {"value", to_double(r)}};
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_cell(const json &v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') {
                quoted += '"';
            }
            quoted += c;
        }
        return quoted + "\"";
    }
    return s;
}

std::string render(const Report &r, const Common &common) {
    if (common.format == "csv") {
        std::ostringstream out;
        if (!r.csv_header.empty()) {
            for (size_t i = 0; i < r.csv_header.size(); i++) {
                out << (i ? "," : "") << r.csv_header[i];
            }
            out << "\n";
            for (const auto &row : r.csv_rows) {
                for (size_t i = 0; i < row.size(); i++) {
                    out << (i ? "," : "") << csv_cell(row[i]);
                }
                out << "\n";
            }
        } else {
            out << "key,value\n";
            for (const auto &[k, v] : r.results.flatten().items()) {
                out << csv_cell(k) << "," << csv_cell(v) << "\n";
            }
        }
        return out.str();
    }
    json doc;
    doc["command"] = r.command;
    doc["seed"] = common.seed;
    if (!common.no_timestamp) {
        doc["timestamp"] = utc_timestamp();
    }
    json tol = json::object();
    for (const auto &[name, value] : tolerances().table()) {
        tol[name] = value;
    }
    doc["tolerances"] = tol;
    doc["inputs"] = r.inputs;
    doc["results"] = r.results;
    json checks = json::array();
    for (const auto &[name, ok] : r.checks) {
        checks.push_back({{"name", name}, {"pass", ok}});
    }
    doc["checks"] = checks;
    doc["pass"] = r.passed();
    return doc.dump(common.pretty ? 2 : -1) + "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("Cannot read '" + path + "'.");
    }
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Whitespace-separated numbers, one logical row per line; '#' starts a comment.
std::vector<std::vector<double>> read_number_rows(const std::string &path) {
    std::istringstream text(read_file(path));
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(text, line)) {
        line = line.substr(0, line.find('#'));
        std::istringstream fields(line);
        std::vector<double> row;
        std::string tok;
        while (fields >> tok) {
            try {
                size_t used = 0;
                row.push_back(std::stod(tok, &used));
                if (used != tok.size()) {
                    throw std::invalid_argument(tok);
                }
            } catch (const std::exception &) {
                throw std::invalid_argument("Bad number '" + tok + "' in '" + path + "'.");
            }
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------

struct FingerprintArgs {
    size_t n = 8;
    size_t f = 2;
    size_t members = 4;
    size_t trials = 1000;
};

Report run_fingerprint(const FingerprintArgs &a, const Common &common) {
    Report r;
    r.command = "fingerprint";
    r.inputs = {{"n", a.n}, {"f", a.f}, {"members", a.members}, {"trials", a.trials}};
    if (a.n < 1 || a.n > 64) {
        throw std::invalid_argument("--n must lie in 1..64.");
    }
    if (a.n < 64 && a.members > (uint64_t{1} << a.n)) {
        throw std::invalid_argument("--members exceeds 2^n.");
    }
    std::mt19937_64 rng(common.seed);
    std::set<BitString> chosen;
    while (chosen.size() < a.members) {
        chosen.insert(BitString::random(a.n, rng));
    }
    std::vector<BitString> members(chosen.begin(), chosen.end());
    auto advice = build_advice(members, a.n, a.f);
    Rational bound = advice.soundness_bound();

    json member_rows = json::array();
    bool members_exact = true;
    size_t member_sampled_accepts = 0;
    r.csv_header = {"input", "member", "exact_probability", "sampled_accept"};
    for (const auto &x : members) {
        Rational p = acceptance_probability(x, advice);
        bool sampled = membership_test(x, advice, rng).accept;
        members_exact &= p == 1;
        member_sampled_accepts += sampled;
        member_rows.push_back({{"input", x.str()}, {"probability", rational_json(p)}, {"sampled_accept", sampled}});
        r.csv_rows.push_back({x.str(), "1", to_string(p), sampled ? "1" : "0"});
    }

    Rational worst = 0;
    std::string worst_input;
    size_t tested = 0, false_accepts = 0;
    bool universe_exhausted = a.n < 64 && (uint64_t{1} << a.n) == members.size();
    while (tested < a.trials && !universe_exhausted) {
        BitString x = BitString::random(a.n, rng);
        if (chosen.contains(x)) {
            continue;
        }
        tested++;
        Rational p = acceptance_probability(x, advice);
        bool sampled = membership_test(x, advice, rng).accept;
        false_accepts += sampled;
        if (p > worst || worst_input.empty()) {
            worst = std::max(worst, p);
            worst_input = x.str();
        }
        r.csv_rows.push_back({x.str(), "0", to_string(p), sampled ? "1" : "0"});
    }

    r.results = {
        {"q", advice.field.order()},
        {"k", advice.k()},
        {"m", advice.m()},
        {"advice_length_qubits", advice.length_qubits()},
        {"soundness_bound", rational_json(bound)},
        {"members", member_rows},
        {"member_sampled_accepts", member_sampled_accepts},
        {"non_members_tested", tested},
        {"max_non_member_probability", rational_json(worst)},
        {"max_non_member_input", worst_input},
        {"non_member_sampled_accepts", false_accepts},
    };
    r.check("members_accept_with_probability_one", members_exact);
    r.check("non_members_within_soundness_bound", worst <= bound);
    r.check("non_members_below_one_quarter", worst < Rational(1, 4));
    return r;
}

// ---------------------------------------------------------------------------

struct QracArgs {
    bool bound = false;
    bool search = false;
    bool schemes = false;
    size_t n = 2;
    size_t m = 1;
    double p = 0.85;
    double resolution = 0.05;
    size_t starts = 64;
};

Report run_qrac(const QracArgs &a, const Common &common) {
    Report r;
    r.command = "qrac";
    int modes = (int)a.bound + (int)a.search + (int)a.schemes;
    if (modes != 1) {
        throw std::invalid_argument("qrac needs exactly one of --bound, --search, --schemes.");
    }
    r.csv_header = {"n", "m", "best_p", "bound_floor"};
    if (a.bound) {
        r.inputs = {{"mode", "bound"}, {"n", a.n}, {"p", a.p}};
        size_t m_min = nayak_min_qubits(a.n, a.p);
        double floor = (1 - binary_entropy(a.p)) * (double)a.n;
        r.results = {{"entropy", binary_entropy(a.p)}, {"bound_floor", floor}, {"m_min", m_min}};
        r.check("m_min_covers_floor", (double)m_min >= floor - 1e-9);
        r.csv_rows.push_back({std::to_string(a.n), std::to_string(m_min), fmt(a.p), fmt(floor)});
    } else if (a.search) {
        r.inputs = {{"mode", "search"}, {"n", a.n}, {"m", a.m}, {"resolution", a.resolution}, {"starts", a.starts}};
        auto res = rac_search(a.n, a.m, a.resolution, common.seed, a.starts);
        double floor = (1 - binary_entropy(res.best_p)) * (double)a.n;
        r.results = {{"best_p", res.best_p}, {"best_start", res.best_start}, {"bound_floor", floor}};
        r.check("nayak_bound_respected", (double)a.m >= floor - 1e-9);
        r.csv_rows.push_back({std::to_string(a.n), std::to_string(a.m), fmt(res.best_p), fmt(floor)});
    } else {
        r.inputs = {{"mode", "schemes"}};
        struct Named {
            const char *name;
            RacScheme scheme;
            double closed_form;
        };
        Named all[] = {
            {"rac21", rac21_scheme(), 0.5 + 1 / (2 * std::sqrt(2.0))},
            {"rac31", rac31_scheme(), 0.5 + 1 / (2 * std::sqrt(3.0))},
        };
        for (auto &s : all) {
            double p = scheme_success(s.scheme);
            double floor = (1 - binary_entropy(p)) * (double)s.scheme.n;
            r.results[s.name] = {{"n", s.scheme.n}, {"m", s.scheme.m}, {"success", p},
                                 {"closed_form", s.closed_form}, {"bound_floor", floor}};
            r.check(std::string(s.name) + "_matches_closed_form", std::abs(p - s.closed_form) <= 1e-9);
            r.check(std::string(s.name) + "_respects_nayak_bound", (double)s.scheme.m >= floor - 1e-9);
            r.csv_rows.push_back({std::to_string(s.scheme.n), std::to_string(s.scheme.m), fmt(p), fmt(floor)});
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

struct AmplitudeArgs {
    std::string digits;
    size_t k = 1;
    bool gateset = false;
    double eps = 1e-2;
};

Report run_amplitude(const AmplitudeArgs &a) {
    Report r;
    r.command = "amplitude decode";
    r.inputs = {{"digits", a.digits}, {"k", a.k}, {"gateset", a.gateset}};
    auto theta = TallyTheta::from_text(a.digits);
    auto exact = decode_bit(theta, a.k);
    bool digit = theta.digits.at(a.k - 1) > 0;
    r.results = {
        {"theta_turns", to_string(theta.turns())},
        {"exact_frac", to_string(exact.frac)},
        {"exact_probability", exact.acceptance_probability},
        {"digit", digit ? "+" : "-"},
    };
    if (a.gateset) {
        r.inputs["eps"] = a.eps;
        auto g = decode_via_gateset(theta, a.k, a.eps);
        r.results["probability"] = g.probability;
        r.results["decision"] = g.decision;
        r.results["circuit_size"] = g.circuit_size;
        r.check("within_two_epsilon_of_exact", std::abs(g.probability - g.exact_probability) <= 2 * a.eps);
        r.check("decision_matches_digit", g.decision == digit);
    } else {
        r.results["probability"] = exact.acceptance_probability;
        r.results["decision"] = exact.decision;
        r.check("decision_matches_digit", exact.decision == digit);
    }
    return r;
}

// ---------------------------------------------------------------------------

struct SynthArgs {
    std::string target;
    std::string matrix;
    double eps = 0.1;
};

json synthesis_json(const SynthesisReport &rep) {
    auto code = encode_circuit(rep.circuit);
    std::ostringstream hex;
    for (auto b : code.bytes) {
        hex << std::hex << std::setw(2) << std::setfill('0') << (int)b;
    }
    return {
        {"target_kind", rep.target_kind == TargetKind::STATE ? "state" : "unitary"},
        {"k", rep.k},
        {"epsilon", rep.epsilon},
        {"achieved_error", rep.achieved_error},
        {"size", rep.size},
        {"bound_value", rep.bound_value},
        {"constant_ratio", rep.constant_ratio},
        {"rotation_count", rep.rotation_count},
        {"rotation_error_sum", rep.rotation_error_sum},
        {"code_bytes", code.bytes.size()},
        {"code", hex.str()},
        {"circuit", rep.circuit.str()},
    };
}

Report run_synth_state(const SynthArgs &a) {
    Report r;
    r.command = "synth state";
    r.inputs = {{"target", a.target}, {"eps", a.eps}};
    std::vector<Complex> amps;
    for (const auto &row : read_number_rows(a.target)) {
        if (row.size() != 2) {
            throw std::invalid_argument("Each amplitude line needs 're im'.");
        }
        amps.emplace_back(row[0], row[1]);
    }
    auto rep = synthesize_state(Qustring::from_amplitudes(amps), a.eps);
    r.results = synthesis_json(rep);
    r.check("achieved_error_below_epsilon", rep.achieved_error < a.eps);
    r.check("code_length_at_least_size", encode_circuit(rep.circuit).bytes.size() >= rep.size);
    return r;
}

Report run_synth_unitary(const SynthArgs &a) {
    Report r;
    r.command = "synth unitary";
    r.inputs = {{"matrix", a.matrix}, {"eps", a.eps}};
    auto rows = read_number_rows(a.matrix);
    size_t d = rows.size();
    Matrix u(d, d);
    for (size_t i = 0; i < d; i++) {
        if (rows[i].size() != 2 * d) {
            throw std::invalid_argument("Each matrix row needs 're im' pairs for every column.");
        }
        for (size_t j = 0; j < d; j++) {
            u(i, j) = Complex(rows[i][2 * j], rows[i][2 * j + 1]);
        }
    }
    auto rep = synthesize_unitary(u, a.eps);
    r.results = synthesis_json(rep);
    r.check("achieved_error_below_epsilon", rep.achieved_error < a.eps);
    r.check("code_length_at_least_size", encode_circuit(rep.circuit).bytes.size() >= rep.size);
    return r;
}

// ---------------------------------------------------------------------------

struct DiagArgs {
    size_t n = 4;
    size_t f = 1;
    std::string machines;
};

Report run_diag(const DiagArgs &a) {
    Report r;
    r.command = "diag";
    r.inputs = {{"n", a.n}, {"f", a.f}, {"machines", a.machines}};
    json doc;
    try {
        doc = json::parse(read_file(a.machines));
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("Malformed classifier file: ") + e.what());
    }
    const json &list = doc.is_array() ? doc : doc.at("classifiers");
    std::vector<AdvisedClassifier> classifiers;
    for (const auto &c : list) {
        classifiers.push_back(AdvisedClassifier::from_json(c));
    }
    auto res = diagonal_sparse_set(classifiers, a.n, a.f);
    json set = json::array();
    for (auto x : res.set) {
        set.push_back(BitString::from_index(x, a.n).str());
    }
    json transcript = json::array();
    bool all_escaped = true;
    for (const auto &c : classifiers) {
        bool escaped = res.found && escapes_all(res.set, {c});
        all_escaped &= escaped;
        transcript.push_back({{"id", c.id}, {"advice_len", c.advice_len},
                              {"family_size", realized_sets(c).sets.size()}, {"escaped", escaped}});
    }
    r.results = {
        {"found", res.found},
        {"set", set},
        {"candidates_examined", res.candidates_examined},
        {"family_total", res.family_total},
        {"premise_holds", res.premise_holds},
        {"counting", {{"lhs", res.counting.lhs.str()}, {"rhs", res.counting.rhs.str()}, {"holds", res.counting.holds}}},
        {"verification", transcript},
    };
    if (res.found) {
        r.check("set_size_at_most_2f", res.set.size() <= 2 * a.f);
        r.check("escapes_every_classifier", all_escaped);
    } else {
        r.check("not_found_only_when_premise_fails", !res.premise_holds);
    }
    return r;
}

// ---------------------------------------------------------------------------

struct AmplifyArgs {
    std::string p = "2/3";
    uint64_t t = 0;
    std::string eps;
};

Report run_amplify(const AmplifyArgs &a) {
    Report r;
    r.command = "amplify";
    r.inputs = {{"p", a.p}};
    if (a.t == 0 && a.eps.empty()) {
        throw std::invalid_argument("amplify needs --t or --eps.");
    }
    Rational p = parse_rational(a.p);
    if (a.t != 0) {
        r.inputs["t"] = a.t;
        Rational v = majority_amplify(p, a.t);
        r.results["value"] = rational_json(v);
        if (p > Rational(1, 2)) {
            r.check("no_worse_than_single_run", v >= p);
        }
    }
    if (!a.eps.empty()) {
        r.inputs["eps"] = a.eps;
        Rational eps = parse_rational(a.eps);
        uint64_t t = advice_copies_for(eps, p);
        Rational tail = majority_amplify(p, t);
        r.results["copies"] = t;
        r.results["copies_tail"] = rational_json(tail);
        r.check("tail_meets_target", tail >= 1 - eps);
        r.check("copies_minimal", t == 1 || majority_amplify(p, t - 2) < 1 - eps);
    }
    return r;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum advice laboratory", "qadvice"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", common.seed, "RNG seed");
        sub->add_option("--output", common.output, "Write the report to this file");
        sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--json-pretty", common.pretty, "Indent JSON output");
        sub->add_flag("--no-timestamp", common.no_timestamp, "Omit the timestamp field");
        sub->add_option("--tol", common.tolerance_overrides, "Override a tolerance: name=value");
    };

    FingerprintArgs fp;
    auto *fp_cmd = app.add_subcommand("fingerprint", "Fingerprint advice membership experiment");
    fp_cmd->add_option("--n", fp.n, "Input length");
    fp_cmd->add_option("--f", fp.f, "Sparseness bound");
    fp_cmd->add_option("--members", fp.members, "Number of random members");
    fp_cmd->add_option("--trials", fp.trials, "Number of sampled non-members");
    add_common(fp_cmd);

    QracArgs qr;
    auto *qr_cmd = app.add_subcommand("qrac", "Random access code bounds and searches");
    qr_cmd->add_flag("--bound", qr.bound, "Report the entropy lower bound on m");
    qr_cmd->add_flag("--search", qr.search, "Search (n, m, p) schemes");
    qr_cmd->add_flag("--schemes", qr.schemes, "Evaluate the closed-form 2->1 and 3->1 codes");
    qr_cmd->add_option("--n", qr.n, "Encoded bits");
    qr_cmd->add_option("--m", qr.m, "Qubits");
    qr_cmd->add_option("--p", qr.p, "Success probability");
    qr_cmd->add_option("--resolution", qr.resolution, "Angle resolution of the search");
    qr_cmd->add_option("--starts", qr.starts, "Number of seeded starts");
    add_common(qr_cmd);

    AmplitudeArgs am;
    auto *am_cmd = app.add_subcommand("amplitude", "Tally-set amplitude advice");
    am_cmd->require_subcommand(1);
    auto *am_decode = am_cmd->add_subcommand("decode", "Decode one digit from the rotation angle");
    am_decode->add_option("--digits", am.digits, "Digit pattern such as +-+-")->required();
    am_decode->add_option("--k", am.k, "Digit index, 1-based")->required();
    am_decode->add_flag("--gateset", am.gateset, "Realize the rotation with a synthesized circuit");
    am_decode->add_option("--eps", am.eps, "Synthesis precision");
    add_common(am_decode);

    SynthArgs sy;
    auto *sy_cmd = app.add_subcommand("synth", "Gate-set synthesis");
    sy_cmd->require_subcommand(1);
    auto *sy_state = sy_cmd->add_subcommand("state", "Synthesize a state preparation circuit");
    sy_state->add_option("--target", sy.target, "File of 're im' amplitude lines")->required();
    sy_state->add_option("--eps", sy.eps, "Target precision");
    add_common(sy_state);
    auto *sy_unitary = sy_cmd->add_subcommand("unitary", "Synthesize a 1- or 2-qubit unitary");
    sy_unitary->add_option("--matrix", sy.matrix, "File of matrix rows as 're im' pairs")->required();
    sy_unitary->add_option("--eps", sy.eps, "Target precision");
    add_common(sy_unitary);

    DiagArgs dg;
    auto *dg_cmd = app.add_subcommand("diag", "Toy diagonalization against advised classifiers");
    dg_cmd->add_option("--n", dg.n, "Input length");
    dg_cmd->add_option("--f", dg.f, "Sparseness bound");
    dg_cmd->add_option("--machines", dg.machines, "Classifier JSON file")->required();
    add_common(dg_cmd);

    AmplifyArgs ap;
    auto *ap_cmd = app.add_subcommand("amplify", "Majority-vote amplification");
    ap_cmd->add_option("--p", ap.p, "Single-run success probability");
    ap_cmd->add_option("--t", ap.t, "Odd repetition count");
    ap_cmd->add_option("--eps", ap.eps, "Target error for the copy count");
    add_common(ap_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    Report report;
    try {
        reset_tolerances();
        for (const auto &o : common.tolerance_overrides) {
            auto eq = o.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("--tol expects name=value, got '" + o + "'.");
            }
            override_tolerance(o.substr(0, eq), std::stod(o.substr(eq + 1)));
        }
        if (fp_cmd->parsed()) {
            report = run_fingerprint(fp, common);
        } else if (qr_cmd->parsed()) {
            report = run_qrac(qr, common);
        } else if (am_decode->parsed()) {
            report = run_amplitude(am);
        } else if (sy_state->parsed()) {
            report = run_synth_state(sy);
        } else if (sy_unitary->parsed()) {
            report = run_synth_unitary(sy);
        } else if (dg_cmd->parsed()) {
            report = run_diag(dg);
        } else if (ap_cmd->parsed()) {
            report = run_amplify(ap);
        } else {
            err << "Unknown command.\n";
            return EXIT_USAGE;
        }
    } catch (const IoError &e) {
        err << e.what() << "\n";
        return EXIT_IO;
    } catch (const std::exception &e) {
        err << e.what() << "\n";
        return EXIT_ASSERTION;
    }

    std::string text = render(report, common);
    if (common.output.empty()) {
        out << text;
    } else {
        std::ofstream file(common.output, std::ios::trunc);
        file << text;
        if (!file) {
            err << "Cannot write '" << common.output << "'.\n";
            return EXIT_IO;
        }
    }
    for (const auto &[name, ok] : report.checks) {
        if (!ok) {
            err << "check failed: " << name << "\n";
        }
    }
    return report.passed() ? EXIT_OK : EXIT_ASSERTION;
}

}  // namespace qadvice
