#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liftedcodes/report.hpp"
#include "liftedcodes/suite.hpp"

namespace lc = liftedcodes;

namespace {

// exit codes: 0 all claims pass, 1 claim failure, 2 validation error, 3 cap
constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

lc::Caps parse_caps(const std::string& text) {
    lc::Caps caps;
    if (text.empty()) return caps;
    std::vector<std::uint64_t> values;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        values.push_back(std::stoull(part));
    }
    if (values.empty() || values.size() > 3) {
        throw std::invalid_argument("--caps takes STEPS[,VECTORS[,CODEWORDS]]");
    }
    if (values.size() == 1) {
        caps.coset_steps = caps.vectors = caps.codewords = values[0];
    } else {
        caps.coset_steps = values[0];
        caps.vectors = values[1];
        if (values.size() == 3) caps.codewords = values[2];
    }
    return caps;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    out << text;
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

lc::Json witness_json(const lc::CrWitness& w) {
    lc::Json j;
    j["kind"] = w.vector_level ? "word" : "syndrome";
    j["first"] = w.first;
    j["second"] = w.second;
    j["distance_class"] = w.distance_class;
    j["first_counts"] = {w.first_down, w.first_up};
    j["second_counts"] = {w.second_down, w.second_up};
    return j;
}

int cmd_hamming(std::uint64_t q, unsigned m, const std::string& format,
                const std::string& out_path) {
    const lc::FieldPtr ground = lc::make_ground_field(q);
    const lc::MatQ h = lc::hamming_parity_matrix(ground, m);
    if (format == "json") {
        lc::Json j = lc::to_json(h);
        j["n"] = h.cols();
        j["m"] = m;
        emit(j.dump(2) + "\n", out_path);
    } else if (format == "text") {
        emit(lc::matrix_text(h), out_path);
    } else {
        throw std::invalid_argument("hamming supports --format text|json");
    }
    return kExitPass;
}

int cmd_verify(std::uint64_t q, unsigned m, unsigned r, const lc::Caps& caps,
               std::uint64_t seed, const std::string& format, const std::string& out_path) {
    const lc::VerifyReport report = lc::run_verify(q, m, r, caps, seed);
    if (format == "json") {
        lc::Json j;
        j["q"] = report.q;
        j["m"] = report.m;
        j["r"] = report.r;
        j["n"] = report.n;
        j["rho"] = report.rho;
        j["field"] = report.field;
        j["closed_form"] = lc::to_json(report.closed_form);
        j["measured"] = lc::to_json(report.measured);
        j["match"] = report.match;
        lc::Json checks = lc::Json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        j["checks"] = checks;
        j["all_pass"] = report.all_pass;
        emit(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "check,pass,detail\n";
        for (const auto& c : report.checks) {
            os << c.name << "," << (c.pass ? "true" : "false") << ","
               << csv_escape(c.detail) << "\n";
        }
        emit(os.str(), out_path);
    } else if (format == "text") {
        std::ostringstream os;
        os << "lifted Hamming code: q=" << report.q << " m=" << report.m
           << " r=" << report.r << " n=" << report.n << " rho=" << report.rho << "\n";
        os << "field: " << report.field << "\n";
        os << "closed form: " << lc::array_text(report.closed_form) << "\n";
        os << "measured:    " << lc::array_text(report.measured) << "\n";
        for (const auto& c : report.checks) {
            os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(20) << c.name
               << " " << c.detail << "\n";
        }
        os << (report.all_pass ? "all checks passed\n" : "some checks FAILED\n");
        emit(os.str(), out_path);
    } else {
        throw std::invalid_argument("verify supports --format json|csv|text");
    }
    return report.all_pass ? kExitPass : kExitClaimFailure;
}

int cmd_refute(const std::string& parity_path, unsigned r, const lc::Caps& caps,
               const std::string& format, const std::string& out_path) {
    std::ifstream in(parity_path);
    if (!in) throw std::invalid_argument("cannot open parity file " + parity_path);
    const lc::MatQ h = lc::parse_parity_text(in);
    const lc::RefutationReport report = lc::non_hamming_refutation(h, r, caps);
    const bool refuted = !report.completely_regular && report.distributions_differ;
    if (format == "json") {
        lc::Json j;
        j["q"] = h.field()->order();
        j["n"] = h.cols();
        j["r"] = r;
        j["base_min_distance"] = report.base_min_distance;
        j["completely_regular"] = report.completely_regular;
        if (report.witness) j["witness"] = witness_json(*report.witness);
        j["plain"] = {{"leader", report.plain.leader}, {"weights", report.plain.weights}};
        j["mixed"] = {{"leader", report.mixed.leader}, {"weights", report.mixed.weights}};
        j["distributions_differ"] = report.distributions_differ;
        emit(j.dump(2) + "\n", out_path);
    } else {
        std::ostringstream os;
        os << "base code: q=" << h.field()->order() << " n=" << h.cols()
           << " min distance " << report.base_min_distance << ", lifted with r=" << r << "\n";
        os << "completely regular: " << (report.completely_regular ? "yes" : "no") << "\n";
        if (report.witness) {
            os << "witness syndromes " << report.witness->first << " and "
               << report.witness->second << " in class " << report.witness->distance_class
               << " with counts (" << report.witness->first_down << ","
               << report.witness->first_up << ") vs (" << report.witness->second_down << ","
               << report.witness->second_up << ")\n";
        }
        auto line = [&os](const char* tag, const lc::CosetEvidence& e) {
            os << tag << " leader (";
            for (std::size_t i = 0; i < e.leader.size(); ++i) {
                os << (i ? "," : "") << e.leader[i];
            }
            os << ") weights [";
            for (std::size_t i = 0; i < e.weights.size(); ++i) {
                os << (i ? "," : "") << e.weights[i];
            }
            os << "]\n";
        };
        line("ground-field", report.plain);
        line("mixed", report.mixed);
        os << "weight distributions differ: "
           << (report.distributions_differ ? "yes" : "no") << "\n";
        emit(os.str(), out_path);
    }
    return refuted ? kExitPass : kExitClaimFailure;
}

int cmd_suite(const std::vector<std::string>& only, const lc::Caps& caps,
              const std::string& format, const std::string& out_path) {
    const auto results = lc::run_criteria(only, caps);
    const bool all_pass = std::all_of(results.begin(), results.end(),
                                      [](const lc::CriterionResult& r) { return r.pass; });
    if (format == "json") {
        lc::Json j = lc::Json::array();
        for (const auto& r : results) {
            j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        emit(lc::Json({{"criteria", j}, {"all_pass", all_pass}}).dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "criterion,pass,detail\n";
        for (const auto& r : results) {
            os << r.name << "," << (r.pass ? "true" : "false") << ","
               << csv_escape(r.detail) << "\n";
        }
        emit(os.str(), out_path);
    } else if (format == "text") {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name
               << std::right << std::setw(9) << std::fixed << std::setprecision(3)
               << r.seconds << "s  " << r.detail << "\n";
        }
        os << (all_pass ? "all criteria passed\n" : "some criteria FAILED\n");
        emit(os.str(), out_path);
    } else {
        throw std::invalid_argument("suite supports --format text|json|csv");
    }
    return all_pass ? kExitPass : kExitClaimFailure;
}

int cmd_graph(std::uint64_t q, unsigned m, unsigned r, const lc::Caps& caps,
              const std::string& format, const std::string& out_path) {
    const lc::LiftedCode lift = lc::LiftedCode::make(lc::make_ground_field(q), m, r);
    const lc::CosetGraph graph = lc::CosetGraph::build(lift.code(), caps);
    emit(lc::export_graph(graph, format), out_path);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "liftedcodes: exact verification of completely regular codes obtained by\n"
        "lifting Hamming codes to extension fields.\n\n"
        "Exit codes: 0 all claims pass, 1 claim failure, 2 invalid input, 3 cap exceeded.\n"
        "CSV schemas: verify emits \"check,pass,detail\"; suite emits\n"
        "\"criterion,pass,detail\" (details are double-quoted)."};
    app.require_subcommand(1);

    std::uint64_t q = 2;
    unsigned m = 2;
    unsigned r = 2;
    std::string caps_text;
    std::string out_path;
    std::uint64_t seed = 1;
    std::string parity_path;
    std::vector<std::string> only;
    std::string fmt_hamming = "text";
    std::string fmt_verify = "json";
    std::string fmt_refute = "json";
    std::string fmt_suite = "text";
    std::string fmt_graph = "dot";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--caps", caps_text,
                        "enumeration caps STEPS[,VECTORS[,CODEWORDS]]; one value sets all "
                        "three")
            ->envname("LIFTEDCODES_CAP");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    CLI::App* hamming = app.add_subcommand(
        "hamming", "print the Hamming parity-check matrix H over F_q");
    hamming->add_option("-q", q, "ground field order (prime power)")->required();
    hamming->add_option("-m", m, "redundancy (number of rows)")->required();
    hamming->add_option("--format", fmt_hamming, "text|json");
    add_common(hamming);

    CLI::App* verify = app.add_subcommand(
        "verify", "lift the Hamming code to F_{q^r} and verify every claimed property");
    verify->add_option("-q", q, "ground field order (prime power)")->required();
    verify->add_option("-m", m, "Hamming redundancy")->required();
    verify->add_option("-r", r, "lift degree")->required();
    verify->add_option("--format", fmt_verify, "json|csv|text");
    verify->add_option("--seed", seed, "seed for the monomial-equivalence check");
    add_common(verify);

    CLI::App* refute = app.add_subcommand(
        "refute",
        "lift a non-Hamming parity-check file and exhibit the regularity failure");
    refute->add_option("--parity", parity_path, "parity-check file (\"q n rows\" header)")
        ->required();
    refute->add_option("-r", r, "lift degree (>= 2)")->required();
    refute->add_option("--format", fmt_refute, "json|text");
    add_common(refute);

    CLI::App* suite = app.add_subcommand(
        "suite", "run the full reproduction suite, one pass/fail line per criterion");
    suite->add_option("--only", only, "run only the named criteria (repeatable)");
    suite->add_option("--format", fmt_suite, "text|json|csv");
    add_common(suite);

    CLI::App* graph = app.add_subcommand(
        "graph", "export the coset graph of the lifted code");
    graph->add_option("-q", q, "ground field order (prime power)")->required();
    graph->add_option("-m", m, "Hamming redundancy")->required();
    graph->add_option("-r", r, "lift degree")->required();
    graph->add_option("--format", fmt_graph, "dot|json");
    add_common(graph);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitValidation;
    }

    try {
        const lc::Caps caps = parse_caps(caps_text);
        if (app.got_subcommand(hamming)) return cmd_hamming(q, m, fmt_hamming, out_path);
        if (app.got_subcommand(verify)) {
            return cmd_verify(q, m, r, caps, seed, fmt_verify, out_path);
        }
        if (app.got_subcommand(refute)) {
            return cmd_refute(parity_path, r, caps, fmt_refute, out_path);
        }
        if (app.got_subcommand(suite)) return cmd_suite(only, caps, fmt_suite, out_path);
        if (app.got_subcommand(graph)) return cmd_graph(q, m, r, caps, fmt_graph, out_path);
    } catch (const lc::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
