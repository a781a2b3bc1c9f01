// qlogic — evaluate propositional formulas under classical two-valued,
// three-valued (weak-Kleene), lattice (quantum), truth-copy (Tarski), and
// phase-space set semantics; run the built-in detector-scenario reports.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qlogic/formula.hpp"
#include "qlogic/model_io.hpp"
#include "qlogic/scenario.hpp"
#include "qlogic/semantics.hpp"
#include "qlogic/trivalent.hpp"

namespace {

using nlohmann::json;
using namespace qlogic;

// ---------------------------------------------------------------------------
// Small formatting helpers
// ---------------------------------------------------------------------------

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string im = format_double(std::abs(z.imag())) + "i";
    if (z.real() == 0.0) return (z.imag() < 0 ? "-" : "") + im;
    return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

std::string format_matrix(const Matrix& m) {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += format_complex(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

/// Names the copy when it is one of the two distinguished projectors.
std::string describe_copy(const Projector& p, Tolerance tol) {
    if (approx_equal(p.matrix(), Matrix::Identity(p.dim(), p.dim()), tol.eps())) return "P_⊤";
    if (p.matrix().norm() <= tol.eps()) return "P_⊥";
    return format_matrix(p.matrix());
}

// Amplitude strings: "0.5", "-0.5i", "0.5+0.5i", "1e-3-2i", "i", "-i".
Complex parse_complex_string(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ValidationError("empty complex number");

    auto parse_real = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        char* end = nullptr;
        double v = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size())
            throw ValidationError("bad number '" + t + "' in complex literal");
        return v;
    };

    if (s.back() != 'i') return Complex(parse_real(s), 0.0);

    std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return Complex(0.0, parse_real(body));
    return Complex(parse_real(body.substr(0, split)), parse_real(body.substr(split)));
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOptions {
    std::string semantics;
    std::string formula;
    std::string model;
    std::string state_json;
    std::string assign;
    std::string point;
    std::string format = "text";
    double tolerance = 1e-9;
    bool merge_u = false;
};

Valuation2 parse_assign2(const std::string& text) {
    Valuation2 v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("bad assignment '" + item + "', want name=value");
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        for (char& c : value) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (value == "t" || value == "true" || value == "1")
            v[name] = true;
        else if (value == "f" || value == "false" || value == "0")
            v[name] = false;
        else
            throw ValidationError("bad two-valued value '" + value + "' for atom '" + name + "'");
    }
    return v;
}

Valuation3 parse_assign3(const std::string& text) {
    Valuation3 v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("bad assignment '" + item + "', want name=value");
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        for (char& c : value) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (value == "t" || value == "true" || value == "1")
            v[name] = TruthValue3::True;
        else if (value == "f" || value == "false" || value == "0")
            v[name] = TruthValue3::False;
        else if (value == "u" || value == "undefined")
            v[name] = TruthValue3::Undefined;
        else
            throw ValidationError("bad three-valued value '" + value + "' for atom '" + name +
                                  "'");
    }
    return v;
}

void emit(const std::string& format, const std::string& text, const json& j) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int run_eval(const EvalOptions& opt) {
    Tolerance tol(opt.tolerance);
    Formula f = parse(opt.formula);
    json j{{"command", "eval"}, {"semantics", opt.semantics}, {"formula", render(f)}};

    if (opt.semantics == "classical") {
        std::string verdict;
        if (!opt.assign.empty()) {
            verdict = eval2(f, parse_assign2(opt.assign)) ? "TRUE" : "FALSE";
        } else if (is_tautology(f)) {
            verdict = "TAUTOLOGY";
        } else if (is_tautology(Formula::negation(f))) {
            verdict = "CONTRADICTION";
        } else {
            verdict = "CONTINGENT";
        }
        j["verdict"] = verdict;
        emit(opt.format, verdict, j);
        return 0;
    }

    if (opt.semantics == "trivalent") {
        std::string verdict;
        if (!opt.assign.empty()) {
            switch (eval3(f, parse_assign3(opt.assign))) {
                case TruthValue3::True: verdict = "TRUE"; break;
                case TruthValue3::False: verdict = "FALSE"; break;
                default: verdict = "U"; break;
            }
        } else if (equivalent3(f, Formula::top())) {
            verdict = "TAUTOLOGY";
        } else if (equivalent3(f, Formula::bottom())) {
            verdict = "CONTRADICTION";
        } else {
            verdict = "CONTINGENT";
        }
        j["verdict"] = verdict;
        emit(opt.format, verdict, j);
        return 0;
    }

    if (opt.semantics == "quantum" || opt.semantics == "tarski") {
        if (opt.model.empty())
            throw ValidationError(opt.semantics + " semantics needs --model");
        LoadedModel model = load_model(opt.model, tol);
        if (!model.has_matrices())
            throw ValidationError(opt.semantics + " semantics needs a matrix model, got a phase model");
        const ProjectorAssignment& a = *model.assignment;

        if (opt.semantics == "quantum") {
            Projector copy = ql_copy(f, a, tol);
            std::string verdict;
            switch (ql_classify(f, a, tol)) {
                case LatticeClass::Tautology: verdict = "TAUTOLOGY"; break;
                case LatticeClass::Contradiction: verdict = "CONTRADICTION"; break;
                default: verdict = "CONTINGENT"; break;
            }
            j["verdict"] = verdict;
            j["copy"] = matrix_to_json(copy.matrix());
            std::string text = verdict;
            if (verdict == "CONTINGENT") text += " (copy = " + describe_copy(copy, tol) + ")";
            emit(opt.format, text, j);
            return 0;
        }

        // tarski: a top-level '=' compares the two sides as whole sentences.
        if (f.kind() == Kind::Identity) {
            TruthValue3 v = sentence_identity(f.left(), f.right(), a, tol);
            std::string verdict = v == TruthValue3::True    ? "TRUE"
                                  : v == TruthValue3::False ? "FALSE"
                                                            : "U";
            j["verdict"] = verdict;
            j["identity"] = std::string(1, to_char(v));
            emit(opt.format, verdict, j);
            return 0;
        }

        StateVector psi;
        if (!opt.state_json.empty())
            psi = parse_state_json(opt.state_json);
        else if (model.state)
            psi = *model.state;
        else
            throw ValidationError("tarski semantics needs a state (--state or a model state)");

        CopyResult copy = tarski_copy(f, a, tol);
        SemanticVerdict v = copy ? tsentence_eval(f, a, psi, tol) : SemanticVerdict::GapNoUniqueCopy;
        std::string verdict, text;
        switch (v) {
            case SemanticVerdict::True: verdict = "TRUE"; break;
            case SemanticVerdict::False: verdict = "FALSE"; break;
            case SemanticVerdict::IndeterminateState:
                verdict = opt.merge_u ? "U" : "INDETERMINATE";
                break;
            default: verdict = opt.merge_u ? "U" : "GAP"; break;
        }
        if (copy) {
            text = verdict + " (copy = " + describe_copy(*copy, tol) + ")";
            j["copy"] = {{"gap", false}, {"matrix", matrix_to_json(copy->matrix())}};
        } else {
            text = verdict + " (no unique copy)";
            j["copy"] = {{"gap", true}};
        }
        j["verdict"] = verdict;
        j["merge_u"] = opt.merge_u;
        emit(opt.format, text, j);
        return 0;
    }

    // phase
    if (opt.model.empty()) throw ValidationError("phase semantics needs --model");
    LoadedModel model = load_model(opt.model, tol);
    if (!model.phase)
        throw ValidationError("phase semantics needs a phase model, got a matrix model");
    const PhaseSpaceModel& m = *model.phase;

    if (!opt.point.empty()) {
        bool holds = phase_truth(f, m, opt.point);
        std::string verdict = holds ? "TRUE" : "FALSE";
        j["verdict"] = verdict;
        j["point"] = opt.point;
        emit(opt.format, verdict, j);
        return 0;
    }
    std::vector<std::string> sat = phase_eval(f, m);
    std::string text = "SATISFIED AT: ";
    if (sat.empty()) {
        text += "(none)";
    } else {
        for (std::size_t i = 0; i < sat.size(); ++i) {
            if (i) text += ", ";
            text += sat[i];
        }
    }
    j["satisfied_at"] = sat;
    emit(opt.format, text, j);
    return 0;
}

// ---------------------------------------------------------------------------
// scenario
// ---------------------------------------------------------------------------

struct ScenarioOptions {
    std::string part = "all";
    std::string format = "text";
    double tolerance = 1e-9;
    std::string b1, b2, c1, c2;
};

int run_scenario(const ScenarioOptions& opt) {
    ExperimentConfig cfg = ExperimentConfig::defaults();
    cfg.tol = Tolerance(opt.tolerance);
    if (!opt.b1.empty()) cfg.b1 = parse_complex_string(opt.b1);
    if (!opt.b2.empty()) cfg.b2 = parse_complex_string(opt.b2);
    if (!opt.c1.empty()) cfg.c1 = parse_complex_string(opt.c1);
    if (!opt.c2.empty()) cfg.c2 = parse_complex_string(opt.c2);

    std::vector<ScenarioReport> reports;
    if (opt.part == "paradox" || opt.part == "all") reports.push_back(paradox_walkthrough());
    if (opt.part == "copenhagen" || opt.part == "all")
        reports.push_back(copenhagen_walkthrough(cfg));
    if (opt.part == "quantum" || opt.part == "all") reports.push_back(quantum_logic_walkthrough());
    if (opt.part == "tarski" || opt.part == "all") reports.push_back(tarski_walkthrough());
    if (opt.part == "phase" || opt.part == "all") reports.push_back(phase_space_demo());

    bool passed = true;
    std::size_t total = 0, ok = 0;
    for (const ScenarioReport& r : reports) {
        passed = passed && r.all_passed();
        for (const CheckRecord& c : r.checks) {
            ++total;
            if (c.pass) ++ok;
        }
    }

    if (opt.format == "json") {
        json j{{"command", "scenario"}, {"part", opt.part}, {"passed", passed}};
        j["reports"] = json::array();
        for (const ScenarioReport& r : reports) j["reports"].push_back(json::parse(to_json_string(r)));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const ScenarioReport& r : reports) std::cout << to_text(r) << "\n";
        std::cout << "scenario: " << ok << "/" << total << " checks passed\n";
    }
    return passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableOptions {
    std::string semantics;
    std::string formula;
    std::string format = "text";
};

constexpr std::size_t kMaxTableAtoms = 8;

int run_table(const TableOptions& opt) {
    Formula f = parse(opt.formula);
    std::vector<std::string> names = atoms(f);
    if (names.size() > kMaxTableAtoms) throw TooManyAtomsError(names.size(), kMaxTableAtoms);
    const std::size_t n = names.size();

    std::vector<std::vector<std::string>> rows;  // cells..., result
    if (opt.semantics == "classical") {
        const std::size_t total = std::size_t{1} << n;
        for (std::size_t mask = 0; mask < total; ++mask) {
            Valuation2 v;
            std::vector<std::string> row;
            for (std::size_t i = 0; i < n; ++i) {
                bool bit = ((mask >> (n - 1 - i)) & 1u) != 0;
                v[names[i]] = bit;
                row.push_back(bit ? "T" : "F");
            }
            row.push_back(eval2(f, v) ? "T" : "F");
            rows.push_back(std::move(row));
        }
    } else if (opt.semantics == "trivalent") {
        static constexpr TruthValue3 order[3] = {TruthValue3::True, TruthValue3::False,
                                                 TruthValue3::Undefined};
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t k = 0; k < total; ++k) {
            Valuation3 v;
            std::vector<std::string> row(n);
            std::size_t rest = k;
            for (std::size_t i = n; i-- > 0;) {
                TruthValue3 t = order[rest % 3];
                rest /= 3;
                v[names[i]] = t;
                row[i] = std::string(1, to_char(t));
            }
            row.push_back(std::string(1, to_char(eval3(f, v))));
            rows.push_back(std::move(row));
        }
    } else {
        throw ValidationError("table supports classical and trivalent semantics only");
    }

    if (opt.format == "json") {
        json j{{"command", "table"},
               {"semantics", opt.semantics},
               {"formula", render(f)},
               {"atoms", names}};
        j["rows"] = json::array();
        for (const auto& row : rows) {
            json values(std::vector<std::string>(row.begin(), row.end() - 1));
            j["rows"].push_back({{"values", values}, {"result", row.back()}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < n; ++i) std::cout << names[i] << " ";
        std::cout << "| " << render(f) << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < n; ++i) {
                std::cout << row[i];
                std::cout << std::string(names[i].size(), ' ');
            }
            std::cout << "| " << row.back() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qlogic — one formula language, five semantics: classical, trivalent (weak-Kleene), "
        "quantum (subspace lattice), tarski (projector truth copies), and phase (Boolean sets)"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under a chosen semantics");
    eval_cmd->add_option("--semantics", eval_opt.semantics, "Semantics to use")
        ->required()
        ->check(CLI::IsMember({"classical", "trivalent", "quantum", "tarski", "phase"}));
    eval_cmd->add_option("--formula", eval_opt.formula, "Formula text")->required();
    eval_cmd->add_option("--model", eval_opt.model,
                         "Model file, or builtin 'scenario' / 'scenario-lifted'");
    eval_cmd->add_option("--state", eval_opt.state_json,
                         "Inline state vector as JSON [re,im] pairs (tarski)");
    eval_cmd->add_option("--assign", eval_opt.assign,
                         "Comma-separated atom values, e.g. A=t,B=f (classical/trivalent)");
    eval_cmd->add_option("--point", eval_opt.point, "Phase-space point to evaluate at");
    eval_cmd->add_option("--format", eval_opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    eval_cmd->add_option("--tolerance", eval_opt.tolerance, "Matrix comparison tolerance");
    eval_cmd->add_flag("--merge-u", eval_opt.merge_u,
                       "Report INDETERMINATE and GAP both as U");

    ScenarioOptions scen_opt;
    CLI::App* scen_cmd =
        app.add_subcommand("scenario", "Run the built-in detector-experiment reports");
    scen_cmd->add_option("part", scen_opt.part, "Which walkthrough to run")
        ->check(CLI::IsMember({"paradox", "copenhagen", "quantum", "tarski", "phase", "all"}));
    scen_cmd->add_option("--format", scen_opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    scen_cmd->add_option("--tolerance", scen_opt.tolerance, "Matrix comparison tolerance");
    scen_cmd->add_option("--b1", scen_opt.b1, "Branch-1 amplitude, e.g. '0.6' or '0.6+0.1i'");
    scen_cmd->add_option("--b2", scen_opt.b2, "Branch-2 amplitude");
    scen_cmd->add_option("--c1", scen_opt.c1, "x+ sub-branch amplitude");
    scen_cmd->add_option("--c2", scen_opt.c2, "x− sub-branch amplitude");

    TableOptions tab_opt;
    CLI::App* tab_cmd = app.add_subcommand("table", "Print a full truth table");
    tab_cmd->add_option("--semantics", tab_opt.semantics, "classical or trivalent")
        ->required()
        ->check(CLI::IsMember({"classical", "trivalent"}));
    tab_cmd->add_option("--formula", tab_opt.formula, "Formula text")->required();
    tab_cmd->add_option("--format", tab_opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) return run_eval(eval_opt);
        if (*scen_cmd) return run_scenario(scen_opt);
        if (*tab_cmd) return run_table(tab_opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
