#include "qlogic/scenario.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace qlogic {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string truth_str(StateTruth t) {
    switch (t) {
        case StateTruth::True: return "TRUE";
        case StateTruth::False: return "FALSE";
        default: return "INDETERMINATE";
    }
}

std::string class_str(LatticeClass c) {
    switch (c) {
        case LatticeClass::Tautology: return "TAUTOLOGY";
        case LatticeClass::Contradiction: return "CONTRADICTION";
        default: return "CONTINGENT";
    }
}

std::string copy_str(const CopyResult& c, Tolerance tol) {
    if (!c) return "GAP";
    Eigen::Index n = c->dim();
    if (approx_equal(c->matrix(), Matrix::Identity(n, n), tol.eps())) return "UNIQUE: P_⊤";
    if (c->matrix().norm() <= tol.eps()) return "UNIQUE: P_⊥";
    return "UNIQUE: rank-" + std::to_string(c->rank());
}

CheckRecord check(std::string label, std::string formula, std::string semantics,
                  std::string expected, std::string computed) {
    CheckRecord r;
    r.label = std::move(label);
    r.formula = std::move(formula);
    r.semantics = std::move(semantics);
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.pass = r.expected == r.computed;
    return r;
}

CheckRecord vacuous(std::string label, std::string formula, std::string semantics) {
    CheckRecord r;
    r.label = std::move(label);
    r.formula = std::move(formula);
    r.semantics = std::move(semantics);
    r.expected = "VACUOUS (branch unreachable)";
    r.computed = r.expected;
    r.vacuous = true;
    r.pass = true;
    return r;
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults() {
    ExperimentConfig cfg;
    cfg.b1 = cfg.b2 = cfg.c1 = cfg.c2 = Complex(kInvSqrt2, 0.0);
    return cfg;
}

void ExperimentConfig::validate() const {
    double nb = std::norm(b1) + std::norm(b2);
    double nc = std::norm(c1) + std::norm(c2);
    if (std::abs(nb - 1.0) > tol.eps())
        throw NormalizationError("|b1|² + |b2|² must be 1, got " + std::to_string(nb));
    if (std::abs(nc - 1.0) > tol.eps())
        throw NormalizationError("|c1|² + |c2|² must be 1, got " + std::to_string(nc));
}

bool ScenarioReport::all_passed() const {
    for (const CheckRecord& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string to_text(const ScenarioReport& report) {
    std::ostringstream out;
    out << "== " << report.title << " ==\n";
    for (const std::string& n : report.notes) out << "note: " << n << "\n";
    std::size_t passed = 0;
    for (const CheckRecord& c : report.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.label << "\n";
        out << "       formula: " << c.formula << "  |  semantics: " << c.semantics << "\n";
        out << "       expected: " << c.expected << "  |  computed: " << c.computed << "\n";
        if (c.pass) ++passed;
    }
    out << "result: " << passed << "/" << report.checks.size() << " checks passed\n";
    return out.str();
}

std::string to_json_string(const ScenarioReport& report) {
    nlohmann::json j;
    j["title"] = report.title;
    j["passed"] = report.all_passed();
    j["notes"] = report.notes;
    j["checks"] = nlohmann::json::array();
    for (const CheckRecord& c : report.checks) {
        j["checks"].push_back({{"label", c.label},
                               {"formula", c.formula},
                               {"semantics", c.semantics},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"vacuous", c.vacuous},
                               {"pass", c.pass}});
    }
    return j.dump(2);
}

ProjectorAssignment detector_projectors() {
    auto z = pauli_eigenprojectors(Axis::Z);
    auto x = pauli_eigenprojectors(Axis::X);
    ProjectorAssignment a(2);
    a.assign("D1L", z.plus);
    a.assign("D1R", z.plus);
    a.assign("D2L", z.minus);
    a.assign("D2R", x.plus);
    a.assign("D3R", x.minus);
    return a;
}

ProjectorAssignment lifted_detector_projectors() {
    ProjectorAssignment flat = detector_projectors();
    ProjectorAssignment a(4);
    a.assign("D1L", lift(flat.at("D1L"), Side::Left));
    a.assign("D2L", lift(flat.at("D2L"), Side::Left));
    a.assign("D1R", lift(flat.at("D1R"), Side::Right));
    a.assign("D2R", lift(flat.at("D2R"), Side::Right));
    a.assign("D3R", lift(flat.at("D3R"), Side::Right));
    return a;
}

CommutationTable commutation_table() {
    CommutationTable t;
    t.names = {"D1L", "D2L", "D1R", "D2R", "D3R"};
    ProjectorAssignment a = detector_projectors();
    for (std::size_t i = 0; i < t.names.size(); ++i)
        for (std::size_t j = 0; j < t.names.size(); ++j)
            t.commutes[i][j] = commutes(a.at(t.names[i]), a.at(t.names[j]));
    return t;
}

StateVector build_state(const ExperimentConfig& cfg) {
    cfg.validate();
    StateVector zp(2), zm(2), xp(2), xm(2);
    zp << 1, 0;
    zm << 0, 1;
    xp << kInvSqrt2, kInvSqrt2;
    xm << kInvSqrt2, -kInvSqrt2;

    auto tensor = [](const StateVector& a, const StateVector& b) {
        StateVector out(a.size() * b.size());
        for (Eigen::Index i = 0; i < a.size(); ++i)
            for (Eigen::Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
        return out;
    };

    StateVector right = cfg.c1 * xp + cfg.c2 * xm;
    return cfg.b1 * tensor(zp, zp) + cfg.b2 * tensor(zm, right);
}

Projector lift(const Projector& p, Side side) {
    if (p.dim() != 2)
        throw DimensionMismatchError("lift expects a 2x2 projector, got dimension " +
                                     std::to_string(p.dim()));
    Matrix id = Matrix::Identity(2, 2);
    Matrix m = side == Side::Left ? kronecker(p.matrix(), id) : kronecker(id, p.matrix());
    return Projector::from_matrix(std::move(m));
}

StateVector collapse(const StateVector& psi, const Projector& p, Tolerance tol) {
    if (psi.size() != p.dim())
        throw DimensionMismatchError("state of size " + std::to_string(psi.size()) +
                                     " against projector of dimension " + std::to_string(p.dim()));
    StateVector image = p.matrix() * psi;
    double n = image.norm();
    if (n <= tol.eps())
        throw ZeroAmplitudeError("collapse onto a branch with no amplitude (‖Pψ‖ ≤ eps)");
    return image / n;
}

// ---------------------------------------------------------------------------
// Walkthroughs
// ---------------------------------------------------------------------------

ScenarioReport copenhagen_walkthrough(const ExperimentConfig& cfg) {
    cfg.validate();
    const Tolerance tol = cfg.tol;
    ScenarioReport rep;
    rep.title = "Copenhagen collapse walkthrough (C2⊗C2)";
    rep.notes.push_back(
        "Before a right-side collapse the x-detector assertions classify as INDETERMINATE; "
        "the trivalent semantics writes such pre-collapse gaps as u.");
    rep.notes.push_back(
        "Treating an assertion as bivalent and as gap-valued at once yields a contradictory "
        "premise pair, from which classical consequence derives every sentence; the checks below "
        "therefore evaluate truth only at collapsed states.");

    ProjectorAssignment lifted = lifted_detector_projectors();
    const std::string space = "state classification, C2⊗C2";
    StateVector psi = build_state(cfg);

    auto try_collapse = [&](const StateVector& s, const Projector& p) -> std::optional<StateVector> {
        try {
            return collapse(s, p, tol);
        } catch (const ZeroAmplitudeError&) {
            return std::nullopt;
        }
    };

    std::optional<StateVector> b1 = try_collapse(psi, lifted.at("D1L"));
    std::optional<StateVector> b2 = try_collapse(psi, lifted.at("D2L"));
    std::optional<StateVector> b2xp, b2xm;
    if (b2) {
        b2xp = try_collapse(*b2, lifted.at("D2R"));
        b2xm = try_collapse(*b2, lifted.at("D3R"));
    }

    auto truth = [&](const std::string& atom, const StateVector& s) {
        return apply_and_classify(lifted.at(atom), s, tol);
    };

    // (i) branch 1 verifies the first conditional.
    if (b1) {
        StateTruth d1l = truth("D1L", *b1);
        StateTruth d1r = truth("D1R", *b1);
        rep.checks.push_back(check("branch 1 (left z+ click): D1L holds after collapse", "D1L",
                                   space, "TRUE", truth_str(d1l)));
        rep.checks.push_back(check("branch 1: D1R holds after collapse", "D1R", space, "TRUE",
                                   truth_str(d1r)));
        rep.checks.push_back(check(
            "branch 1 verifies the conditional", "D1L -> D1R", space, "VERIFIED",
            (d1l == StateTruth::True && d1r == StateTruth::True) ? "VERIFIED" : "NOT VERIFIED"));
    } else {
        rep.checks.push_back(vacuous("branch 1 (left z+ click): D1L holds after collapse", "D1L", space));
        rep.checks.push_back(vacuous("branch 1: D1R holds after collapse", "D1R", space));
        rep.checks.push_back(vacuous("branch 1 verifies the conditional", "D1L -> D1R", space));
    }

    // (ii) branch 2 and its exclusive x sub-collapses.
    if (b2xp) {
        rep.checks.push_back(check("branch 2 → x+ click: D2L holds", "D2L", space, "TRUE",
                                   truth_str(truth("D2L", *b2xp))));
        rep.checks.push_back(check("branch 2 → x+ click: D2R holds", "D2R", space, "TRUE",
                                   truth_str(truth("D2R", *b2xp))));
        rep.checks.push_back(check("branch 2 → x+ click: D3R fails", "D3R", space, "FALSE",
                                   truth_str(truth("D3R", *b2xp))));
    } else {
        rep.checks.push_back(vacuous("branch 2 → x+ click: D2L holds", "D2L", space));
        rep.checks.push_back(vacuous("branch 2 → x+ click: D2R holds", "D2R", space));
        rep.checks.push_back(vacuous("branch 2 → x+ click: D3R fails", "D3R", space));
    }
    if (b2xm) {
        rep.checks.push_back(check("branch 2 → x− click: D3R holds", "D3R", space, "TRUE",
                                   truth_str(truth("D3R", *b2xm))));
        rep.checks.push_back(check("branch 2 → x− click: D2R fails", "D2R", space, "FALSE",
                                   truth_str(truth("D2R", *b2xm))));
    } else {
        rep.checks.push_back(vacuous("branch 2 → x− click: D3R holds", "D3R", space));
        rep.checks.push_back(vacuous("branch 2 → x− click: D2R fails", "D2R", space));
    }

    // (iii) prohibition of simultaneous same-side clicks at every reachable state.
    struct Named {
        std::string label;
        const std::optional<StateVector>* state;
    };
    const Named states[] = {{"branch 1", &b1},
                            {"branch 2", &b2},
                            {"branch 2 → x+", &b2xp},
                            {"branch 2 → x−", &b2xm}};
    const std::pair<std::string, std::string> same_side[] = {
        {"D1L", "D2L"}, {"D1R", "D2R"}, {"D1R", "D3R"}, {"D2R", "D3R"}};

    for (const Named& st : states) {
        std::string label = "no simultaneous same-side clicks at " + st.label;
        if (!st.state->has_value()) {
            rep.checks.push_back(vacuous(label, "Dk & Dm (same side)", space));
            continue;
        }
        std::string offenders;
        for (const auto& [x, y] : same_side) {
            if (truth(x, **st.state) == StateTruth::True &&
                truth(y, **st.state) == StateTruth::True) {
                if (!offenders.empty()) offenders += ", ";
                offenders += x + "&" + y;
            }
        }
        rep.checks.push_back(check(label, "Dk & Dm (same side)", space, "NONE",
                                   offenders.empty() ? "NONE" : offenders));
    }

    // The two right-side conjunction families, across all reachable states.
    for (const auto& [x, y] : {std::pair<std::string, std::string>{"D1R", "D2R"},
                               {"D1R", "D3R"},
                               {"D2R", "D3R"}}) {
        bool somewhere = false;
        for (const Named& st : states)
            if (st.state->has_value() && truth(x, **st.state) == StateTruth::True &&
                truth(y, **st.state) == StateTruth::True)
                somewhere = true;
        rep.checks.push_back(check(x + " & " + y + " holds at no reachable state", x + " & " + y,
                                   space, "FALSE AT EVERY REACHABLE STATE",
                                   somewhere ? "TRUE SOMEWHERE" : "FALSE AT EVERY REACHABLE STATE"));
    }
    return rep;
}

ScenarioReport paradox_walkthrough() {
    ScenarioReport rep;
    rep.title = "Two-valued paradox walkthrough";
    rep.notes.push_back(
        "Conclusion: !A1 | !A2 — the assertions cannot be both bivalent (A1) and "
        "contradiction-free under classical manipulation (A2).");

    Formula no_failing_pair = parse("(!(D1L -> D1R) & !(D2L -> (D2R | D3R))) <-> F");
    Formula one_holds = parse("((D1L -> D1R) | (D2L -> (D2R | D3R))) <-> T");
    Formula expanded = parse("(!(D1L & D2L) | (D1R | (D2R | D3R))) <-> T");
    Formula prohibition_left = parse("!(D1L & D2L)");
    Formula both_x_click = parse("D2R & D3R");

    rep.checks.push_back(check(
        "De Morgan + double negation step", render(no_failing_pair) + "  vs  " + render(one_holds),
        "classical, 2^5 rows", "EQUIVALENT",
        equivalent2(no_failing_pair, one_holds) ? "EQUIVALENT" : "DIFFER"));
    rep.checks.push_back(check("material-conditional expansion step",
                               render(one_holds) + "  vs  " + render(expanded),
                               "classical, 2^5 rows", "EQUIVALENT",
                               equivalent2(one_holds, expanded) ? "EQUIVALENT" : "DIFFER"));
    rep.checks.push_back(check("the conditional is the material one", "(A -> B) <-> (!A | B)",
                               "classical", "TAUTOLOGY",
                               is_tautology(parse("(A -> B) <-> (!A | B)")) ? "TAUTOLOGY"
                                                                            : "NOT A TAUTOLOGY"));

    const Formula constraints[] = {one_holds, prohibition_left};
    std::vector<Valuation2> hits = find_valuations(constraints, both_x_click);
    std::string exhibit;
    if (!hits.empty()) {
        for (const auto& [atom, value] : hits.front()) {
            if (!exhibit.empty()) exhibit += " ";
            exhibit += atom + "=" + (value ? "T" : "F");
        }
        rep.notes.push_back("free-assignment exhibit (" + std::to_string(hits.size()) +
                            " valuations): " + exhibit);
    }
    rep.checks.push_back(check(
        "free truth assignment admits simultaneous counterfactual right-side clicks",
        "constraints: " + render(one_holds) + ", " + render(prohibition_left) +
            "; require: " + render(both_x_click),
        "classical, valuation search", "FOUND", hits.empty() ? "NONE" : "FOUND"));

    const Formula relaxed_constraints[] = {one_holds};
    rep.checks.push_back(
        check("the exhibit survives dropping the left-side prohibition",
              "constraints: " + render(one_holds) + "; require: " + render(both_x_click),
              "classical, valuation search", "FOUND",
              find_valuations(relaxed_constraints, both_x_click).empty() ? "NONE" : "FOUND"));

    rep.checks.push_back(check("conclusion restated as a conditional", "(!A1 | !A2) <-> (A1 -> !A2)",
                               "classical", "EQUIVALENT",
                               equivalent2(parse("!A1 | !A2"), parse("A1 -> !A2")) ? "EQUIVALENT"
                                                                                   : "DIFFER"));
    rep.checks.push_back(check("conclusion restated, other direction",
                               "(!A1 | !A2) <-> (A2 -> !A1)", "classical", "EQUIVALENT",
                               equivalent2(parse("!A1 | !A2"), parse("A2 -> !A1")) ? "EQUIVALENT"
                                                                                   : "DIFFER"));
    return rep;
}

ScenarioReport quantum_logic_walkthrough() {
    ScenarioReport rep;
    rep.title = "Lattice-semantics walkthrough (C2)";
    const Tolerance tol;
    ProjectorAssignment a = detector_projectors();
    const std::string sem = "lattice connectives, C2 (-> is the Sasaki hook)";

    Formula disj_of_conditionals = parse("(D1L -> D1R) | (D2L -> (D2R | D3R))");
    rep.checks.push_back(check("the disjunction of conditionals is a lattice tautology",
                               render(disj_of_conditionals), sem, "TAUTOLOGY",
                               class_str(ql_classify(disj_of_conditionals, a, tol))));
    rep.checks.push_back(check("left-side prohibition is a lattice tautology", "!(D1L & D2L)", sem,
                               "TAUTOLOGY", class_str(ql_classify(parse("!(D1L & D2L)"), a, tol))));
    rep.checks.push_back(check("D1L & D1R is neither tautology nor contradiction", "D1L & D1R",
                               sem, "CONTINGENT", class_str(ql_classify(parse("D1L & D1R"), a, tol))));
    rep.checks.push_back(check(
        "D1L & D1R reduces to D1L", "D1L & D1R", sem, "EQUAL",
        approx_equal(ql_copy(parse("D1L & D1R"), a, tol).matrix(), a.at("D1L").matrix(), tol.eps())
            ? "EQUAL"
            : "DIFFER"));
    rep.checks.push_back(check("D2L & (D2R | D3R) is contingent", "D2L & (D2R | D3R)", sem,
                               "CONTINGENT",
                               class_str(ql_classify(parse("D2L & (D2R | D3R)"), a, tol))));
    rep.checks.push_back(check("the two right x detectors are jointly exhaustive", "D2R | D3R",
                               sem, "TAUTOLOGY", class_str(ql_classify(parse("D2R | D3R"), a, tol))));

    {
        const std::pair<std::string, std::string> same_side[] = {
            {"D1L", "D2L"}, {"D1R", "D2R"}, {"D1R", "D3R"}, {"D2R", "D3R"}};
        std::string offenders;
        for (const auto& [x, y] : same_side) {
            Formula f = Formula::conjunction(Formula::atom(x), Formula::atom(y));
            if (ql_classify(f, a, tol) == LatticeClass::Tautology) {
                if (!offenders.empty()) offenders += ", ";
                offenders += x + "&" + y;
            }
        }
        rep.checks.push_back(check("no same-side conjunction is a lattice tautology",
                                   "Dk & Dm (same side)", sem, "NONE",
                                   offenders.empty() ? "NONE" : offenders));
    }

    rep.checks.push_back(check(
        "hook and material conditional split on a non-commuting pair",
        "!D1R | D2R  vs  D1R -> D2R", sem, "DIFFER",
        approx_equal(ql_copy(parse("!D1R | D2R"), a, tol).matrix(),
                     ql_copy(parse("D1R -> D2R"), a, tol).matrix(), tol.eps())
            ? "EQUAL"
            : "DIFFER"));

    {
        auto x = pauli_eigenprojectors(Axis::X);
        auto z = pauli_eigenprojectors(Axis::Z);
        DistributivityReport w = distributivity_witness(z.plus, x.plus, x.minus, tol);
        rep.checks.push_back(check("meet does not distribute over join",
                                   "D1R & (D2R | D3R)  vs  (D1R & D2R) | (D1R & D3R)", sem,
                                   "NONDISTRIBUTIVE", w.distributive ? "DISTRIBUTIVE" : "NONDISTRIBUTIVE"));
        bool sides_ok = approx_equal(w.lhs.matrix(), z.plus.matrix(), tol.eps()) &&
                        w.rhs.matrix().norm() <= tol.eps();
        rep.checks.push_back(check("witness sides are the z+ dyad and the zero projector",
                                   "lhs vs P_z+, rhs vs P_⊥", sem, "CONFIRMED",
                                   sides_ok ? "CONFIRMED" : "DIFFER"));
    }
    return rep;
}

ScenarioReport tarski_walkthrough() {
    ScenarioReport rep;
    rep.title = "Truth-copy walkthrough (C2)";
    rep.notes.push_back(
        "A gap marks a sentence with no unique truth copy; it arises from combining "
        "non-commuting sub-copies, never from the state.");
    const Tolerance tol;
    ProjectorAssignment a = detector_projectors();
    const std::string sem = "truth copies, C2";

    auto comm_check = [&](const std::string& x, const std::string& y, bool expect_comm) {
        bool comm = commutes(a.at(x), a.at(y), tol);
        double product_norm = (a.at(x).matrix() * a.at(y).matrix()).norm();
        std::string computed = comm ? (product_norm <= tol.eps() ? "COMMUTE, PRODUCT 0" : "COMMUTE")
                                    : "DO NOT COMMUTE";
        std::string expected = expect_comm ? "COMMUTE, PRODUCT 0" : "DO NOT COMMUTE";
        rep.checks.push_back(check("projector pair (" + x + ", " + y + ")", x + ", " + y, sem,
                                   expected, computed));
    };
    comm_check("D1L", "D2L", true);
    comm_check("D1R", "D2R", false);
    comm_check("D1R", "D3R", false);
    comm_check("D2R", "D3R", true);

    Formula t1 = parse("D1R | (D2R | D3R)");
    rep.checks.push_back(check("full right-side disjunction copies to P_⊤", render(t1), sem,
                               "UNIQUE: P_⊤", copy_str(tarski_copy(t1, a, tol), tol)));
    rep.checks.push_back(check("D1R & D2R has no unique copy", "D1R & D2R", sem, "GAP",
                               copy_str(tarski_copy(parse("D1R & D2R"), a, tol), tol)));
    rep.checks.push_back(check("D1R & D3R has no unique copy", "D1R & D3R", sem, "GAP",
                               copy_str(tarski_copy(parse("D1R & D3R"), a, tol), tol)));
    rep.checks.push_back(check("D2R & D3R copies to P_⊥", "D2R & D3R", sem, "UNIQUE: P_⊥",
                               copy_str(tarski_copy(parse("D2R & D3R"), a, tol), tol)));

    {
        StateVector e1(2);
        e1 << 1, 0;
        SemanticVerdict v1 = tsentence_eval(t1, a, e1, tol);
        SemanticVerdict v2 = tsentence_eval(parse("D2R & D3R"), a, e1, tol);
        rep.checks.push_back(check("P_⊤ copy is true at any state", render(t1),
                                   "truth copies at |z+⟩", "TRUE",
                                   v1 == SemanticVerdict::True ? "TRUE" : "NOT TRUE"));
        rep.checks.push_back(check("P_⊥ copy is false at any state", "D2R & D3R",
                                   "truth copies at |z+⟩", "FALSE",
                                   v2 == SemanticVerdict::False ? "FALSE" : "NOT FALSE"));
    }

    auto ident = [&](const char* label, const char* g_text, TruthValue3 expect) {
        TruthValue3 got = sentence_identity(t1, parse(g_text), a, tol);
        rep.checks.push_back(check(label, render(t1) + "  =  " + g_text,
                                   "sentence identity, three-valued",
                                   std::string(1, to_char(expect)), std::string(1, to_char(got))));
    };
    ident("identity with the or-of-and variant is false", "D1R | (D2R & D3R)", TruthValue3::False);
    ident("identity with the gappy all-and variant is undefined", "(D1R & D2R) & D3R",
          TruthValue3::Undefined);
    ident("identity with the other gappy association is undefined", "(D1R & D3R) & D2R",
          TruthValue3::Undefined);

    {
        IdentityDemo demo = distributivity_identity_demo(a, "D1R", "D2R", tol);
        std::string computed = std::string(1, to_char(demo.value)) +
                               (demo.inputs_commute ? " (commuting inputs)" : " (non-commuting inputs)");
        rep.checks.push_back(check(
            "distributivity identity has no truth value on a non-commuting pair",
            "D1R | (D2R & !D2R)  =  (D1R | D2R) & (D1R | !D2R)", "sentence identity, three-valued",
            "u (non-commuting inputs)", computed));
    }
    return rep;
}

ScenarioReport resolutions_walkthrough() {
    ScenarioReport quantum = quantum_logic_walkthrough();
    ScenarioReport tarski = tarski_walkthrough();
    ScenarioReport rep;
    rep.title = "Resolutions walkthrough (lattice + truth copies)";
    rep.notes = tarski.notes;
    rep.checks = std::move(quantum.checks);
    rep.checks.insert(rep.checks.end(), tarski.checks.begin(), tarski.checks.end());
    return rep;
}

ScenarioReport phase_space_demo() {
    ScenarioReport rep;
    rep.title = "Phase-space set semantics demo";

    PhaseSpaceModel m({"q1", "q2", "q3", "q4", "q5", "q6"},
                      {{"S1", {"q1", "q2", "q3"}}, {"S2", {"q2", "q4"}}, {"S3", {"q5"}}});
    const std::string sem = "subset semantics, 6 points";

    auto subset_str = [](const std::vector<std::string>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += v[i];
        }
        return out + "}";
    };

    rep.checks.push_back(check("negation is set complement", "!S1", sem, "{q4, q5, q6}",
                               subset_str(phase_eval(parse("!S1"), m))));
    rep.checks.push_back(check("conjunction is intersection", "S1 & S2", sem, "{q2}",
                               subset_str(phase_eval(parse("S1 & S2"), m))));
    rep.checks.push_back(check("disjunction is union", "S1 | S2", sem, "{q1, q2, q3, q4}",
                               subset_str(phase_eval(parse("S1 | S2"), m))));
    rep.checks.push_back(check("excluded middle holds pointwise", "S3 | !S3", sem,
                               "{q1, q2, q3, q4, q5, q6}",
                               subset_str(phase_eval(parse("S3 | !S3"), m))));

    {
        bool ok = true;
        for (const std::string& q : m.points()) {
            bool member = m.atom_sets().at("S1").contains(q);
            if (phase_truth(parse("S1"), m, q) != member) ok = false;
        }
        rep.checks.push_back(check("atom truth is membership at every point", "S1", sem,
                                   "AGREES AT ALL 6 POINTS",
                                   ok ? "AGREES AT ALL 6 POINTS" : "DISAGREES"));
    }

    {
        const char* formulas[] = {"S1 -> S2",       "(S1 -> S2) <-> (!S1 | S2)",
                                  "S1 & (S2 | S3)", "!(S1 & S2) <-> (!S1 | !S2)",
                                  "S1 = S2",        "(S1 | S2) & !S3"};
        bool ok = true;
        for (const char* text : formulas) {
            Formula f = parse(text);
            for (const std::string& q : m.points()) {
                Valuation2 v;
                for (const auto& [atom, subset] : m.atom_sets()) v[atom] = subset.contains(q);
                if (phase_truth(f, m, q) != eval2(f, v)) ok = false;
            }
        }
        rep.checks.push_back(check("pointwise agreement with two-valued evaluation",
                                   "6 formulas × 6 points", sem, "AGREES EVERYWHERE",
                                   ok ? "AGREES EVERYWHERE" : "DISAGREES"));
    }
    return rep;
}

}  // namespace qlogic
