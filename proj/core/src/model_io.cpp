#include "qlogic/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qlogic/scenario.hpp"

namespace qlogic {

namespace {

using nlohmann::json;

Complex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError(where + ": complex numbers must be [re, im] number pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Matrix matrix_from_json(const json& j, Eigen::Index dim, const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim)
        throw ValidationError(where + ": expected " + std::to_string(dim) + " matrix rows");
    Matrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
            throw ValidationError(where + ": row " + std::to_string(r) + " must have " +
                                  std::to_string(dim) + " entries");
        for (Eigen::Index c = 0; c < dim; ++c)
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                        where + " entry (" + std::to_string(r) + "," +
                                            std::to_string(c) + ")");
    }
    return m;
}

StateVector vector_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ValidationError(where + ": expected a nonempty array of [re, im] pairs");
    StateVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) =
            complex_from_json(j[i], where + " entry " + std::to_string(i));
    return v;
}

LoadedModel builtin_scenario() {
    LoadedModel m;
    m.assignment = detector_projectors();
    StateVector e1(2);
    e1 << 1, 0;
    m.state = e1;
    return m;
}

LoadedModel builtin_scenario_lifted() {
    LoadedModel m;
    m.assignment = lifted_detector_projectors();
    m.state = build_state(ExperimentConfig::defaults());
    return m;
}

LoadedModel from_json(const json& doc, Tolerance tol) {
    if (!doc.is_object()) throw ValidationError("model file: top level must be a JSON object");
    const bool has_atoms = doc.contains("atoms");
    const bool has_phase = doc.contains("phase");
    if (has_atoms == has_phase)
        throw ValidationError("model file: exactly one of 'atoms' or 'phase' must be present");

    LoadedModel out;
    if (has_atoms) {
        if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
            throw ValidationError("model file: 'dimension' must be an integer");
        const auto dim = doc["dimension"].get<Eigen::Index>();
        if (dim <= 0) throw ValidationError("model file: 'dimension' must be positive");
        if (!doc["atoms"].is_object() || doc["atoms"].empty())
            throw ValidationError("model file: 'atoms' must be a nonempty object");

        ProjectorAssignment a(dim);
        for (const auto& [name, value] : doc["atoms"].items()) {
            Matrix m = matrix_from_json(value, dim, "atom '" + name + "'");
            try {
                a.assign(name, Projector::from_matrix(std::move(m), tol));
            } catch (const ValidationError& e) {
                throw ValidationError("atom '" + name + "': " + e.what());
            }
        }
        out.assignment = std::move(a);

        if (doc.contains("state")) {
            StateVector psi = vector_from_json(doc["state"], "state");
            if (psi.size() != dim)
                throw ValidationError("state: has " + std::to_string(psi.size()) +
                                      " entries, model dimension is " + std::to_string(dim));
            if (std::abs(psi.norm() - 1.0) > tol.eps())
                throw ValidationError("state: not unit-norm (‖ψ‖ = " + std::to_string(psi.norm()) +
                                      ")");
            out.state = std::move(psi);
        }
    } else {
        const json& ph = doc["phase"];
        if (!ph.is_object() || !ph.contains("points") || !ph.contains("atoms"))
            throw ValidationError("model file: 'phase' needs 'points' and 'atoms'");
        if (!ph["points"].is_array())
            throw ValidationError("phase.points: must be an array of labels");
        std::vector<std::string> points;
        for (const json& p : ph["points"]) {
            if (!p.is_string()) throw ValidationError("phase.points: labels must be strings");
            points.push_back(p.get<std::string>());
        }
        if (!ph["atoms"].is_object())
            throw ValidationError("phase.atoms: must map atom names to label arrays");
        std::map<std::string, std::set<std::string>> sets;
        for (const auto& [name, value] : ph["atoms"].items()) {
            if (!value.is_array())
                throw ValidationError("phase atom '" + name + "': must be an array of labels");
            std::set<std::string> subset;
            for (const json& p : value) {
                if (!p.is_string())
                    throw ValidationError("phase atom '" + name + "': labels must be strings");
                subset.insert(p.get<std::string>());
            }
            sets.emplace(name, std::move(subset));
        }
        out.phase = PhaseSpaceModel(std::move(points), std::move(sets));
    }
    return out;
}

}  // namespace

LoadedModel load_model(const std::string& name_or_path, Tolerance tol) {
    if (name_or_path == "scenario") return builtin_scenario();
    if (name_or_path == "scenario-lifted") return builtin_scenario_lifted();

    std::ifstream in(name_or_path);
    if (!in) throw Error("model file not found: " + name_or_path);
    std::stringstream buf;
    buf << in.rdbuf();

    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ValidationError("model file is not valid JSON: " + std::string(e.what()));
    }
    return from_json(doc, tol);
}

StateVector parse_state_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("state is not valid JSON: " + std::string(e.what()));
    }
    return vector_from_json(doc, "state");
}

}  // namespace qlogic
