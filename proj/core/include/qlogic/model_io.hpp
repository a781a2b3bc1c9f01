#pragma once

#include <optional>
#include <string>

#include "qlogic/semantics.hpp"

namespace qlogic {

/// A loaded evaluation model: either a projector assignment (optionally with a
/// state) or a phase-space model, never both.
struct LoadedModel {
    std::optional<ProjectorAssignment> assignment;
    std::optional<StateVector> state;
    std::optional<PhaseSpaceModel> phase;

    bool has_matrices() const noexcept { return assignment.has_value(); }
};

/// Loads a model from a JSON file, or one of the built-in names:
///
///   "scenario"         the five detector projectors in C2, state |z+⟩
///   "scenario-lifted"  the same detectors on C2⊗C2 (left/right Kronecker
///                      factors) with the default experiment state
///
/// File schema (UTF-8 JSON; complex numbers are [re, im] pairs, matrices
/// row-major nested arrays):
///
///   {"dimension": n, "atoms": {name: matrix, ...}, "state": vector?}
///   {"phase": {"points": [label, ...], "atoms": {name: [label, ...], ...}}}
///
/// Exactly one of "atoms" or "phase" must be present. Matrices must pass
/// projector validation; a present state must be unit-norm.
LoadedModel load_model(const std::string& name_or_path, Tolerance tol = {});

/// Parses a state vector from inline JSON text, e.g. "[[1,0],[0,0]]".
StateVector parse_state_json(const std::string& text);

}  // namespace qlogic
