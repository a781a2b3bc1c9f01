#pragma once

#include <array>
#include <string>
#include <vector>

#include "qlogic/hilbert.hpp"
#include "qlogic/semantics.hpp"

namespace qlogic {

/// Amplitudes of the built-in two-particle experiment state
/// b1·(z+ ⊗ z+) + b2·(z− ⊗ (c1·x+ + c2·x−)).
struct ExperimentConfig {
    Complex b1, b2;
    Complex c1, c2;
    Tolerance tol{};

    /// b = c = (1/√2, 1/√2): every branch reachable.
    static ExperimentConfig defaults();

    /// |b1|² + |b2|² = 1 and |c1|² + |c2|² = 1 within eps.
    void validate() const;
};

struct CheckRecord {
    std::string label;
    std::string formula;
    std::string semantics;
    std::string expected;
    std::string computed;
    bool vacuous = false;  // branch unreachable under this configuration
    bool pass = false;     // always expected == computed
};

struct ScenarioReport {
    std::string title;
    std::vector<std::string> notes;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
};

std::string to_text(const ScenarioReport& report);
std::string to_json_string(const ScenarioReport& report);

/// The five detector assertions as rank-1 projectors in C²:
/// D1L, D1R ↦ z+, D2L ↦ z−, D2R ↦ x+, D3R ↦ x−.
ProjectorAssignment detector_projectors();

/// The same assertions lifted to C²⊗C²: left detectors act on the first
/// factor, right detectors on the second.
ProjectorAssignment lifted_detector_projectors();

struct CommutationTable {
    std::array<std::string, 5> names;             // D1L, D2L, D1R, D2R, D3R
    std::array<std::array<bool, 5>, 5> commutes;  // same index order
};

/// Pairwise commutation of the C² detector projectors.
CommutationTable commutation_table();

/// The four-component experiment state in the computational basis of C²⊗C².
StateVector build_state(const ExperimentConfig& cfg);

enum class Side { Left, Right };

/// Kronecker embedding of a single-spin projector: left ↦ P ⊗ I, right ↦ I ⊗ P.
Projector lift(const Projector& p, Side side);

/// Pψ / ‖Pψ‖. Throws ZeroAmplitudeError when ‖Pψ‖ ≤ eps.
StateVector collapse(const StateVector& psi, const Projector& p, Tolerance tol = {});

/// Collapse sequence in C⁴: branch-1 and branch-2 detector verdicts plus the
/// no-simultaneous-same-side-clicks checks at every reachable state.
ScenarioReport copenhagen_walkthrough(const ExperimentConfig& cfg = ExperimentConfig::defaults());

/// The classical derivation chain and the valuation that certifies the clash:
/// free truth assignment to right-side assertions admits simultaneous
/// counterfactual clicks.
ScenarioReport paradox_walkthrough();

/// Lattice-semantics resolution: the disjunction of conditionals is a lattice
/// tautology while no same-side conjunction is.
ScenarioReport quantum_logic_walkthrough();

/// Truth-copy resolution: unique copies for the commuting compounds, gaps for
/// the rest, and the two sentence-identity verdicts (f and u).
ScenarioReport tarski_walkthrough();

/// quantum_logic_walkthrough and tarski_walkthrough combined.
ScenarioReport resolutions_walkthrough();

/// Boolean set semantics on a sample six-point phase space, with the
/// pointwise agreement oracle against two-valued evaluation.
ScenarioReport phase_space_demo();

}  // namespace qlogic
