#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/formula.hpp"
#include "qlogic/hilbert.hpp"
#include "qlogic/trivalent.hpp"

namespace qlogic {

/// Atom name → projector, all in one dimension. T maps to the identity and F
/// to the zero projector implicitly.
class ProjectorAssignment {
public:
    explicit ProjectorAssignment(Eigen::Index dim);

    /// Replaces any previous entry. The name must be a valid atom name and the
    /// projector must live in this assignment's dimension.
    void assign(std::string name, Projector p);

    Eigen::Index dim() const noexcept { return dim_; }
    const Projector* find(std::string_view name) const;
    const Projector& at(std::string_view name) const;  // MissingAtomError if absent
    const std::map<std::string, Projector, std::less<>>& entries() const noexcept { return entries_; }

private:
    Eigen::Index dim_;
    std::map<std::string, Projector, std::less<>> entries_;
};

/// Lattice ("quantum") interpretation of a formula: ! is orthocomplement,
/// & is meet, | is join, -> is the Sasaki hook, <-> is the meet of the two
/// hooks. '=' is rejected (it compares sentences, it is not a connective
/// here). Total: every formula gets a projector.
Projector ql_copy(const Formula& f, const ProjectorAssignment& a, Tolerance tol = {});

enum class LatticeClass { Tautology, Contradiction, Contingent };

/// Tautology iff the copy is the identity, Contradiction iff zero.
LatticeClass ql_classify(const Formula& f, const ProjectorAssignment& a, Tolerance tol = {});

/// A translated sentence: either a unique projector, or no unique translation
/// at all (nullopt) when a conjunction/disjunction combines non-commuting
/// sub-copies.
using CopyResult = std::optional<Projector>;

/// Truth-copy translation: ! maps to I - P; & to PQ and | to P + Q - PQ when
/// the sub-copies commute, otherwise there is no unique copy and nullopt
/// propagates upward; -> expands to !l | r, <-> to (!l | r) & (!r | l).
/// Commutation is tested on the computed sub-copies, not on the atoms.
CopyResult tarski_copy(const Formula& f, const ProjectorAssignment& a, Tolerance tol = {});

/// The two u sources stay distinct: a gap comes from non-commuting
/// composition, indeterminacy from a state that is no eigenvector.
enum class SemanticVerdict { True, False, IndeterminateState, GapNoUniqueCopy };

/// Evaluates the copy against a unit state: no unique copy ⇒ GapNoUniqueCopy;
/// otherwise the eigenvector test of apply_and_classify.
SemanticVerdict tsentence_eval(const Formula& f, const ProjectorAssignment& a,
                               const StateVector& psi, Tolerance tol = {});

/// Three-valued identity of two sentences by their copies: u if either has no
/// unique copy, else t when the copies are equal within eps, f otherwise.
TruthValue3 sentence_identity(const Formula& f, const Formula& g, const ProjectorAssignment& a,
                              Tolerance tol = {});

struct IdentityDemo {
    TruthValue3 value;
    /// The demo is about non-commuting inputs; with commuting inputs both
    /// sides reduce to the same copy and the value is t.
    bool inputs_commute;
};

/// Compares s1 | (s2 & !s2) with (s1 | s2) & (s1 | !s2) under sentence_identity.
/// Non-commuting inputs give u: the right-hand side has no unique copy, so the
/// identity has no truth value and distributivity is not refuted.
IdentityDemo distributivity_identity_demo(const ProjectorAssignment& a, const std::string& s1,
                                          const std::string& s2, Tolerance tol = {});

/// Finite set of classical states plus atom → subset of states.
class PhaseSpaceModel {
public:
    PhaseSpaceModel(std::vector<std::string> points,
                    std::map<std::string, std::set<std::string>> atom_sets);

    const std::vector<std::string>& points() const noexcept { return points_; }
    const std::map<std::string, std::set<std::string>>& atom_sets() const noexcept {
        return atom_sets_;
    }
    bool has_point(std::string_view q) const;

private:
    std::vector<std::string> points_;
    std::map<std::string, std::set<std::string>> atom_sets_;
};

/// Boolean set semantics: ! is complement within the point set, & is ∩, | is
/// ∪, -> is complement(l) ∪ r, <-> and '=' the complement of the symmetric
/// difference. Returns the satisfying subset in the model's point order.
std::vector<std::string> phase_eval(const Formula& f, const PhaseSpaceModel& m);

/// True iff q lies in phase_eval(f, m). Throws UnknownPointError for points
/// outside the model.
bool phase_truth(const Formula& f, const PhaseSpaceModel& m, std::string_view q);

}  // namespace qlogic
