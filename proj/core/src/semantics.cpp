#include "qlogic/semantics.hpp"

#include <algorithm>

namespace qlogic {

ProjectorAssignment::ProjectorAssignment(Eigen::Index dim) : dim_(dim) {
    if (dim <= 0) throw ValidationError("assignment dimension must be positive");
}

void ProjectorAssignment::assign(std::string name, Projector p) {
    // Reuse the formula-side name check so every assigned atom is parseable.
    Formula::atom(name);
    if (p.dim() != dim_)
        throw DimensionMismatchError("projector for '" + name + "' has dimension " +
                                     std::to_string(p.dim()) + ", assignment expects " +
                                     std::to_string(dim_));
    entries_.insert_or_assign(std::move(name), std::move(p));
}

const Projector* ProjectorAssignment::find(std::string_view name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

const Projector& ProjectorAssignment::at(std::string_view name) const {
    const Projector* p = find(name);
    if (!p) throw MissingAtomError(std::string(name));
    return *p;
}

// ---------------------------------------------------------------------------
// Lattice interpretation
// ---------------------------------------------------------------------------

Projector ql_copy(const Formula& f, const ProjectorAssignment& a, Tolerance tol) {
    switch (f.kind()) {
        case Kind::Atom: return a.at(f.atom_name());
        case Kind::Top: return Projector::identity(a.dim());
        case Kind::Bottom: return Projector::zero(a.dim());
        case Kind::Not: return ortho(ql_copy(f.child(), a, tol));
        case Kind::And: return meet(ql_copy(f.left(), a, tol), ql_copy(f.right(), a, tol), tol);
        case Kind::Or: return join(ql_copy(f.left(), a, tol), ql_copy(f.right(), a, tol), tol);
        case Kind::Implies:
            return sasaki_hook(ql_copy(f.left(), a, tol), ql_copy(f.right(), a, tol), tol);
        case Kind::Iff: {
            Projector l = ql_copy(f.left(), a, tol);
            Projector r = ql_copy(f.right(), a, tol);
            return meet(sasaki_hook(l, r, tol), sasaki_hook(r, l, tol), tol);
        }
        case Kind::Identity:
            throw UnsupportedConnectiveError(
                "'=' compares whole sentences; it has no lattice interpretation");
    }
    throw Error("unreachable formula kind");
}

LatticeClass ql_classify(const Formula& f, const ProjectorAssignment& a, Tolerance tol) {
    Projector copy = ql_copy(f, a, tol);
    if (approx_equal(copy.matrix(), Matrix::Identity(a.dim(), a.dim()), tol.eps()))
        return LatticeClass::Tautology;
    if (copy.matrix().norm() <= tol.eps()) return LatticeClass::Contradiction;
    return LatticeClass::Contingent;
}

// ---------------------------------------------------------------------------
// Truth-copy translation
// ---------------------------------------------------------------------------

namespace {

CopyResult copy_and(const CopyResult& l, const CopyResult& r, Tolerance tol) {
    if (!l || !r) return std::nullopt;
    if (!commutes(*l, *r, tol)) return std::nullopt;
    // (PQ + QP)/2 is exactly Hermitian and halves the commutation residual.
    Matrix m = 0.5 * (l->matrix() * r->matrix() + r->matrix() * l->matrix());
    return Projector::from_matrix(std::move(m), tol);
}

CopyResult copy_or(const CopyResult& l, const CopyResult& r, Tolerance tol) {
    if (!l || !r) return std::nullopt;
    if (!commutes(*l, *r, tol)) return std::nullopt;
    Matrix m = l->matrix() + r->matrix() -
               0.5 * (l->matrix() * r->matrix() + r->matrix() * l->matrix());
    return Projector::from_matrix(std::move(m), tol);
}

}  // namespace

CopyResult tarski_copy(const Formula& f, const ProjectorAssignment& a, Tolerance tol) {
    switch (f.kind()) {
        case Kind::Atom: return a.at(f.atom_name());
        case Kind::Top: return Projector::identity(a.dim());
        case Kind::Bottom: return Projector::zero(a.dim());
        case Kind::Not: {
            CopyResult c = tarski_copy(f.child(), a, tol);
            if (!c) return std::nullopt;
            return ortho(*c);
        }
        case Kind::And:
            return copy_and(tarski_copy(f.left(), a, tol), tarski_copy(f.right(), a, tol), tol);
        case Kind::Or:
            return copy_or(tarski_copy(f.left(), a, tol), tarski_copy(f.right(), a, tol), tol);
        case Kind::Implies:
            // The conditional's copy is the copy of !l | r.
            return tarski_copy(
                Formula::disjunction(Formula::negation(f.left()), f.right()), a, tol);
        case Kind::Iff:
            return tarski_copy(
                Formula::conjunction(
                    Formula::disjunction(Formula::negation(f.left()), f.right()),
                    Formula::disjunction(Formula::negation(f.right()), f.left())),
                a, tol);
        case Kind::Identity:
            throw UnsupportedConnectiveError(
                "'=' compares whole sentences; use sentence_identity");
    }
    throw Error("unreachable formula kind");
}

SemanticVerdict tsentence_eval(const Formula& f, const ProjectorAssignment& a,
                               const StateVector& psi, Tolerance tol) {
    CopyResult copy = tarski_copy(f, a, tol);
    if (!copy) return SemanticVerdict::GapNoUniqueCopy;
    switch (apply_and_classify(*copy, psi, tol)) {
        case StateTruth::True: return SemanticVerdict::True;
        case StateTruth::False: return SemanticVerdict::False;
        default: return SemanticVerdict::IndeterminateState;
    }
}

TruthValue3 sentence_identity(const Formula& f, const Formula& g, const ProjectorAssignment& a,
                              Tolerance tol) {
    CopyResult cf = tarski_copy(f, a, tol);
    CopyResult cg = tarski_copy(g, a, tol);
    if (!cf || !cg) return TruthValue3::Undefined;
    return approx_equal(cf->matrix(), cg->matrix(), tol.eps()) ? TruthValue3::True
                                                               : TruthValue3::False;
}

IdentityDemo distributivity_identity_demo(const ProjectorAssignment& a, const std::string& s1,
                                          const std::string& s2, Tolerance tol) {
    const Projector& p1 = a.at(s1);
    const Projector& p2 = a.at(s2);
    bool comm = commutes(p1, p2, tol);

    Formula a1 = Formula::atom(s1);
    Formula a2 = Formula::atom(s2);
    Formula lhs = Formula::disjunction(a1, Formula::conjunction(a2, Formula::negation(a2)));
    Formula rhs = Formula::conjunction(Formula::disjunction(a1, a2),
                                       Formula::disjunction(a1, Formula::negation(a2)));
    return {sentence_identity(lhs, rhs, a, tol), comm};
}

// ---------------------------------------------------------------------------
// Phase-space set semantics
// ---------------------------------------------------------------------------

PhaseSpaceModel::PhaseSpaceModel(std::vector<std::string> points,
                                 std::map<std::string, std::set<std::string>> atom_sets)
    : points_(std::move(points)), atom_sets_(std::move(atom_sets)) {
    if (points_.empty()) throw ValidationError("phase space needs at least one point");
    std::set<std::string> universe(points_.begin(), points_.end());
    if (universe.size() != points_.size())
        throw ValidationError("phase-space points must be distinct");
    for (const auto& [atom, subset] : atom_sets_) {
        Formula::atom(atom);  // name check
        for (const std::string& q : subset)
            if (!universe.contains(q))
                throw ValidationError("phase atom '" + atom + "': point '" + q +
                                      "' is not in the point set");
    }
}

bool PhaseSpaceModel::has_point(std::string_view q) const {
    return std::find(points_.begin(), points_.end(), q) != points_.end();
}

namespace {

std::set<std::string> phase_set(const Formula& f, const PhaseSpaceModel& m,
                                const std::set<std::string>& universe) {
    auto complement = [&universe](const std::set<std::string>& s) {
        std::set<std::string> out;
        for (const std::string& q : universe)
            if (!s.contains(q)) out.insert(q);
        return out;
    };
    switch (f.kind()) {
        case Kind::Atom: {
            auto it = m.atom_sets().find(f.atom_name());
            if (it == m.atom_sets().end()) throw MissingAtomError(f.atom_name());
            return it->second;
        }
        case Kind::Top: return universe;
        case Kind::Bottom: return {};
        case Kind::Not: return complement(phase_set(f.child(), m, universe));
        default: {
            std::set<std::string> l = phase_set(f.left(), m, universe);
            std::set<std::string> r = phase_set(f.right(), m, universe);
            std::set<std::string> out;
            switch (f.kind()) {
                case Kind::And:
                    for (const std::string& q : l)
                        if (r.contains(q)) out.insert(q);
                    return out;
                case Kind::Or:
                    out = l;
                    out.insert(r.begin(), r.end());
                    return out;
                case Kind::Implies: {
                    out = complement(l);
                    out.insert(r.begin(), r.end());
                    return out;
                }
                default:  // Iff, Identity: points where membership agrees
                    for (const std::string& q : universe)
                        if (l.contains(q) == r.contains(q)) out.insert(q);
                    return out;
            }
        }
    }
}

}  // namespace

std::vector<std::string> phase_eval(const Formula& f, const PhaseSpaceModel& m) {
    std::set<std::string> universe(m.points().begin(), m.points().end());
    std::set<std::string> sat = phase_set(f, m, universe);
    std::vector<std::string> out;
    for (const std::string& q : m.points())
        if (sat.contains(q)) out.push_back(q);
    return out;
}

bool phase_truth(const Formula& f, const PhaseSpaceModel& m, std::string_view q) {
    if (!m.has_point(q))
        throw UnknownPointError("point '" + std::string(q) + "' is not in the phase space");
    std::vector<std::string> sat = phase_eval(f, m);
    return std::find(sat.begin(), sat.end(), q) != sat.end();
}

}  // namespace qlogic
