#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/errors.hpp"

namespace qlogic {

enum class Kind : std::uint8_t {
    Atom,
    Top,
    Bottom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Identity,
};

/// Immutable propositional formula. Copies are cheap (nodes are shared and
/// never mutated), equality is structural.
///
/// Concrete syntax, lowest to highest precedence:
///
///     formula := iff
///     iff     := imp (("<->" | "=") imp)*      left-associative
///     imp     := or ("->" imp)?                right-associative
///     or      := and ("|" and)*
///     and     := unary ("&" unary)*
///     unary   := "!" unary | "(" formula ")" | "T" | "F" | IDENT
///
/// IDENT matches [A-Za-z][A-Za-z0-9_]* and may not be the reserved constants
/// "T" (top) or "F" (bottom). Whitespace between tokens is insignificant.
///
/// '<->' is the object-level biconditional; '=' is the sentence-identity
/// connective. Two-valued evaluation treats them alike, but the three-valued
/// and projector semantics do not, so they stay distinct in the tree.
class Formula {
public:
    static Formula atom(std::string_view name);
    static Formula top();
    static Formula bottom();
    static Formula negation(Formula f);
    static Formula conjunction(Formula l, Formula r);
    static Formula disjunction(Formula l, Formula r);
    static Formula implication(Formula l, Formula r);
    static Formula biconditional(Formula l, Formula r);
    static Formula identity(Formula l, Formula r);

    Kind kind() const noexcept { return node_->kind; }
    bool is_leaf() const noexcept;
    bool is_binary() const noexcept;

    /// Atom nodes only.
    const std::string& atom_name() const;
    /// Negation nodes only.
    Formula child() const;
    /// Binary nodes only.
    Formula left() const;
    Formula right() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        std::string name;                   // Atom only
        std::shared_ptr<const Node> a, b;   // unary: a; binary: a, b
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Parses formula text. Throws ParseError with position and expected tokens.
Formula parse(std::string_view text);

/// Minimal-parenthesis text; parse(render(f)) is structurally equal to f.
std::string render(const Formula& f);

/// Atom names in first-occurrence order, duplicates removed.
std::vector<std::string> atoms(const Formula& f);

/// Two-valued truth: plain bool, true/false.
using TruthValue2 = bool;

/// Total map from atom names to two-valued truth.
using Valuation2 = std::map<std::string, bool, std::less<>>;

/// Largest atom count accepted by the exhaustive two-valued enumerations.
inline constexpr std::size_t kMaxAtoms2 = 24;

/// Classical evaluation. '->' is the material conditional (!l | r), '<->' and
/// '=' are both "same truth value". Throws MissingAtomError if v does not
/// cover every atom of f.
bool eval2(const Formula& f, const Valuation2& v);

/// True iff f evaluates true under all 2^n valuations of its atoms.
/// Throws TooManyAtomsError above kMaxAtoms2.
bool is_tautology(const Formula& f);

/// True iff f and g agree under every valuation of the union of their atoms.
bool equivalent2(const Formula& f, const Formula& g);

/// All valuations over the combined atoms (sorted lexicographically) that make
/// every constraint and `require` true, enumerated in lexicographic order with
/// false < true.
std::vector<Valuation2> find_valuations(std::span<const Formula> constraints,
                                        const Formula& require);

}  // namespace qlogic
