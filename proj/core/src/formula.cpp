#include "qlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_map>

namespace qlogic {

namespace {

bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    if (name == "T" || name == "F") return false;  // reserved constants
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Formula Formula::atom(std::string_view name) {
    if (!valid_atom_name(name))
        throw ValidationError("invalid atom name '" + std::string(name) +
                              "' (want [A-Za-z][A-Za-z0-9_]*, not 'T' or 'F')");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->name = std::string(name);
    return Formula(std::move(n));
}

Formula Formula::top() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Top;
        return n;
    }();
    return Formula(node);
}

Formula Formula::bottom() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Bottom;
        return n;
    }();
    return Formula(node);
}

Formula Formula::negation(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->a = std::move(f.node_);
    return Formula(std::move(n));
}

#define QLOGIC_BINARY_FACTORY(fn, k)                   \
    Formula Formula::fn(Formula l, Formula r) {        \
        auto n = std::make_shared<Node>();             \
        n->kind = Kind::k;                             \
        n->a = std::move(l.node_);                     \
        n->b = std::move(r.node_);                     \
        return Formula(std::move(n));                  \
    }

QLOGIC_BINARY_FACTORY(conjunction, And)
QLOGIC_BINARY_FACTORY(disjunction, Or)
QLOGIC_BINARY_FACTORY(implication, Implies)
QLOGIC_BINARY_FACTORY(biconditional, Iff)
QLOGIC_BINARY_FACTORY(identity, Identity)

#undef QLOGIC_BINARY_FACTORY

bool Formula::is_leaf() const noexcept {
    Kind k = kind();
    return k == Kind::Atom || k == Kind::Top || k == Kind::Bottom;
}

bool Formula::is_binary() const noexcept { return !is_leaf() && kind() != Kind::Not; }

const std::string& Formula::atom_name() const {
    if (kind() != Kind::Atom) throw Error("atom_name() on a non-atom node");
    return node_->name;
}

Formula Formula::child() const {
    if (kind() != Kind::Not) throw Error("child() on a non-negation node");
    return Formula(node_->a);
}

Formula Formula::left() const {
    if (!is_binary()) throw Error("left() on a non-binary node");
    return Formula(node_->a);
}

Formula Formula::right() const {
    if (!is_binary()) throw Error("right() on a non-binary node");
    return Formula(node_->b);
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
        case Kind::Atom:
            return a.node_->name == b.node_->name;
        case Kind::Top:
        case Kind::Bottom:
            return true;
        case Kind::Not:
            return Formula(a.node_->a) == Formula(b.node_->a);
        default:
            return Formula(a.node_->a) == Formula(b.node_->a) &&
                   Formula(a.node_->b) == Formula(b.node_->b);
    }
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t {
    Bang, Amp, Pipe, Arrow, BiArrow, Equal, LParen, RParen, TopLit, BotLit, Ident, End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '!': out.push_back({Tok::Bang, "!", i}); ++i; break;
            case '&': out.push_back({Tok::Amp, "&", i}); ++i; break;
            case '|': out.push_back({Tok::Pipe, "|", i}); ++i; break;
            case '(': out.push_back({Tok::LParen, "(", i}); ++i; break;
            case ')': out.push_back({Tok::RParen, ")", i}); ++i; break;
            case '=': out.push_back({Tok::Equal, "=", i}); ++i; break;
            case '-':
                if (i + 1 < s.size() && s[i + 1] == '>') {
                    out.push_back({Tok::Arrow, "->", i});
                    i += 2;
                } else {
                    throw ParseError("stray '-'", i, {"'->'"});
                }
                break;
            case '<':
                if (s.substr(i, 3) == "<->") {
                    out.push_back({Tok::BiArrow, "<->", i});
                    i += 3;
                } else {
                    throw ParseError("stray '<'", i, {"'<->'"});
                }
                break;
            default:
                if (std::isalpha(static_cast<unsigned char>(c))) {
                    std::size_t j = i + 1;
                    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                    std::string word(s.substr(i, j - i));
                    if (word == "T")
                        out.push_back({Tok::TopLit, "T", i});
                    else if (word == "F")
                        out.push_back({Tok::BotLit, "F", i});
                    else
                        out.push_back({Tok::Ident, std::move(word), i});
                    i = j;
                } else {
                    throw ParseError(std::string("unexpected character '") + c + "'", i, {});
                }
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula run() {
        Formula f = parse_iff();
        const Token& t = peek();
        if (t.kind != Tok::End)
            throw ParseError("unexpected " + describe(t), t.pos,
                             {"'&'", "'|'", "'->'", "'<->'", "'='", "end of input"});
        return f;
    }

private:
    const Token& peek() const { return toks_[p_]; }
    void advance() { ++p_; }

    Formula parse_iff() {
        Formula f = parse_imp();
        while (peek().kind == Tok::BiArrow || peek().kind == Tok::Equal) {
            bool bi = peek().kind == Tok::BiArrow;
            advance();
            Formula r = parse_imp();
            f = bi ? Formula::biconditional(std::move(f), std::move(r))
                   : Formula::identity(std::move(f), std::move(r));
        }
        return f;
    }

    Formula parse_imp() {
        Formula f = parse_or();
        if (peek().kind == Tok::Arrow) {
            advance();
            return Formula::implication(std::move(f), parse_imp());  // right-associative
        }
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (peek().kind == Tok::Pipe) {
            advance();
            f = Formula::disjunction(std::move(f), parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (peek().kind == Tok::Amp) {
            advance();
            f = Formula::conjunction(std::move(f), parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Bang:
                advance();
                return Formula::negation(parse_unary());
            case Tok::LParen: {
                advance();
                Formula f = parse_iff();
                const Token& close = peek();
                if (close.kind != Tok::RParen)
                    throw ParseError("unexpected " + describe(close), close.pos, {"')'"});
                advance();
                return f;
            }
            case Tok::TopLit:
                advance();
                return Formula::top();
            case Tok::BotLit:
                advance();
                return Formula::bottom();
            case Tok::Ident: {
                Formula f = Formula::atom(t.text);
                advance();
                return f;
            }
            default:
                throw ParseError("unexpected " + describe(t), t.pos,
                                 {"'!'", "'('", "'T'", "'F'", "an identifier"});
        }
    }

    std::vector<Token> toks_;
    std::size_t p_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).run(); }

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

int precedence_of(Kind k) {
    switch (k) {
        case Kind::Iff:
        case Kind::Identity: return 1;
        case Kind::Implies: return 2;
        case Kind::Or: return 3;
        case Kind::And: return 4;
        case Kind::Not: return 5;
        default: return 6;  // leaves never need parentheses
    }
}

const char* op_text(Kind k) {
    switch (k) {
        case Kind::Iff: return " <-> ";
        case Kind::Identity: return " = ";
        case Kind::Implies: return " -> ";
        case Kind::Or: return " | ";
        case Kind::And: return " & ";
        default: return "";
    }
}

void render_into(const Formula& f, int min_prec, std::string& out) {
    int prec = precedence_of(f.kind());
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (f.kind()) {
        case Kind::Atom: out += f.atom_name(); break;
        case Kind::Top: out += 'T'; break;
        case Kind::Bottom: out += 'F'; break;
        case Kind::Not:
            out += '!';
            render_into(f.child(), precedence_of(Kind::Not), out);
            break;
        case Kind::Implies:
            // right-associative: parenthesize a nested implication on the left
            render_into(f.left(), prec + 1, out);
            out += op_text(f.kind());
            render_into(f.right(), prec, out);
            break;
        default:
            // left-associative binaries
            render_into(f.left(), prec, out);
            out += op_text(f.kind());
            render_into(f.right(), prec + 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
    std::string out;
    render_into(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Atoms and evaluation
// ---------------------------------------------------------------------------

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out,
                   std::unordered_map<std::string, bool>& seen) {
    switch (f.kind()) {
        case Kind::Atom:
            if (seen.emplace(f.atom_name(), true).second) out.push_back(f.atom_name());
            break;
        case Kind::Top:
        case Kind::Bottom:
            break;
        case Kind::Not:
            collect_atoms(f.child(), out, seen);
            break;
        default:
            collect_atoms(f.left(), out, seen);
            collect_atoms(f.right(), out, seen);
            break;
    }
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
    std::vector<std::string> out;
    std::unordered_map<std::string, bool> seen;
    collect_atoms(f, out, seen);
    return out;
}

bool eval2(const Formula& f, const Valuation2& v) {
    switch (f.kind()) {
        case Kind::Atom: {
            auto it = v.find(f.atom_name());
            if (it == v.end()) throw MissingAtomError(f.atom_name());
            return it->second;
        }
        case Kind::Top: return true;
        case Kind::Bottom: return false;
        case Kind::Not: return !eval2(f.child(), v);
        default: {
            // Evaluate both sides unconditionally so missing atoms are always caught.
            bool l = eval2(f.left(), v);
            bool r = eval2(f.right(), v);
            switch (f.kind()) {
                case Kind::And: return l && r;
                case Kind::Or: return l || r;
                case Kind::Implies: return !l || r;
                default: return l == r;  // Iff, Identity
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration (postfix-compiled evaluator)
// ---------------------------------------------------------------------------

namespace {

// Masks enumerate valuations lexicographically: atom i (in the given order)
// lives at bit (n-1-i) and false sorts before true.
struct Program {
    struct Ins {
        Kind kind;
        int bit = -1;  // Atom only
    };
    std::vector<Ins> code;

    static Program compile(const Formula& f, const std::map<std::string, int, std::less<>>& index,
                           int n_atoms) {
        Program p;
        p.emit(f, index, n_atoms);
        return p;
    }

    bool eval(std::uint32_t mask) const {
        bool stack[64];
        int sp = 0;
        for (const Ins& ins : code) {
            switch (ins.kind) {
                case Kind::Atom: stack[sp++] = (mask >> ins.bit) & 1u; break;
                case Kind::Top: stack[sp++] = true; break;
                case Kind::Bottom: stack[sp++] = false; break;
                case Kind::Not: stack[sp - 1] = !stack[sp - 1]; break;
                case Kind::And: --sp; stack[sp - 1] = stack[sp - 1] && stack[sp]; break;
                case Kind::Or: --sp; stack[sp - 1] = stack[sp - 1] || stack[sp]; break;
                case Kind::Implies: --sp; stack[sp - 1] = !stack[sp - 1] || stack[sp]; break;
                default: --sp; stack[sp - 1] = stack[sp - 1] == stack[sp]; break;
            }
        }
        return stack[0];
    }

private:
    void emit(const Formula& f, const std::map<std::string, int, std::less<>>& index, int n_atoms) {
        switch (f.kind()) {
            case Kind::Atom: {
                auto it = index.find(f.atom_name());
                if (it == index.end()) throw MissingAtomError(f.atom_name());
                code.push_back({Kind::Atom, n_atoms - 1 - it->second});
                break;
            }
            case Kind::Top:
            case Kind::Bottom:
                code.push_back({f.kind()});
                break;
            case Kind::Not:
                emit(f.child(), index, n_atoms);
                code.push_back({Kind::Not});
                break;
            default:
                emit(f.left(), index, n_atoms);
                emit(f.right(), index, n_atoms);
                code.push_back({f.kind()});
                break;
        }
    }
};

std::map<std::string, int, std::less<>> index_of(const std::vector<std::string>& names) {
    std::map<std::string, int, std::less<>> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<int>(i));
    return index;
}

void check_bound(std::size_t n) {
    if (n > kMaxAtoms2) throw TooManyAtomsError(n, kMaxAtoms2);
}

}  // namespace

bool is_tautology(const Formula& f) {
    std::vector<std::string> names = atoms(f);
    check_bound(names.size());
    const int n = static_cast<int>(names.size());
    Program prog = Program::compile(f, index_of(names), n);
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 0; mask < total; ++mask)
        if (!prog.eval(mask)) return false;
    return true;
}

bool equivalent2(const Formula& f, const Formula& g) {
    std::vector<std::string> names = atoms(f);
    {
        std::unordered_map<std::string, bool> seen;
        for (const auto& a : names) seen.emplace(a, true);
        for (const auto& a : atoms(g))
            if (seen.emplace(a, true).second) names.push_back(a);
    }
    check_bound(names.size());
    const int n = static_cast<int>(names.size());
    auto index = index_of(names);
    Program pf = Program::compile(f, index, n);
    Program pg = Program::compile(g, index, n);
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 0; mask < total; ++mask)
        if (pf.eval(mask) != pg.eval(mask)) return false;
    return true;
}

std::vector<Valuation2> find_valuations(std::span<const Formula> constraints,
                                        const Formula& require) {
    std::vector<std::string> names = atoms(require);
    {
        std::unordered_map<std::string, bool> seen;
        for (const auto& a : names) seen.emplace(a, true);
        for (const Formula& c : constraints)
            for (const auto& a : atoms(c))
                if (seen.emplace(a, true).second) names.push_back(a);
    }
    std::sort(names.begin(), names.end());
    check_bound(names.size());
    const int n = static_cast<int>(names.size());
    auto index = index_of(names);

    std::vector<Program> progs;
    progs.reserve(constraints.size() + 1);
    for (const Formula& c : constraints) progs.push_back(Program::compile(c, index, n));
    progs.push_back(Program::compile(require, index, n));

    std::vector<Valuation2> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (const Program& p : progs)
            if (!p.eval(static_cast<std::uint32_t>(mask))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Valuation2 v;
        for (int i = 0; i < n; ++i)
            v.emplace(names[static_cast<std::size_t>(i)], ((mask >> (n - 1 - i)) & 1u) != 0);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace qlogic
