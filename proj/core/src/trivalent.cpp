#include "qlogic/trivalent.hpp"

#include <algorithm>
#include <unordered_map>

namespace qlogic {

char to_char(TruthValue3 v) {
    switch (v) {
        case TruthValue3::True: return 't';
        case TruthValue3::False: return 'f';
        default: return 'u';
    }
}

TruthValue3 identity_value(TruthValue3 x, TruthValue3 y) {
    if (x == TruthValue3::Undefined || y == TruthValue3::Undefined) return TruthValue3::Undefined;
    return x == y ? TruthValue3::True : TruthValue3::False;
}

namespace {

constexpr TruthValue3 U = TruthValue3::Undefined;

TruthValue3 of_bool(bool b) { return b ? TruthValue3::True : TruthValue3::False; }

bool as_bool(TruthValue3 v) { return v == TruthValue3::True; }

}  // namespace

TruthValue3 eval3(const Formula& f, const Valuation3& v) {
    switch (f.kind()) {
        case Kind::Atom: {
            auto it = v.find(f.atom_name());
            if (it == v.end()) throw MissingAtomError(f.atom_name());
            return it->second;
        }
        case Kind::Top: return TruthValue3::True;
        case Kind::Bottom: return TruthValue3::False;
        case Kind::Not: {
            TruthValue3 c = eval3(f.child(), v);
            if (c == U) return U;
            return of_bool(!as_bool(c));
        }
        default: {
            // No short-circuiting: u on either side absorbs the compound.
            TruthValue3 l = eval3(f.left(), v);
            TruthValue3 r = eval3(f.right(), v);
            if (l == U || r == U) return U;
            switch (f.kind()) {
                case Kind::And: return of_bool(as_bool(l) && as_bool(r));
                case Kind::Or: return of_bool(as_bool(l) || as_bool(r));
                case Kind::Implies: return of_bool(!as_bool(l) || as_bool(r));
                default: return of_bool(l == r);  // Iff, Identity
            }
        }
    }
}

bool equivalent3(const Formula& f, const Formula& g) {
    std::vector<std::string> names = atoms(f);
    {
        std::unordered_map<std::string, bool> seen;
        for (const auto& a : names) seen.emplace(a, true);
        for (const auto& a : atoms(g))
            if (seen.emplace(a, true).second) names.push_back(a);
    }
    if (names.size() > kMaxAtoms3) throw TooManyAtomsError(names.size(), kMaxAtoms3);

    const std::size_t n = names.size();
    Valuation3 v;
    for (const auto& a : names) v.emplace(a, TruthValue3::True);

    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;

    static constexpr TruthValue3 order[3] = {TruthValue3::True, TruthValue3::False,
                                             TruthValue3::Undefined};
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t rest = k;
        for (std::size_t i = 0; i < n; ++i) {
            v[names[i]] = order[rest % 3];
            rest /= 3;
        }
        if (eval3(f, v) != eval3(g, v)) return false;
    }
    return true;
}

}  // namespace qlogic
