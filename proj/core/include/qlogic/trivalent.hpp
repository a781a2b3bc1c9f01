#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qlogic/formula.hpp"

namespace qlogic {

/// Three-valued truth: t, f, and the gap value u. u is not a third truth
/// degree ranked between the others; it absorbs every connective
/// (weak-Kleene / Bochvar-internal tables).
enum class TruthValue3 : std::uint8_t { True, False, Undefined };

char to_char(TruthValue3 v);  // 't', 'f', 'u'

using Valuation3 = std::map<std::string, TruthValue3, std::less<>>;

/// Largest atom count accepted by the exhaustive three-valued enumeration.
inline constexpr std::size_t kMaxAtoms3 = 15;

/// Weak-Kleene evaluation: any u operand makes the compound u; on {t,f} the
/// connectives agree with eval2. '->' abbreviates (!l | r); '=' and '<->'
/// coincide here (u if either side is u, else t when the sides agree).
/// Constants: T evaluates to t, F to f.
TruthValue3 eval3(const Formula& f, const Valuation3& v);

/// True iff eval3 agrees on all 3^n valuations of the combined atoms.
bool equivalent3(const Formula& f, const Formula& g);

/// The identity table by itself: u if x or y is u, t if x == y, f otherwise.
TruthValue3 identity_value(TruthValue3 x, TruthValue3 y);

}  // namespace qlogic
