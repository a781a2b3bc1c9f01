#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlogic {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula text. Carries the offset of the offending token and the
/// token set that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position,
               std::vector<std::string> expected)
        : Error(compose(message, position, expected)),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string compose(const std::string& message, std::size_t position,
                               const std::vector<std::string>& expected) {
        std::string out = "syntax error at position " + std::to_string(position) + ": " + message;
        if (!expected.empty()) {
            out += "; expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
                out += expected[i];
            }
        }
        return out;
    }

    std::size_t position_;
    std::vector<std::string> expected_;
};

/// A valuation, assignment or model does not cover an atom of the formula.
class MissingAtomError : public Error {
public:
    explicit MissingAtomError(const std::string& atom)
        : Error("no value assigned to atom '" + atom + "'"), atom_(atom) {}

    const std::string& atom() const noexcept { return atom_; }

private:
    std::string atom_;
};

/// Exhaustive enumeration refused: the atom count exceeds the documented bound.
class TooManyAtomsError : public Error {
public:
    TooManyAtomsError(std::size_t count, std::size_t limit)
        : Error("formula has " + std::to_string(count) + " atoms; enumeration is limited to " +
                std::to_string(limit)),
          count_(count),
          limit_(limit) {}

    std::size_t count() const noexcept { return count_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t count_;
    std::size_t limit_;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// A state vector that must be normalized is not.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// Collapse onto a branch the state has no amplitude in.
class ZeroAmplitudeError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The identity connective '=' used where only lattice connectives are defined.
class UnsupportedConnectiveError : public Error {
public:
    using Error::Error;
};

class UnknownPointError : public Error {
public:
    using Error::Error;
};

/// Invariant violation in user-supplied data (matrices, models, names, tolerances).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace qlogic
