#pragma once

#include <stdexcept>
#include <string>

namespace lightframe {

/// Base class for all library errors. `name()` is the stable error
/// identifier used by the CLI when reporting on the diagnostic stream.
class Error : public std::runtime_error {
public:
    const char* name() const noexcept { return name_; }

protected:
    Error(const char* name, const std::string& message)
        : std::runtime_error(message), name_(name) {}

private:
    const char* name_;
};

/// An argument violates a domain precondition (negative energy ratio,
/// nonpositive mass, non-finite value, ...).
class InvalidInput final : public Error {
public:
    explicit InvalidInput(const std::string& message)
        : Error("InvalidInput", message) {}
};

/// A velocity fraction with |v/c| >= 1 was requested for a massive body.
class SuperluminalBoost final : public Error {
public:
    explicit SuperluminalBoost(const std::string& message)
        : Error("SuperluminalBoost", message) {}
};

/// The photon would carry at least half the emitter's rest energy; the
/// emitter's final rest mass would not be real.
class PhotonTooEnergetic final : public Error {
public:
    explicit PhotonTooEnergetic(const std::string& message)
        : Error("PhotonTooEnergetic", message) {}
};

/// An interval labelled with one frame was used where another frame was
/// required.
class FrameMismatch final : public Error {
public:
    explicit FrameMismatch(const std::string& message)
        : Error("FrameMismatch", message) {}
};

/// A config document failed lexical/syntactic parsing. Carries the
/// 1-based line number of the offending line.
class ParseError final : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("ParseError", "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A config document parsed but violates the configuration invariants
/// (missing or conflicting keys).
class ConfigError final : public Error {
public:
    explicit ConfigError(const std::string& message)
        : Error("ConfigError", message) {}
};

}  // namespace lightframe
