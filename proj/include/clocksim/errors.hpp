#pragma once

#include <stdexcept>
#include <string>

namespace clocksim {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal energy too large for the low-energy expansion (|E| >= 0.1*m*c^2).
class ApproximationBreach : public Error {
public:
    using Error::Error;
};

/// Point lies outside the domain of a potential (below a hard floor).
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Grid violates its invariants (non-power-of-two size, empty extent, ...).
class GridInvalid : public Error {
public:
    using Error::Error;
};

/// State and block Hamiltonians disagree on grid or level count.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// Norm drifted beyond tolerance during propagation; signals a bug.
class NonUnitary : public Error {
public:
    using Error::Error;
};

/// Requested eigenstates are not confined by the potential on the grid.
class NotConfining : public Error {
public:
    using Error::Error;
};

/// Potential has no stationary point.
class NoStationaryPoint : public Error {
public:
    using Error::Error;
};

/// A trajectory left the representable range.
class NonFinite : public Error {
public:
    using Error::Error;
};

/// Reference evolution requested for a position-dependent potential.
class NotFree : public Error {
public:
    using Error::Error;
};

/// Generic invalid argument.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Config text could not be parsed. Carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parsed config violates a model invariant; message names the invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Scenario config is incomplete or inconsistent for its kind.
class ConfigInvalid : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace clocksim
