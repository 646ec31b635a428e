#pragma once

#include <stdexcept>
#include <string>

namespace avdiff {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: out-of-domain arguments, malformed files, invalid configuration.
/// The CLI maps these to exit status 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A numerical solve that could not produce an answer. CLI exit status 2.
class SolverError : public Error {
public:
    using Error::Error;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A required calendar year is absent from a registration series.
class CoverageError : public ValidationError {
public:
    CoverageError(int year, const std::string& what)
        : ValidationError(what), year_(year) {}
    int year() const noexcept { return year_; }

private:
    int year_;
};

/// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The calibration target is not attainable inside the q bounds.
class BracketError : public SolverError {
public:
    using SolverError::SolverError;
};

class ConvergenceError : public SolverError {
public:
    using SolverError::SolverError;
};

}  // namespace avdiff
