#pragma once

#include <stdexcept>
#include <string>

namespace gait {

/// Base class for all errors raised by the gaitlevels library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- ingest ------------------------------------------------------------

class EmptyFileError : public Error {
public:
    explicit EmptyFileError(const std::string& source)
        : Error("empty input: " + source + " has no data rows") {}
};

class MissingColumnError : public Error {
public:
    explicit MissingColumnError(const std::string& column)
        : Error("missing required column: " + column), column_(column) {}
    const std::string& column() const { return column_; }

private:
    std::string column_;
};

class BadLabelError : public Error {
public:
    BadLabelError(std::size_t row, const std::string& value, const std::string& allowed)
        : Error("row " + std::to_string(row) + ": invalid label \"" + value +
                "\" (allowed: " + allowed + ")"),
          row_(row), value_(value) {}
    std::size_t row() const { return row_; }
    const std::string& value() const { return value_; }

private:
    std::size_t row_;
    std::string value_;
};

class NonNumericError : public Error {
public:
    NonNumericError(std::size_t row, const std::string& column, const std::string& value)
        : Error("row " + std::to_string(row) + ", column " + column +
                ": \"" + value + "\" is not a finite number") {}
};

class DuplicateIdError : public Error {
public:
    DuplicateIdError(std::size_t row, long long id)
        : Error("row " + std::to_string(row) + ": duplicate obs_id " + std::to_string(id)) {}
};

class CsvFormatError : public Error {
public:
    explicit CsvFormatError(const std::string& msg) : Error("malformed CSV: " + msg) {}
};

class EmptyAfterFilterError : public Error {
public:
    EmptyAfterFilterError() : Error("no rows remain after filtering") {}
};

// -- preprocessing / statistics -----------------------------------------

class EmptyColumnError : public Error {
public:
    explicit EmptyColumnError(const std::string& what_col)
        : Error("empty column: " + what_col) {}
};

class EmptyCellError : public Error {
public:
    EmptyCellError(const std::string& condition, const std::string& session)
        : Error("no observations for cell (" + condition + ", " + session + ")") {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& context)
        : Error("division by zero: " + context) {}
};

class TooFewPointsError : public Error {
public:
    TooFewPointsError(std::size_t have, std::size_t need)
        : Error("trajectory has " + std::to_string(have) + " points, need at least " +
                std::to_string(need)) {}
};

// -- embedding ----------------------------------------------------------

class KTooLargeError : public Error {
public:
    KTooLargeError(std::size_t k, std::size_t limit)
        : Error("k = " + std::to_string(k) + " exceeds limit " + std::to_string(limit)) {}
};

class FitDivergedError : public Error {
public:
    explicit FitDivergedError(double residual)
        : Error("curve fit diverged: rms residual " + std::to_string(residual)) {}
};

class NonFiniteError : public Error {
public:
    explicit NonFiniteError(const std::string& context)
        : Error("non-finite value in " + context) {}
};

// -- dissociation / stability --------------------------------------------

class ShapeMismatchError : public Error {
public:
    explicit ShapeMismatchError(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

class MissingConditionError : public Error {
public:
    explicit MissingConditionError(const std::string& condition)
        : Error("condition " + condition + " absent from one of the inputs") {}
};

class SessionMismatchError : public Error {
public:
    explicit SessionMismatchError(const std::string& msg)
        : Error("session mismatch: " + msg) {}
};

// -- synth / config -------------------------------------------------------

class InvalidSpecError : public Error {
public:
    explicit InvalidSpecError(const std::string& msg) : Error("invalid generator spec: " + msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io: " + msg) {}
};

} // namespace gait
