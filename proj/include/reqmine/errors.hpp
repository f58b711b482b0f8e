#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reqmine {

// Base class for all recoverable errors raised by the library. The CLI maps
// these to exit code 1; InternalError maps to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// --- survey ingest ---

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message), line(line), column(column) {}

    std::size_t line;    // 1-based line in the input, 0 if not applicable
    std::size_t column;  // 1-based field index, 0 if not applicable
};

class EmptyInput : public ParseError {
public:
    explicit EmptyInput(const std::string& message) : ParseError(message, 0, 0) {}
};

class DuplicateHeader : public ParseError {
public:
    DuplicateHeader(const std::string& message, std::size_t column)
        : ParseError(message, 1, column) {}
};

class EmptyHeaderName : public ParseError {
public:
    explicit EmptyHeaderName(const std::string& message, std::size_t column)
        : ParseError(message, 1, column) {}
};

class RaggedRow : public ParseError {
public:
    RaggedRow(const std::string& message, std::size_t line) : ParseError(message, line, 0) {}
};

class NonBinaryValue : public ParseError {
public:
    NonBinaryValue(const std::string& message, std::size_t line, std::size_t column)
        : ParseError(message, line, column) {}
};

// --- apriori ---

class ItemOutOfRange : public Error {
public:
    using Error::Error;
};

class MixedSizes : public Error {
public:
    using Error::Error;
};

// --- requirement matrix ---

class UnknownRequirement : public Error {
public:
    using Error::Error;
};

// --- correlation ---

class LengthMismatch : public Error {
public:
    using Error::Error;
};

// A column with zero variance (all zeros or all ones) makes the Pearson
// denominator vanish. Callers either propagate this or downgrade it to a
// per-edge warning, as the pipeline does.
class DegenerateVariance : public Error {
public:
    using Error::Error;
};

// Violation of an invariant the library checks on its own output.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace reqmine
