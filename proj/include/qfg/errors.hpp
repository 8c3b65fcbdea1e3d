// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfg {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- graph construction / contraction ---

class InvalidAlphabet : public Error {
public:
    using Error::Error;
};

class DegreeViolation : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class EmptyBox : public Error {
public:
    using Error::Error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Contraction or enumeration would exceed a configured size cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

// --- models and measurements ---

class InvalidModel : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

class IncompleteKraus : public Error {
public:
    using Error::Error;
};

class InvalidObservation : public Error {
public:
    using Error::Error;
};

class OutcomeOutOfRange : public Error {
public:
    using Error::Error;
};

class ZeroProbabilityOutcome : public Error {
public:
    using Error::Error;
};

class ZeroProbabilityPrefix : public Error {
public:
    using Error::Error;
};

// --- model file parsing ---

// Base for everything parse_model can throw; carries the document path
// of the offending element ("$.stages[0].unitary[2]" style).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string path)
        : Error(message), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : ParseError(message, "$"), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownVersion : public ParseError {
public:
    using ParseError::ParseError;
};

class MissingField : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace qfg
