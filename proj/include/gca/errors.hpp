// Exception hierarchy shared by every module of the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gca {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input problems: malformed text, inconsistent dimensions, bad indices.
class InputError : public Error {
public:
    using Error::Error;
};

// A computed object violates a mathematical property the library relies on.
class MathError : public Error {
public:
    using Error::Error;
};

class TableMismatch : public InputError {
public:
    TableMismatch() : InputError("operands live over different variable tables") {}
};

class UnknownSymbol : public InputError {
public:
    explicit UnknownSymbol(const std::string& name) : InputError("unknown symbol '" + name + "'") {}
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class InvalidDivisors : public InputError {
public:
    using InputError::InputError;
};

class NotSkewSymmetrizable : public InputError {
public:
    using InputError::InputError;
};

class NotSkewSymmetric : public InputError {
public:
    using InputError::InputError;
};

class NonFrozenSupport : public InputError {
public:
    using InputError::InputError;
};

class FrozenVertexMutation : public InputError {
public:
    using InputError::InputError;
};

class ValidationError : public InputError {
public:
    using InputError::InputError;
};

// Parse failure with a 1-based line and column.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class CorrespondenceViolation : public InputError {
public:
    using InputError::InputError;
};

class InexactDivision : public MathError {
public:
    using MathError::MathError;
};

class Overflow : public MathError {
public:
    using MathError::MathError;
};

class FoldingViolation : public MathError {
public:
    FoldingViolation(const std::string& what, std::size_t class_index)
        : MathError(what), class_index_(class_index) {}
    std::size_t class_index() const { return class_index_; }

private:
    std::size_t class_index_;
};

class HomogeneityFailure : public MathError {
public:
    using MathError::MathError;
};

class StructureViolation : public MathError {
public:
    using MathError::MathError;
};

class GroupCoherenceViolation : public MathError {
public:
    using MathError::MathError;
};

// Outcome of a verification routine that reports instead of throwing.
struct CheckResult {
    bool ok = true;
    std::string detail;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

}  // namespace gca
