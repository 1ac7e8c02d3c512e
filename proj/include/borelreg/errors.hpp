#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace borelreg {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in rings with a different number of variables.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// A well-formed input lies outside the mathematical domain of the operation
/// (zero ideal, unit ideal, unit monomial, bad index, non-chain Ass, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ZeroIdealError : public DomainError {
public:
    ZeroIdealError(const std::string& op)
        : DomainError(op + ": undefined for the zero ideal") {}
};

class UnitIdealError : public DomainError {
public:
    UnitIdealError(const std::string& op)
        : DomainError(op + ": undefined for the unit ideal (1)") {}
};

class UnitMonomialError : public DomainError {
public:
    UnitMonomialError(const std::string& op)
        : DomainError(op + ": undefined for the unit monomial 1") {}
};

class IndexOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

class NotAChain : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidField : public DomainError {
public:
    using DomainError::DomainError;
};

/// The multidegree lattice of a Betti computation exceeds the cell budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t budget)
        : Error(what), budget(budget) {}
    std::uint64_t budget;
};

/// Syntax or range error in the ideal text format. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Two computation routes that must agree disagreed. A bug, never user error.
class SelfCheckFailed : public Error {
public:
    using Error::Error;
};

}  // namespace borelreg
