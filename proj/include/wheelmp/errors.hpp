#pragma once

#include <stdexcept>
#include <string>

namespace wheelmp {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by an exact zero.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Arithmetic between quadratic-extension values living in different Q(sqrt(d)).
class DiscriminantMismatch : public Error {
public:
    explicit DiscriminantMismatch(const std::string& what) : Error(what) {}
};

/// Rational extraction from a value whose sqrt(d) coefficient is nonzero.
class SurdNotZero : public Error {
public:
    explicit SurdNotZero(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// A hypothesis of a closed-form theorem fails for the given input.
/// The message names the violated hypothesis.
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Invalid domain parameter, e.g. a wheel size below 4.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace wheelmp
