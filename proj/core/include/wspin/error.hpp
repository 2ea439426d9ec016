#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wspin {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomial grammar, rational literals, curve files).
// Carries the byte offset of the offending token in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A polynomial whose monomials all cancelled; the zero polynomial is not a
// valid superpotential and is rejected at construction time.
class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial") {}
};

// Well-formed input lying outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// The linear system B q = 1 has no rational solution.
class NoWeightSystem : public DomainError {
public:
    using DomainError::DomainError;
};

// The exponent matrix has rank < t, so the weights are not uniquely determined.
class NonUniqueWeights : public DomainError {
public:
    using DomainError::DomainError;
};

// A solved weight falls outside the open interval (0, 1).
class WeightOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

// An operation restricted to t <= 2 variables was called with more.
class UnsupportedArity : public DomainError {
public:
    using DomainError::DomainError;
};

// A matrix that must have full column rank does not.
class RankDeficient : public DomainError {
public:
    using DomainError::DomainError;
};

// A marked-point decoration is not an element of the diagonal symmetry group.
class DecorationNotInGroup : public DomainError {
public:
    using DomainError::DomainError;
};

// A weight vector handed to the index-change count has an integer component,
// i.e. it touches the spectrum of the model operator.
class SpectrumTouched : public DomainError {
public:
    using DomainError::DomainError;
};

// The integrability exponent p lies outside the interval required by the
// index-shift statement.
class POutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

// A residue evaluation needs a boundary value that was not supplied.
class MissingBoundaryValue : public DomainError {
public:
    using DomainError::DomainError;
};

// A scalar parameter (r, rho, u0, C, window, scaling vector, ...) violates a
// documented precondition.
class InvalidParameter : public DomainError {
public:
    using DomainError::DomainError;
};

// Numeric failure: the adaptive quadrature could not meet its tolerance.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

}  // namespace wspin
