#pragma once

#include <stdexcept>
#include <string>

namespace qdeform {

/// Base class for all domain errors raised by this library. Anything not
/// derived from this (std::invalid_argument etc.) indicates caller misuse.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A deformation parameter sits on a forbidden value (q = 0, q = -1, p = 0).
class DegenerateParameterError : public Error {
  public:
    explicit DegenerateParameterError(const std::string& msg) : Error(msg) {}
};

/// Parameters are near, but not exactly at, a singular locus of a bracket
/// denominator; double precision would lose all significant digits.
class IllConditionedError : public Error {
  public:
    explicit IllConditionedError(const std::string& msg) : Error(msg) {}
};

/// A descent-path coefficient vanished before the requested depth, so the
/// target state is not reachable from the highest weight.
class ZeroNormError : public Error {
  public:
    explicit ZeroNormError(const std::string& msg) : Error(msg) {}
};

/// Subrepresentation extraction was requested at a depth whose lowering
/// coefficient does not vanish within tolerance.
class NotARootError : public Error {
  public:
    explicit NotARootError(const std::string& msg) : Error(msg) {}
};

/// The locus objective has constant sign on the search bracket.
class NoSignChangeError : public Error {
  public:
    explicit NoSignChangeError(const std::string& msg) : Error(msg) {}
};

/// Root refinement did not reach the tolerance in the allowed iterations.
class MaxIterationsError : public Error {
  public:
    explicit MaxIterationsError(const std::string& msg) : Error(msg) {}
};

/// Neither reading of an ambiguous relation satisfies the commutator; this
/// signals a builder bug, not a property of the algebra.
class UnresolvedConventionError : public Error {
  public:
    explicit UnresolvedConventionError(const std::string& msg) : Error(msg) {}
};

/// The requested report is only defined for real deformation parameters.
class NotApplicableError : public Error {
  public:
    explicit NotApplicableError(const std::string& msg) : Error(msg) {}
};

/// A result left the range of double precision (the public API admits no
/// NaN or infinity in or out).
class OverflowError : public Error {
  public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

}  // namespace qdeform
