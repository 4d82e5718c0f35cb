#pragma once

#include <stdexcept>
#include <string>

namespace hierat {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

// Antiderivative requested outside the supported class (polynomials plus
// pure powers x^-k, k >= 2). Carries which rule failed.
struct NonElementaryAntiderivative : Error {
  explicit NonElementaryAntiderivative(const std::string& msg) : Error(msg) {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& msg) : Error(msg) {}
};

// A system evaluation needed a constant (C0/C1, beta/delta) that was not set.
struct MissingConstants : Error {
  explicit MissingConstants(const std::string& msg) : Error(msg) {}
};

struct UnsupportedSystem : Error {
  explicit UnsupportedSystem(const std::string& msg) : Error(msg) {}
};

struct UnsupportedVariant : Error {
  explicit UnsupportedVariant(const std::string& msg) : Error(msg) {}
};

// Rescaling to unit parameter sum needs h to be a positive square in Q.
struct NonSquareScale : Error {
  explicit NonSquareScale(const std::string& msg) : Error(msg) {}
};

struct ZeroH : Error {
  explicit ZeroH(const std::string& msg = "parameter sum is zero, no rescale exists") : Error(msg) {}
};

struct RowOutOfRange : Error {
  explicit RowOutOfRange(const std::string& msg) : Error(msg) {}
};

struct InvalidArrangement : Error {
  explicit InvalidArrangement(const std::string& msg) : Error(msg) {}
};

// Constant-seed construction hit a vanishing parameter-sum block (A0 or A1).
struct ZeroA : Error {
  explicit ZeroA(const std::string& msg) : Error(msg) {}
};

// A reflection would divide by an identically zero component while its
// parameter is nonzero. Carries the word prefix that led there.
struct ZeroPivot : Error {
  explicit ZeroPivot(const std::string& msg) : Error(msg) {}
};

struct DegreeOverflow : Error {
  explicit DegreeOverflow(const std::string& msg) : Error(msg) {}
};

// A transformed tuple failed the residual oracle mid-word.
struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& msg) : Error(msg) {}
};

struct DepthExhausted : Error {
  explicit DepthExhausted(const std::string& msg) : Error(msg) {}
};

// Variable change z = zeta(x) must be nonconstant so the chain rule can divide by zeta'.
struct InvalidVariableMap : Error {
  explicit InvalidVariableMap(const std::string& msg) : Error(msg) {}
};

struct InterpolationDegenerate : Error {
  explicit InterpolationDegenerate(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace hierat
