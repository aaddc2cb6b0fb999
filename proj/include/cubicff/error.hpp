#pragma once

#include <stdexcept>
#include <string>

namespace cubicff {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldMismatch,
  WrongCharacteristic,
  WrongResidue,
  ZeroInput,
  ZeroPolynomial,
  DivisionByZero,
  NegativeValuation,
  ParseError,
  ReducibleInput,
  ZeroConstantTerm,
  DegenerateArtinSchreier,
  CubeInput,
  InseparableInput,
  NotGalois,
  NotGaloisShape,
  NotCoprime,
  DegenerateA,
  NotOnConic,
  MixedFields,
  ConstantExtension,
  HypothesisFailed,
  BasisUnavailable,
  NotStandardForm,
  NoNormWitness,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// Throws Internal when an identity that must hold by construction does not.
void ensure(bool condition, const char* what);

}  // namespace cubicff
