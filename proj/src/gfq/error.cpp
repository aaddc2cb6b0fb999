#include "cubicff/error.hpp"

namespace cubicff {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::WrongResidue: return "WrongResidue";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ReducibleInput: return "ReducibleInput";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::DegenerateArtinSchreier: return "DegenerateArtinSchreier";
    case ErrorKind::CubeInput: return "CubeInput";
    case ErrorKind::InseparableInput: return "InseparableInput";
    case ErrorKind::NotGalois: return "NotGalois";
    case ErrorKind::NotGaloisShape: return "NotGaloisShape";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DegenerateA: return "DegenerateA";
    case ErrorKind::NotOnConic: return "NotOnConic";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::ConstantExtension: return "ConstantExtension";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::BasisUnavailable: return "BasisUnavailable";
    case ErrorKind::NotStandardForm: return "NotStandardForm";
    case ErrorKind::NoNormWitness: return "NoNormWitness";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::Internal, std::string("internal check failed: ") + what);
}

}  // namespace cubicff
