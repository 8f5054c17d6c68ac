#pragma once

#include <stdexcept>
#include <string>

namespace exalg {

// Machine-readable failure codes. The CLI maps these to exit status 1
// (bad input / unsupported) while structured mathematical verdicts
// (e.g. an infeasible system reported as a result) use exit status 2.
enum class Err {
  NotPrime,
  ReduciblePolynomial,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  NonAssociative,
  NotIdempotent,
  NotIdeal,
  NotAUnit,
  NotASplitting,
  NotASubalgebra,
  NotAComplement,
  NotRegularElement,
  NotMatricial,
  NotSplit,
  NotSimple,
  NotSemisimple,
  NotSeparable,
  InfeasibleSystem,
  CertificateMissing,
  UnsupportedField,
  UnsupportedParameters,
  PreconditionFailed,
  ParseError,
  Internal,
};

const char* err_code(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_code(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace exalg
