#pragma once

#include <stdexcept>
#include <string>

namespace kirbylab {

// Base class for all domain errors raised by the library. `code()` is a
// stable machine-readable tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define KIRBYLAB_DEFINE_ERROR(NAME)                        \
  class NAME : public Error {                              \
  public:                                                  \
    explicit NAME(const std::string& msg)                  \
        : Error(#NAME, msg) {}                             \
  }

KIRBYLAB_DEFINE_ERROR(DescriptorMismatch);
KIRBYLAB_DEFINE_ERROR(DivisionByZero);
KIRBYLAB_DEFINE_ERROR(NoSuchRoot);
KIRBYLAB_DEFINE_ERROR(DimensionMismatch);
KIRBYLAB_DEFINE_ERROR(KernelNotOneDimensional);
KIRBYLAB_DEFINE_ERROR(NormalizationFailure);
KIRBYLAB_DEFINE_ERROR(NotGrouplike);
KIRBYLAB_DEFINE_ERROR(IdentityViolated);
KIRBYLAB_DEFINE_ERROR(NotInvertible);
KIRBYLAB_DEFINE_ERROR(AxiomFailed);
KIRBYLAB_DEFINE_ERROR(ConsistencyFailure);
KIRBYLAB_DEFINE_ERROR(NotARepresentation);
KIRBYLAB_DEFINE_ERROR(NotInL);
KIRBYLAB_DEFINE_ERROR(NotNormalizedKirby);
KIRBYLAB_DEFINE_ERROR(NotADivisor);
KIRBYLAB_DEFINE_ERROR(BadCharacteristic);
KIRBYLAB_DEFINE_ERROR(NoRoot);
KIRBYLAB_DEFINE_ERROR(OpenStrand);
KIRBYLAB_DEFINE_ERROR(WidthUnderflow);
KIRBYLAB_DEFINE_ERROR(InvalidComponent);
KIRBYLAB_DEFINE_ERROR(ExponentialGuard);
KIRBYLAB_DEFINE_ERROR(DeltaVanishes);
KIRBYLAB_DEFINE_ERROR(WidthCapExceeded);
KIRBYLAB_DEFINE_ERROR(ParseError);

#undef KIRBYLAB_DEFINE_ERROR

}  // namespace kirbylab
