#pragma once

#include <stdexcept>
#include <string>

namespace quadtor {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QUADTOR_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                              \
    Name() : Error(#Name) {}                                         \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

QUADTOR_DEFINE_ERROR(DivisionByZero);
QUADTOR_DEFINE_ERROR(ZeroInput);
QUADTOR_DEFINE_ERROR(NonIntegralInput);
QUADTOR_DEFINE_ERROR(NotCoprime);
QUADTOR_DEFINE_ERROR(NotSquarefree);
QUADTOR_DEFINE_ERROR(DegreeTooLarge);
QUADTOR_DEFINE_ERROR(PointNotOnCurve);
QUADTOR_DEFINE_ERROR(ZeroTwist);
QUADTOR_DEFINE_ERROR(BadReduction);
QUADTOR_DEFINE_ERROR(DenominatorClash);
QUADTOR_DEFINE_ERROR(FieldTooLarge);
QUADTOR_DEFINE_ERROR(InsufficientGoodPrimes);
QUADTOR_DEFINE_ERROR(NontrivialTwoTorsion);
QUADTOR_DEFINE_ERROR(TheoremViolation);
QUADTOR_DEFINE_ERROR(UnsupportedField);
QUADTOR_DEFINE_ERROR(IncompatibleOrders);
QUADTOR_DEFINE_ERROR(DivisorNotOnCurve);
QUADTOR_DEFINE_ERROR(GroupTooLarge);
QUADTOR_DEFINE_ERROR(BadReductionPrime);
QUADTOR_DEFINE_ERROR(DimensionMismatch);
QUADTOR_DEFINE_ERROR(UnknownIdentity);
QUADTOR_DEFINE_ERROR(HeightTooLarge);

#undef QUADTOR_DEFINE_ERROR

}  // namespace quadtor
